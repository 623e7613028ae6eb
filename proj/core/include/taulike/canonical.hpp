#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "taulike/error.hpp"

namespace taulike {

/// The four order types handled by the toolkit.
enum class OrderKind { Omega, OmegaStar, OmegaPlusOmegaStar, Zeta };

/// CLI/JSON spelling: "omega", "omega-star", "omega-omega-star", "zeta".
std::string_view to_string(OrderKind kind) noexcept;
std::optional<OrderKind> parse_order_kind(std::string_view text) noexcept;

/// A point of a canonical order.
///
/// Omega and OmegaStar use `rank` as a natural number (ascending and
/// descending respectively). OmegaPlusOmegaStar uses (side, rank): side 0 is
/// the ascending copy of omega and sits below side 1, the descending copy.
/// Zeta uses `rank` as a signed integer.
struct CanonicalPoint {
  OrderKind kind = OrderKind::Omega;
  int side = 0;
  std::int64_t rank = 0;

  static CanonicalPoint omega(std::int64_t k) { return {OrderKind::Omega, 0, k}; }
  static CanonicalPoint omega_star(std::int64_t k) { return {OrderKind::OmegaStar, 0, k}; }
  static CanonicalPoint omega_plus_omega_star(int side, std::int64_t k) {
    return {OrderKind::OmegaPlusOmegaStar, side, k};
  }
  static CanonicalPoint zeta(std::int64_t z) { return {OrderKind::Zeta, 0, z}; }

  friend bool operator==(const CanonicalPoint&, const CanonicalPoint&) = default;
};

/// Total comparison inside one canonical order. Throws KindMismatch across kinds.
std::strong_ordering compare(const CanonicalPoint& a, const CanonicalPoint& b);

inline bool canonical_less(const CanonicalPoint& a, const CanonicalPoint& b) {
  return compare(a, b) == std::strong_ordering::less;
}

/// Fixed isomorphism between zeta written as omega*+omega pairs and signed integers:
/// (0,k) -> -k-1 and (1,k) -> k.
std::int64_t zeta_from_pair(int side, std::int64_t k);
std::pair<int, std::int64_t> zeta_to_pair(std::int64_t z);

/// Zigzag coding of signed integers as element ids: 0,-1,1,-2,2,... -> 0,1,2,3,4,...
std::uint64_t zigzag_encode(std::int64_t z) noexcept;
std::int64_t zigzag_decode(std::uint64_t id) noexcept;

std::string describe(const CanonicalPoint& p);

}  // namespace taulike
