#include "taulike/canonical.hpp"

namespace taulike {

std::string_view to_string(OrderKind kind) noexcept {
  switch (kind) {
    case OrderKind::Omega: return "omega";
    case OrderKind::OmegaStar: return "omega-star";
    case OrderKind::OmegaPlusOmegaStar: return "omega-omega-star";
    case OrderKind::Zeta: return "zeta";
  }
  return "?";
}

std::optional<OrderKind> parse_order_kind(std::string_view text) noexcept {
  if (text == "omega") return OrderKind::Omega;
  if (text == "omega-star") return OrderKind::OmegaStar;
  if (text == "omega-omega-star") return OrderKind::OmegaPlusOmegaStar;
  if (text == "zeta") return OrderKind::Zeta;
  return std::nullopt;
}

std::strong_ordering compare(const CanonicalPoint& a, const CanonicalPoint& b) {
  if (a.kind != b.kind) {
    throw Error(ErrorCode::KindMismatch,
                "cannot compare " + std::string(to_string(a.kind)) + " with " + std::string(to_string(b.kind)));
  }
  switch (a.kind) {
    case OrderKind::Omega:
    case OrderKind::Zeta:
      return a.rank <=> b.rank;
    case OrderKind::OmegaStar:
      return b.rank <=> a.rank;
    case OrderKind::OmegaPlusOmegaStar:
      if (a.side != b.side) return a.side <=> b.side;
      return a.side == 0 ? a.rank <=> b.rank : b.rank <=> a.rank;
  }
  return std::strong_ordering::equal;
}

std::int64_t zeta_from_pair(int side, std::int64_t k) { return side == 0 ? -k - 1 : k; }

std::pair<int, std::int64_t> zeta_to_pair(std::int64_t z) {
  if (z < 0) return {0, -z - 1};
  return {1, z};
}

std::uint64_t zigzag_encode(std::int64_t z) noexcept {
  return z >= 0 ? static_cast<std::uint64_t>(z) * 2 : static_cast<std::uint64_t>(-(z + 1)) * 2 + 1;
}

std::int64_t zigzag_decode(std::uint64_t id) noexcept {
  const auto half = static_cast<std::int64_t>(id / 2);
  return id % 2 == 0 ? half : -half - 1;
}

std::string describe(const CanonicalPoint& p) {
  switch (p.kind) {
    case OrderKind::OmegaPlusOmegaStar:
      return "(" + std::to_string(p.side) + "," + std::to_string(p.rank) + ")";
    default:
      return std::to_string(p.rank);
  }
}

}  // namespace taulike
