#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "taulike/canonical.hpp"
#include "taulike/linear_order.hpp"
#include "taulike/stream.hpp"

namespace taulike {

/// Default size guard for exhaustive enumeration (10! = 3,628,800 orders).
inline constexpr std::size_t kExhaustiveLimit = 10;
/// Size guard for random_poset.
inline constexpr std::size_t kRandomPosetLimit = 64;

struct ExtensionSet {
  FinitePoset poset;
  /// Canonical order: lexicographic by ascending ids of the minimal-element choices.
  std::vector<LinearOrder> extensions;

  std::size_t size() const { return extensions.size(); }
  bool contains(std::span<const ElementId> order) const;
};

/// Visits every linear extension in canonical order; `visit` returns false to stop.
/// Returns the number visited. Throws TooLarge above `max_size` elements.
std::size_t for_each_linear_extension(const FinitePoset& poset,
                                      const std::function<bool(std::span<const ElementId>)>& visit,
                                      std::size_t max_size = kExhaustiveLimit);

/// Every linear extension, by backtracking over minimal remaining elements in
/// ascending id order. With jobs > 1 the first choice is split across threads;
/// the result is identical either way.
ExtensionSet all_linear_extensions(const FinitePoset& poset, std::size_t max_size = kExhaustiveLimit,
                                   unsigned jobs = 1);

struct ElementCounts {
  ElementId id = 0;
  std::optional<std::size_t> predecessors;  ///< strict
  std::optional<std::size_t> successors;    ///< strict
};

struct TauReport {
  OrderKind kind = OrderKind::Omega;
  std::size_t prefix_size = 0;
  std::vector<ElementCounts> counts;
  std::size_t max_predecessors = 0;
  std::size_t max_successors = 0;
  std::size_t max_interval = 0;
  std::vector<OracleViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// A finite poset is tau-like for every kind; the report carries its counts.
TauReport check_tau_like(const FinitePoset& poset, OrderKind kind);

/// Checks the oracles the kind relies on over the first `count` elements:
/// omega needs finite predecessors, omega* finite successors, omega+omega* a
/// side with the matching finite cone, zeta finite intervals. Counts come from
/// the oracle answers.
TauReport check_tau_like(const StreamPoset& stream, std::size_t count, OrderKind kind);

/// Deterministic random poset on ids 0..n-1: a random permutation, and each
/// pair in permutation order becomes a generator with probability `density`.
/// Uses only raw mt19937_64 output, so results agree across platforms.
FinitePoset random_poset(std::size_t n, double density, std::uint64_t seed);

}  // namespace taulike
