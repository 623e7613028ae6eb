#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "taulike/canonical.hpp"
#include "taulike/linear_order.hpp"
#include "taulike/stream.hpp"

namespace taulike {

/// A finite order-preserving map into one of the canonical orders.
class Embedding {
 public:
  using Assignment = std::pair<ElementId, CanonicalPoint>;

  Embedding() = default;
  Embedding(OrderKind kind, std::vector<Assignment> assignments);

  OrderKind kind() const { return kind_; }
  std::span<const Assignment> assignments() const { return assignments_; }
  std::size_t size() const { return assignments_.size(); }
  bool contains(ElementId x) const { return index_.count(x) != 0; }
  /// Throws NotStabilized if x has no final coordinate in this embedding.
  const CanonicalPoint& at(ElementId x) const;

 private:
  OrderKind kind_ = OrderKind::Omega;
  std::vector<Assignment> assignments_;
  std::unordered_map<ElementId, std::size_t> index_;
};

/// x -> number of L-predecessors. Needs an order that only grows to the right.
Embedding embed_omega(const LinearOrder& order);
/// x -> number of L-successors. Needs an order that only grows to the left.
Embedding embed_omega_star(const LinearOrder& order);
/// x -> (0, #L-predecessors) on the fin-pred side, (1, #L-successors) on the
/// fin-succ side. `sides` is aligned with the positions of `order`; every
/// fin-pred element must precede every fin-succ element.
Embedding embed_omega_plus_omega_star(const LinearOrder& order, std::span<const Side> sides);
/// x -> signed distance from the anchor.
Embedding embed_zeta(const LinearOrder& order);

/// Linearize with the construction matching `kind`, then rank-embed.
/// `budget` counts blocks for omega, omega* and zeta, and enumerated elements
/// for omega+omega*.
Embedding embed_poset(const StreamPoset& stream, OrderKind kind, std::size_t budget);

}  // namespace taulike
