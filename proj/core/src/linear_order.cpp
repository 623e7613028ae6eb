#include "taulike/linear_order.hpp"

#include <string>

namespace taulike {

std::string_view to_string(Growth g) noexcept {
  switch (g) {
    case Growth::Fixed: return "fixed";
    case Growth::Right: return "right";
    case Growth::Left: return "left";
    case Growth::BothEnds: return "both-ends";
    case Growth::Middle: return "middle";
  }
  return "?";
}

std::string_view to_string(ExtensionFailure f) noexcept {
  switch (f) {
    case ExtensionFailure::None: return "ok";
    case ExtensionFailure::DuplicateElement: return "duplicate-element";
    case ExtensionFailure::UnknownElement: return "unknown-element";
    case ExtensionFailure::MissingElement: return "missing-element";
    case ExtensionFailure::OrderViolated: return "order-violated";
  }
  return "?";
}

LinearOrder::LinearOrder(std::vector<ElementId> sequence, std::size_t anchor, Growth growth)
    : sequence_(std::move(sequence)), anchor_(anchor), growth_(growth) {
  if (!sequence_.empty() && anchor_ >= sequence_.size()) {
    throw Error(ErrorCode::InvalidArgument, "anchor index out of range");
  }
  index_.reserve(sequence_.size());
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    if (!index_.emplace(sequence_[i], i).second) {
      throw Error(ErrorCode::DuplicateIdError, "element " + std::to_string(sequence_[i]) + " appears twice");
    }
  }
}

std::optional<std::size_t> LinearOrder::index_of(ElementId x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LinearOrder::checked_index(ElementId x) const {
  auto it = index_.find(x);
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownIdError, "element " + std::to_string(x) + " is not in the order");
  }
  return it->second;
}

std::ptrdiff_t LinearOrder::signed_position(ElementId x) const {
  return static_cast<std::ptrdiff_t>(checked_index(x)) - static_cast<std::ptrdiff_t>(anchor_);
}

bool LinearOrder::precedes(ElementId x, ElementId y) const { return checked_index(x) < checked_index(y); }

ExtensionCheck is_linear_extension(std::span<const ElementId> order, const FinitePoset& poset) {
  std::vector<std::size_t> rank(poset.size(), 0);
  std::vector<bool> seen(poset.size(), false);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    auto idx = poset.index_of(order[pos]);
    if (!idx) return {ExtensionFailure::UnknownElement, IdPair{order[pos], order[pos]}};
    if (seen[*idx]) return {ExtensionFailure::DuplicateElement, IdPair{order[pos], order[pos]}};
    seen[*idx] = true;
    rank[*idx] = pos;
  }
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (!seen[i]) {
      const ElementId x = poset.elements()[i];
      return {ExtensionFailure::MissingElement, IdPair{x, x}};
    }
  }
  for (std::size_t i = 0; i < poset.size(); ++i) {
    for (std::size_t j = 0; j < poset.size(); ++j) {
      if (i != j && poset.leq_at(i, j) && rank[i] > rank[j]) {
        return {ExtensionFailure::OrderViolated, IdPair{poset.elements()[i], poset.elements()[j]}};
      }
    }
  }
  return {};
}

}  // namespace taulike
