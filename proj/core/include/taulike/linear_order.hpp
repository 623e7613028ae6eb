#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "taulike/poset.hpp"

namespace taulike {

/// How a truncated linear order can still grow. Determines which rank
/// counts are already final.
enum class Growth {
  Fixed,     ///< complete; nothing will be added
  Right,     ///< new elements only at the right end (omega runs)
  Left,      ///< new elements only at the left end (omega* runs)
  BothEnds,  ///< new elements at either end (zeta runs)
  Middle,    ///< new elements only between a left and a right part (omega+omega* runs)
};

std::string_view to_string(Growth g) noexcept;

/// A finite linear order, possibly a truncation of an infinite one.
/// The anchor designates position 0 for signed positions.
class LinearOrder {
 public:
  LinearOrder() = default;
  /// Throws DuplicateIdError if an id repeats, InvalidArgument if the anchor is out of range.
  explicit LinearOrder(std::vector<ElementId> sequence, std::size_t anchor = 0, Growth growth = Growth::Fixed);

  std::span<const ElementId> elements() const { return sequence_; }
  std::size_t size() const { return sequence_.size(); }
  bool empty() const { return sequence_.empty(); }
  bool contains(ElementId x) const { return index_.count(x) != 0; }
  std::optional<std::size_t> index_of(ElementId x) const;
  /// Index relative to the anchor. Throws UnknownIdError.
  std::ptrdiff_t signed_position(ElementId x) const;
  /// x strictly before y. Throws UnknownIdError.
  bool precedes(ElementId x, ElementId y) const;

  std::size_t anchor() const { return anchor_; }
  Growth growth() const { return growth_; }

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return a.sequence_ == b.sequence_ && a.anchor_ == b.anchor_ && a.growth_ == b.growth_;
  }

 private:
  std::size_t checked_index(ElementId x) const;

  std::vector<ElementId> sequence_;
  std::unordered_map<ElementId, std::size_t> index_;
  std::size_t anchor_ = 0;
  Growth growth_ = Growth::Fixed;
};

enum class ExtensionFailure {
  None,
  DuplicateElement,
  UnknownElement,
  MissingElement,
  OrderViolated,
};

std::string_view to_string(ExtensionFailure f) noexcept;

struct ExtensionCheck {
  ExtensionFailure reason = ExtensionFailure::None;
  /// The offending element, or the violated pair (x <=_P y but y before x).
  std::optional<IdPair> witness;

  bool ok() const { return reason == ExtensionFailure::None; }
  explicit operator bool() const { return ok(); }
};

/// True iff `order` lists exactly the elements of `poset` and respects its order.
ExtensionCheck is_linear_extension(std::span<const ElementId> order, const FinitePoset& poset);
inline ExtensionCheck is_linear_extension(const LinearOrder& order, const FinitePoset& poset) {
  return is_linear_extension(order.elements(), poset);
}

}  // namespace taulike
