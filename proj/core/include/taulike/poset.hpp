#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "taulike/error.hpp"

namespace taulike {

using ElementId = std::uint64_t;
using IdPair = std::pair<ElementId, ElementId>;

/// Cantor pairing. Used to re-id the elements of sums and gadget blocks.
ElementId pair_ids(ElementId first, ElementId second);
IdPair unpair_id(ElementId code);

/// A finite partial order stored as its full closed relation.
///
/// Elements keep the order they were given in; that order is the
/// enumeration order seen by the insertion-based algorithms. Row i of the
/// bit matrix is the up-set of element i.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Induced poset on `elements` under an order that is already closed.
  /// Throws CycleError / InvalidArgument if `leq` is not a partial order.
  template <class Leq>
  static FinitePoset from_order(std::vector<ElementId> elements, Leq&& leq) {
    FinitePoset p(std::move(elements));
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || leq(p.elements_[i], p.elements_[j])) p.set(i, j);
      }
    }
    p.validate();
    return p;
  }

  std::span<const ElementId> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(ElementId x) const { return index_.count(x) != 0; }
  std::optional<std::size_t> index_of(ElementId x) const;

  bool leq(ElementId x, ElementId y) const;
  bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  bool comparable(ElementId x, ElementId y) const { return leq(x, y) || leq(y, x); }
  bool leq_at(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }

  /// {y : y <= x}, in element order.
  std::vector<ElementId> predecessors(ElementId x) const;
  /// {y : x <= y}, in element order.
  std::vector<ElementId> successors(ElementId x) const;
  /// [x,y] = {z : x <= z <= y or y <= z <= x}; empty iff x and y are incomparable.
  std::vector<ElementId> interval(ElementId x, ElementId y) const;

  /// All closed pairs (x,y) with x <= y, including the diagonal.
  std::vector<IdPair> relation() const;
  /// Covering pairs only; closing them reproduces this poset.
  std::vector<IdPair> cover_relation() const;

  FinitePoset restrict_to(std::span<const ElementId> subset) const;
  FinitePoset dual() const;

  /// Reflexive, antisymmetric and transitive. Always true for a constructed value.
  bool satisfies_order_axioms() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.elements_ == b.elements_ && a.bits_ == b.bits_;
  }

 private:
  explicit FinitePoset(std::vector<ElementId> elements);

  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  std::size_t checked_index(ElementId x) const;
  void close();
  void validate() const;

  friend FinitePoset build_poset(std::vector<ElementId>, std::span<const IdPair>);

  std::vector<ElementId> elements_;
  std::unordered_map<ElementId, std::size_t> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Reflexive-transitive closure of the generator pairs (x <= y).
/// Throws DuplicateIdError, UnknownIdError or CycleError.
FinitePoset build_poset(std::vector<ElementId> elements, std::span<const IdPair> relation);

/// Lexicographic sum along `index`: (i,x) <= (j,y) iff i <_Q j or (i = j and x <= y).
/// The output element (i,x) has id pair_ids(i, x).
FinitePoset lex_sum(const FinitePoset& index, const std::map<ElementId, FinitePoset>& parts);

/// Sum along the antichain {0..n-1}; part k's element x becomes pair_ids(k, x).
FinitePoset disjoint_sum(std::span<const FinitePoset> parts);

FinitePoset chain(std::size_t n);
FinitePoset antichain(std::size_t n);
/// Zigzag 0 < 1 > 2 < 3 > ... on n elements.
FinitePoset fence(std::size_t n);

}  // namespace taulike
