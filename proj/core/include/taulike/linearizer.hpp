#pragma once

#include <cstddef>
#include <deque>
#include <span>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "taulike/linear_order.hpp"
#include "taulike/stream.hpp"

namespace taulike {

/// Online Szpilrajn insertion over a comparator.
///
/// Elements are inserted in the given order. Each goes immediately after its
/// rightmost placed predecessor; failing that, immediately before its
/// leftmost placed successor; failing that, at the right end.
template <class Leq>
std::vector<ElementId> szpilrajn_insert(std::span<const ElementId> insertion_order, Leq&& leq) {
  std::vector<ElementId> line;
  line.reserve(insertion_order.size());
  for (ElementId x : insertion_order) {
    std::size_t after_pred = 0;
    bool has_pred = false;
    std::size_t before_succ = line.size();
    bool has_succ = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (leq(line[i], x)) {
        after_pred = i + 1;
        has_pred = true;
      } else if (!has_succ && leq(x, line[i])) {
        before_succ = i;
        has_succ = true;
      }
    }
    const std::size_t at = has_pred ? after_pred : (has_succ ? before_succ : line.size());
    line.insert(line.begin() + static_cast<std::ptrdiff_t>(at), x);
  }
  return line;
}

/// Deterministic linear extension of a finite poset, inserting in element order.
LinearOrder szpilrajn_extend(const FinitePoset& poset);

enum class BlockSide { Left, Right };
std::string_view to_string(BlockSide s) noexcept;

/// One z_n / P_n block: the pivot, its members in within-block order, and
/// where the block was placed relative to the earlier ones.
struct Block {
  ElementId pivot = 0;
  std::vector<ElementId> members;
  BlockSide side = BlockSide::Right;

  friend bool operator==(const Block&, const Block&) = default;
};

using BlockSeq = std::vector<Block>;

struct Linearization {
  BlockSeq blocks;
  LinearOrder order;
  bool exhausted = false;  ///< the stream ended; blocks partition the whole domain
};

/// Incremental block construction for the omega, omega* and zeta cases.
///
/// Pivot n is the least-enumerated element not yet in any block (for all three
/// modes this is the element outside the sets the earlier pivots cover). Its
/// block is
///   omega:  {z} u predecessors(z), minus earlier blocks; appended;
///   omega*: {z} u successors(z), minus earlier blocks; prepended;
///   zeta:   union over i <= n of [z_i, z_n], minus earlier blocks; prepended
///           if z_n lies below an earlier pivot (left), appended otherwise.
/// Members are ordered by szpilrajn_insert over ascending ids.
class BlockLinearizer {
 public:
  enum class Mode { Omega, OmegaStar, Zeta };

  /// Throws OracleMissing when the stream lacks the oracle the mode needs.
  BlockLinearizer(StreamPoset stream, Mode mode);

  /// Emits one block. Returns false (and emits nothing) when the stream is exhausted.
  bool next_block();
  /// Emits blocks until `count` blocks exist or the stream ends.
  void run_blocks(std::size_t count);
  /// Emits blocks until at least `count` elements are placed or the stream ends.
  void run_elements(std::size_t count);

  const BlockSeq& blocks() const { return blocks_; }
  std::size_t placed() const { return line_.size(); }
  bool exhausted() const { return exhausted_; }
  LinearOrder order() const;
  Linearization result() const { return {blocks_, order(), exhausted_}; }

 private:
  std::vector<ElementId> block_members(ElementId pivot);
  std::vector<ElementId> oracle_set(const FiniteSetOracle& oracle, ElementId x, std::string_view what) const;

  StreamPoset stream_;
  Mode mode_;
  std::size_t cursor_ = 0;
  bool exhausted_ = false;
  BlockSeq blocks_;
  std::unordered_set<ElementId> placed_;
  std::deque<ElementId> line_;
  std::size_t pivot0_offset_ = 0;  ///< elements placed left of z_0
};

Linearization omega_linearize(const StreamPoset& stream, std::size_t blocks_wanted);
Linearization omega_star_linearize(const StreamPoset& stream, std::size_t blocks_wanted);
Linearization zeta_linearize(const StreamPoset& stream, std::size_t blocks_wanted);

/// Element-budget variant: runs until at least `elements_wanted` elements are placed.
Linearization linearize_elements(const StreamPoset& stream, BlockLinearizer::Mode mode, std::size_t elements_wanted);

/// Result of the omega + omega* split: L = lower + upper.
struct SplitLinearization {
  Linearization lower;  ///< omega run over the fin-pred elements
  Linearization upper;  ///< omega* run over the fin-succ elements
  LinearOrder order;    ///< concatenation
  std::vector<Side> sides;  ///< side of each element of `order`, by position
};

/// Classifies the first `elements_wanted` enumerated elements by side, runs the
/// omega construction on the fin-pred ones and the omega* construction on the
/// fin-succ ones until each substream is used up, and concatenates. Throws
/// OracleMissing, or ClassifierInconsistent if a fin-succ element is found
/// below a fin-pred element among the emitted ones.
SplitLinearization split_linearize(const StreamPoset& stream, std::size_t elements_wanted);

}  // namespace taulike
