#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "taulike/embedder.hpp"
#include "taulike/linear_order.hpp"
#include "taulike/poset.hpp"
#include "taulike/stream.hpp"

namespace taulike {

/// An injective f : N -> N given by finitely many explicit values followed by
/// the strictly increasing tail tail_start, tail_start+1, ... which lies above
/// every explicit value. Such an f is eventually increasing, so each stage's
/// truth is decided by the explicit values alone.
class InjectiveFunction {
 public:
  /// Throws NotInjective on repeated values or a tail that does not clear them.
  InjectiveFunction(std::vector<std::uint64_t> values, std::uint64_t tail_start);

  static InjectiveFunction identity();
  /// `perm` must be a permutation of 0..k-1; identity afterwards.
  static InjectiveFunction permutation(std::vector<std::uint64_t> perm);
  /// 1,0,3,2,... for the first k pairs, identity afterwards.
  static InjectiveFunction pair_swaps(std::size_t k);
  /// Explicit values, tail continuing from max+1.
  static InjectiveFunction with_prefix(std::vector<std::uint64_t> values);
  /// "identity", "perm:1,0,2", "swap:k" or "prefix:5,3,9". Throws ParseError / NotInjective.
  static InjectiveFunction parse(std::string_view spec);

  std::string spec() const;
  std::uint64_t operator()(std::size_t n) const;
  std::vector<std::uint64_t> values(std::size_t count) const;
  std::span<const std::uint64_t> explicit_values() const { return values_; }
  std::uint64_t tail_start() const { return tail_start_; }

  /// Least k > n with f(k) < f(n), if any.
  std::optional<std::size_t> first_drop_after(std::size_t n) const {
    if (n >= values_.size() || drop_[n] == 0) return std::nullopt;
    return drop_[n];
  }
  /// n is true iff every later value is larger.
  bool is_true_stage(std::size_t n) const { return !first_drop_after(n).has_value(); }
  std::vector<std::size_t> false_stages_below(std::size_t s) const;
  /// {n : f(n) <= m}, ascending.
  std::vector<std::size_t> preimages_at_most(std::uint64_t m) const;
  bool in_range(std::uint64_t m) const;
  /// Number of n with f(n) > f(n+1).
  std::size_t descents() const;

 private:
  std::vector<std::uint64_t> values_;
  std::uint64_t tail_start_;
  std::vector<std::size_t> drop_;  ///< first_drop_after for explicit stages; 0 = none
};

// --- FUF gadgets -----------------------------------------------------------

enum class FufVariant { Omega, OmegaStar, Zeta };

std::string_view to_string(FufVariant v) noexcept;

/// Disjoint sum of X_i + {m_i} (Omega), its dual (OmegaStar), or of
/// {l_i} + X_i + {m_i} (Zeta), each X_i an antichain.
///
/// Ids are sequential per part: l_i (zeta only), the members of X_i, then m_i.
/// In the OmegaStar variant every m_i lies below its part.
struct FufGadget {
  FufVariant variant = FufVariant::Omega;
  FinitePoset base;
  std::vector<std::vector<ElementId>> parts;
  std::vector<ElementId> top_markers;     ///< m_i
  std::vector<ElementId> bottom_markers;  ///< l_i, zeta variant only

  std::size_t union_size() const;
};

/// Only the sizes of `sets` matter; contents are re-id'd.
FufGadget make_fuf_gadget(std::span<const std::vector<ElementId>> sets, FufVariant variant);
FufGadget make_fuf_gadget_from_sizes(std::span<const std::size_t> sizes, FufVariant variant);

/// Size bound on the union of the parts read off a linear extension:
/// the number of L-predecessors of the L-greatest marker (for OmegaStar,
/// L-successors of the L-least marker). Throws NotAnExtension.
std::size_t fuf_decode(const LinearOrder& order, const FufGadget& gadget);

// --- Stage order -----------------------------------------------------------

/// The order A on a_0..a_{s-1} built from the first s values of an injective f:
/// a_n <= a_m iff f(k) < f(n) for some n < k <= m, or m <= n and f(k) > f(m)
/// for all m < k <= n. Evaluated literally from the values.
class StageOrder {
 public:
  /// Throws NotInjective.
  explicit StageOrder(std::vector<std::uint64_t> f_prefix);

  std::size_t size() const { return f_.size(); }
  std::span<const std::uint64_t> values() const { return f_; }
  bool leq(std::size_t n, std::size_t m) const;
  /// Stages n with a later value f(m) < f(n) inside the prefix.
  const std::vector<std::size_t>& false_stages() const { return false_stages_; }
  /// Stage indices listed bottom to top.
  LinearOrder as_linear_order() const;
  /// The order as a poset on ids 0..s-1.
  FinitePoset as_poset() const;

 private:
  std::vector<std::uint64_t> f_;
  std::vector<std::size_t> false_stages_;
};

StageOrder make_stage_order(std::span<const std::uint64_t> f_prefix);

// --- Range gadget A (+) B ----------------------------------------------------

/// Id coding of A (+) B: a_n = 2n, b_m = 2m+1. The stream enumerates by id,
/// interleaving a_0, b_0, a_1, b_1, ...
namespace range_ids {
constexpr ElementId a(std::size_t n) { return 2 * static_cast<ElementId>(n); }
constexpr ElementId b(std::size_t m) { return 2 * static_cast<ElementId>(m) + 1; }
constexpr bool is_a(ElementId id) { return id % 2 == 0; }
constexpr std::size_t index(ElementId id) { return static_cast<std::size_t>(id / 2); }
}  // namespace range_ids

struct RangeGadget {
  InjectiveFunction f;
  StreamPoset stream;
};

/// P = A (+) B with B of type omega* (b_n <= b_m iff n >= m). The side oracle
/// is ground truth: a_n is fin-pred iff n is a false stage; every b_m is fin-succ.
RangeGadget make_range_gadget(InjectiveFunction f);

struct FalseStageDecode {
  std::vector<std::size_t> false_stages;
  std::size_t horizon = 0;  ///< number of b elements the order contains
};

/// {n < s : a_n precedes every b_m present in the order}. Exact once the order
/// is a long enough truncation; throws HorizonTooSmall if fewer than s b's, or
/// not all of a_0..a_{s-1}, are present.
FalseStageDecode decode_false_stages(const LinearOrder& order, std::size_t s);

// --- Embedding gadget ---------------------------------------------------------

/// Id coding: a_m = 2m, b^n_j = 2*pair_ids(n, j) + 1. The stream enumerates in
/// rounds: a_r, b^r_0, ..., b^r_r.
namespace embed_ids {
constexpr ElementId a(std::size_t m) { return 2 * static_cast<ElementId>(m); }
inline ElementId b(std::size_t n, std::size_t j) { return 2 * pair_ids(n, j) + 1; }
constexpr bool is_a(ElementId id) { return id % 2 == 0; }
/// Stage at which a_m is enumerated.
constexpr std::size_t stage_of_a(std::size_t m) { return m * (m + 3) / 2; }
}  // namespace embed_ids

struct EmbedGadget {
  InjectiveFunction f;
  StreamPoset stream;
};

/// Antichain {a_m} plus elements b^n_j (j <= n) with b^n_j <= a_m iff f(n) <= m.
EmbedGadget make_embed_gadget(InjectiveFunction f);

/// Least omega block budget after which a_0..a_{k-1} are all placed. Each a_m
/// is maximal, so it is placed exactly when it becomes a pivot.
std::size_t embed_gadget_budget(const EmbedGadget& gadget, std::size_t k);

/// m is in the range iff f(n) = m for some n < h(a_m). Throws KindMismatch if h
/// is not an omega embedding, NotStabilized if a_m is unmapped, and
/// PrefixTooShort if h(a_m) exceeds the given values.
bool decode_range(const Embedding& h, std::span<const std::uint64_t> f_prefix, std::uint64_t m);

}  // namespace taulike
