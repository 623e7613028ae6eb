#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taulike/poset.hpp"

namespace taulike {

/// Which half of an omega+omega*-like poset an element belongs to.
enum class Side { FinPred, FinSucc };

std::string_view to_string(Side s) noexcept;

/// A finite set answer; nullopt means "not finite / not available for this element".
using FiniteSetOracle = std::function<std::optional<std::vector<ElementId>>(ElementId)>;
using IntervalOracle = std::function<std::optional<std::vector<ElementId>>(ElementId, ElementId)>;
using SideOracle = std::function<Side(ElementId)>;

/// The finiteness promises a stream makes about itself. Each member is
/// optional (an empty std::function means the oracle is absent), and an
/// algorithm consumes only the oracles its construction needs:
/// omega blocks need `predecessors`, omega* blocks `successors`, zeta blocks
/// `interval`, and the omega+omega* split additionally `side`.
struct OracleBundle {
  FiniteSetOracle predecessors;  ///< {y : y <= x}
  FiniteSetOracle successors;    ///< {y : x <= y}
  IntervalOracle interval;       ///< {z : x <= z <= y or y <= z <= x}
  SideOracle side;
};

/// A countable poset presented lazily: stage s maps to the s-th element id,
/// nullopt once the domain is exhausted. Comparison must be a partial order
/// on every finite prefix and must not depend on how far the stream has been read.
class StreamPoset {
 public:
  using Enumerator = std::function<std::optional<ElementId>(std::size_t)>;
  using Comparator = std::function<bool(ElementId, ElementId)>;

  StreamPoset(std::string name, Enumerator enumerate, Comparator leq, OracleBundle oracles = {})
      : name_(std::move(name)), enumerate_(std::move(enumerate)), leq_(std::move(leq)), oracles_(std::move(oracles)) {}

  const std::string& name() const { return name_; }
  std::optional<ElementId> at(std::size_t stage) const { return enumerate_(stage); }
  bool leq(ElementId x, ElementId y) const { return leq_(x, y); }
  const OracleBundle& oracles() const { return oracles_; }

  /// Same stream with a replaced oracle bundle.
  StreamPoset with_oracles(OracleBundle oracles) const {
    StreamPoset copy = *this;
    copy.oracles_ = std::move(oracles);
    return copy;
  }

 private:
  std::string name_;
  Enumerator enumerate_;
  Comparator leq_;
  OracleBundle oracles_;
};

/// First `count` enumerated ids. Throws FiniteDomainEnd if the stream is shorter.
std::vector<ElementId> enumerate_prefix(const StreamPoset& stream, std::size_t count);

/// Induced poset on the first `count` enumerated elements. Throws FiniteDomainEnd.
FinitePoset prefix(const StreamPoset& stream, std::size_t count);

/// As many of the first `limit` elements as exist.
std::vector<ElementId> available_prefix(const StreamPoset& stream, std::size_t limit);

enum class OracleName { Predecessors, Successors, Interval, Side, Enumeration };
std::string_view to_string(OracleName o) noexcept;

enum class ViolationKind {
  NotPresent,     ///< oracle absent; informational, not a failure
  Unsound,        ///< a listed element does not satisfy the defining comparison
  Incomplete,     ///< an in-prefix element satisfying the comparison is not listed
  Undefined,      ///< oracle returned no answer for an element that needs one
  Inconsistent,   ///< side classification contradicts the finite-set oracles
};
std::string_view to_string(ViolationKind v) noexcept;

struct OracleViolation {
  ViolationKind kind;
  OracleName oracle;
  ElementId subject;                  ///< the x the oracle was asked about
  std::optional<ElementId> other;     ///< second endpoint for intervals
  std::optional<ElementId> offending; ///< listed-but-wrong or missing element
  std::string detail;
};

struct ValidationReport {
  std::size_t prefix_size = 0;
  std::vector<OracleViolation> entries;

  /// No entries other than NotPresent.
  bool passed() const;
  std::vector<OracleViolation> failures() const;
};

/// Cross-check every oracle answer on the first `count` elements against
/// brute-force comparison. Quadratic in `count` (cubic-over-64 for intervals).
ValidationReport validate_oracles(const StreamPoset& stream, std::size_t count);

// Built-in families.

/// (N, <=), enumerated 0,1,2,...
StreamPoset omega_stream();
/// (N, >=), enumerated 0,1,2,...
StreamPoset omega_star_stream();
/// The countable antichain.
StreamPoset antichain_stream();
/// omega + omega*: (0,k) has id 2k, (1,k) has id 2k+1; enumerated by id.
StreamPoset omega_plus_omega_star_stream();

/// Enumerations of Z used for the canonical zeta stream. Ids are zigzag codes.
enum class ZetaEnumeration {
  Alternate,          ///< 0,-1,1,-2,2,...
  AlternatePositive,  ///< 0,1,-1,2,-2,...
  Skewed,             ///< 0,1,2,-1,3,4,-2,...: two positives per negative
};
StreamPoset zeta_stream(ZetaEnumeration order = ZetaEnumeration::Alternate);

/// A finite poset as an exhausted stream, enumerated in element order, with
/// every oracle computed exactly. Sides are all FinPred.
StreamPoset finite_stream(FinitePoset poset, std::string name = "finite");

}  // namespace taulike
