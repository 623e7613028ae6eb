#include "taulike/stream.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

#include "taulike/canonical.hpp"

namespace taulike {

std::string_view to_string(Side s) noexcept { return s == Side::FinPred ? "fin-pred" : "fin-succ"; }

std::string_view to_string(OracleName o) noexcept {
  switch (o) {
    case OracleName::Predecessors: return "predecessors";
    case OracleName::Successors: return "successors";
    case OracleName::Interval: return "interval";
    case OracleName::Side: return "side";
    case OracleName::Enumeration: return "enumeration";
  }
  return "?";
}

std::string_view to_string(ViolationKind v) noexcept {
  switch (v) {
    case ViolationKind::NotPresent: return "NOT_PRESENT";
    case ViolationKind::Unsound: return "UNSOUND";
    case ViolationKind::Incomplete: return "INCOMPLETE";
    case ViolationKind::Undefined: return "UNDEFINED";
    case ViolationKind::Inconsistent: return "INCONSISTENT";
  }
  return "?";
}

std::vector<ElementId> available_prefix(const StreamPoset& stream, std::size_t limit) {
  std::vector<ElementId> ids;
  ids.reserve(limit);
  for (std::size_t s = 0; s < limit; ++s) {
    auto id = stream.at(s);
    if (!id) break;
    ids.push_back(*id);
  }
  return ids;
}

std::vector<ElementId> enumerate_prefix(const StreamPoset& stream, std::size_t count) {
  auto ids = available_prefix(stream, count);
  if (ids.size() < count) {
    throw Error(ErrorCode::FiniteDomainEnd, "stream '" + stream.name() + "' ends after " +
                                                std::to_string(ids.size()) + " elements");
  }
  return ids;
}

FinitePoset prefix(const StreamPoset& stream, std::size_t count) {
  return FinitePoset::from_order(enumerate_prefix(stream, count),
                                 [&stream](ElementId a, ElementId b) { return stream.leq(a, b); });
}

bool ValidationReport::passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const OracleViolation& v) { return v.kind == ViolationKind::NotPresent; });
}

std::vector<OracleViolation> ValidationReport::failures() const {
  std::vector<OracleViolation> out;
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out),
               [](const OracleViolation& v) { return v.kind != ViolationKind::NotPresent; });
  return out;
}

namespace {

/// Prefix relation as up-set and down-set bit rows.
class PrefixMatrix {
 public:
  PrefixMatrix(const StreamPoset& stream, const std::vector<ElementId>& ids)
      : n_(ids.size()), words_((ids.size() + 63) / 64), up_(n_ * words_, 0), down_(n_ * words_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j || stream.leq(ids[i], ids[j])) {
          up_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
          down_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
        }
      }
    }
  }

  bool leq(std::size_t i, std::size_t j) const { return (up_[i * words_ + j / 64] >> (j % 64)) & 1U; }

  std::size_t words() const { return words_; }
  std::uint64_t between_word(std::size_t i, std::size_t j, std::size_t w) const {
    return up_[i * words_ + w] & down_[j * words_ + w];
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
};

class Validator {
 public:
  Validator(const StreamPoset& stream, std::vector<ElementId> ids)
      : stream_(stream), ids_(std::move(ids)), matrix_(stream, ids_), stamp_(ids_.size(), 0), listed_(matrix_.words(), 0) {
    for (std::size_t i = 0; i < ids_.size(); ++i) index_.emplace(ids_[i], i);
    const ElementId top = ids_.empty() ? 0 : *std::max_element(ids_.begin(), ids_.end());
    if (top < 8 * ids_.size() + 64) {
      dense_.assign(top + 1, kAbsent);
      for (std::size_t i = ids_.size(); i-- > 0;) dense_[ids_[i]] = i;
    }
  }

  ValidationReport run() {
    report_.prefix_size = ids_.size();
    check_enumeration();
    check_one_sided(OracleName::Predecessors);
    check_one_sided(OracleName::Successors);
    check_intervals();
    check_sides();
    return std::move(report_);
  }

 private:
  void add(ViolationKind kind, OracleName oracle, ElementId subject, std::optional<ElementId> other,
           std::optional<ElementId> offending, std::string detail) {
    report_.entries.push_back({kind, oracle, subject, other, offending, std::move(detail)});
  }

  void check_enumeration() {
    if (index_.size() != ids_.size()) {
      std::unordered_map<ElementId, int> seen;
      for (ElementId x : ids_) {
        if (++seen[x] == 2) {
          add(ViolationKind::Inconsistent, OracleName::Enumeration, x, std::nullopt, x, "enumeration repeats an id");
        }
      }
    }
  }

  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  std::size_t locate(ElementId z) const {
    if (!dense_.empty()) return z < dense_.size() ? dense_[z] : kAbsent;
    auto it = index_.find(z);
    return it == index_.end() ? kAbsent : it->second;
  }

  void check_one_sided(OracleName which) {
    const bool preds = which == OracleName::Predecessors;
    const FiniteSetOracle& oracle = preds ? stream_.oracles().predecessors : stream_.oracles().successors;
    if (!oracle) {
      add(ViolationKind::NotPresent, which, 0, std::nullopt, std::nullopt, "oracle not supplied");
      return;
    }
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      const ElementId x = ids_[i];
      auto answer = oracle(x);
      if (!answer) continue;
      const std::uint32_t e = ++epoch_;
      for (ElementId y : *answer) {
        const std::size_t k = locate(y);
        bool ok;
        if (k == kAbsent) {
          ok = preds ? stream_.leq(y, x) : stream_.leq(x, y);
        } else {
          ok = preds ? matrix_.leq(k, i) : matrix_.leq(i, k);
          stamp_[k] = e;
        }
        if (!ok) add(ViolationKind::Unsound, which, x, std::nullopt, y, "listed element fails the comparison");
      }
      for (std::size_t j = 0; j < ids_.size(); ++j) {
        const bool related = preds ? matrix_.leq(j, i) : matrix_.leq(i, j);
        if (related && stamp_[j] != e) {
          add(ViolationKind::Incomplete, which, x, std::nullopt, ids_[j], "in-prefix element missing from answer");
        }
      }
    }
  }

  void check_intervals() {
    const IntervalOracle& oracle = stream_.oracles().interval;
    if (!oracle) {
      add(ViolationKind::NotPresent, OracleName::Interval, 0, std::nullopt, std::nullopt, "oracle not supplied");
      return;
    }
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      for (std::size_t j = i; j < ids_.size(); ++j) {
        const ElementId x = ids_[i];
        const ElementId y = ids_[j];
        std::size_t lo = i;
        std::size_t hi = j;
        if (!matrix_.leq(lo, hi)) std::swap(lo, hi);
        const bool comparable = matrix_.leq(lo, hi);
        auto answer = oracle(x, y);
        if (!answer) {
          if (!comparable) {
            add(ViolationKind::Undefined, OracleName::Interval, x, y, std::nullopt,
                "incomparable pair has an empty interval but no answer");
          }
          continue;
        }
        // In-prefix members are compared as bit rows against the prefix matrix.
        std::fill(listed_.begin(), listed_.end(), 0);
        for (ElementId z : *answer) {
          const std::size_t k = locate(z);
          if (k != kAbsent) {
            listed_[k / 64] |= std::uint64_t{1} << (k % 64);
          } else if (!(comparable && stream_.leq(ids_[lo], z) && stream_.leq(z, ids_[hi]))) {
            add(ViolationKind::Unsound, OracleName::Interval, x, y, z, "listed element is not in the interval");
          }
        }
        for (std::size_t w = 0; w < matrix_.words(); ++w) {
          const std::uint64_t between = comparable ? matrix_.between_word(lo, hi, w) : 0;
          for_each_bit(listed_[w] & ~between, w, [&](std::size_t k) {
            add(ViolationKind::Unsound, OracleName::Interval, x, y, ids_[k], "listed element is not in the interval");
          });
          for_each_bit(between & ~listed_[w], w, [&](std::size_t k) {
            add(ViolationKind::Incomplete, OracleName::Interval, x, y, ids_[k], "in-prefix element missing from interval");
          });
        }
      }
    }
  }

  template <class F>
  static void for_each_bit(std::uint64_t bits, std::size_t word, F&& f) {
    while (bits != 0) {
      f(word * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
      bits &= bits - 1;
    }
  }

  void check_sides() {
    const OracleBundle& o = stream_.oracles();
    if (!o.side) {
      add(ViolationKind::NotPresent, OracleName::Side, 0, std::nullopt, std::nullopt, "oracle not supplied");
      return;
    }
    std::vector<Side> sides;
    sides.reserve(ids_.size());
    for (ElementId x : ids_) {
      const Side s = o.side(x);
      sides.push_back(s);
      const FiniteSetOracle& needed = s == Side::FinPred ? o.predecessors : o.successors;
      if (!needed) {
        add(ViolationKind::Inconsistent, OracleName::Side, x, std::nullopt, std::nullopt,
            std::string("side is ") + std::string(to_string(s)) + " but the matching oracle is absent");
      } else if (!needed(x)) {
        add(ViolationKind::Inconsistent, OracleName::Side, x, std::nullopt, std::nullopt,
            std::string("side is ") + std::string(to_string(s)) + " but the matching oracle has no finite answer");
      }
    }
    // The finite-predecessor part must be downward closed.
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (sides[i] != Side::FinSucc) continue;
      for (std::size_t j = 0; j < ids_.size(); ++j) {
        if (sides[j] == Side::FinPred && matrix_.leq(i, j)) {
          add(ViolationKind::Inconsistent, OracleName::Side, ids_[i], std::nullopt, ids_[j],
              "fin-succ element lies below a fin-pred element");
        }
      }
    }
  }

  const StreamPoset& stream_;
  std::vector<ElementId> ids_;
  std::unordered_map<ElementId, std::size_t> index_;
  std::vector<std::size_t> dense_;  ///< id -> prefix index when ids are small
  PrefixMatrix matrix_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint64_t> listed_;
  ValidationReport report_;
};

std::vector<ElementId> range_ids(ElementId lo, ElementId hi) {
  std::vector<ElementId> out;
  out.reserve(hi - lo + 1);
  for (ElementId v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

}  // namespace

ValidationReport validate_oracles(const StreamPoset& stream, std::size_t count) {
  return Validator(stream, available_prefix(stream, count)).run();
}

StreamPoset omega_stream() {
  OracleBundle o;
  o.predecessors = [](ElementId x) -> std::optional<std::vector<ElementId>> { return range_ids(0, x); };
  o.successors = [](ElementId) -> std::optional<std::vector<ElementId>> { return std::nullopt; };
  o.interval = [](ElementId x, ElementId y) -> std::optional<std::vector<ElementId>> {
    return range_ids(std::min(x, y), std::max(x, y));
  };
  o.side = [](ElementId) { return Side::FinPred; };
  return StreamPoset(
      "omega", [](std::size_t s) -> std::optional<ElementId> { return s; },
      [](ElementId a, ElementId b) { return a <= b; }, std::move(o));
}

StreamPoset omega_star_stream() {
  OracleBundle o;
  o.predecessors = [](ElementId) -> std::optional<std::vector<ElementId>> { return std::nullopt; };
  o.successors = [](ElementId x) -> std::optional<std::vector<ElementId>> { return range_ids(0, x); };
  o.interval = [](ElementId x, ElementId y) -> std::optional<std::vector<ElementId>> {
    return range_ids(std::min(x, y), std::max(x, y));
  };
  o.side = [](ElementId) { return Side::FinSucc; };
  return StreamPoset(
      "omega-star", [](std::size_t s) -> std::optional<ElementId> { return s; },
      [](ElementId a, ElementId b) { return a >= b; }, std::move(o));
}

StreamPoset antichain_stream() {
  OracleBundle o;
  auto self = [](ElementId x) -> std::optional<std::vector<ElementId>> { return std::vector<ElementId>{x}; };
  o.predecessors = self;
  o.successors = self;
  o.interval = [](ElementId x, ElementId y) -> std::optional<std::vector<ElementId>> {
    if (x == y) return std::vector<ElementId>{x};
    return std::vector<ElementId>{};
  };
  o.side = [](ElementId) { return Side::FinPred; };
  return StreamPoset(
      "antichain", [](std::size_t s) -> std::optional<ElementId> { return s; },
      [](ElementId a, ElementId b) { return a == b; }, std::move(o));
}

StreamPoset omega_plus_omega_star_stream() {
  auto leq = [](ElementId a, ElementId b) {
    const auto sa = a % 2;
    const auto sb = b % 2;
    if (sa != sb) return sa < sb;
    return sa == 0 ? a <= b : a >= b;
  };
  OracleBundle o;
  o.predecessors = [](ElementId x) -> std::optional<std::vector<ElementId>> {
    if (x % 2 == 1) return std::nullopt;
    std::vector<ElementId> out;
    for (ElementId v = 0; v <= x; v += 2) out.push_back(v);
    return out;
  };
  o.successors = [](ElementId x) -> std::optional<std::vector<ElementId>> {
    if (x % 2 == 0) return std::nullopt;
    std::vector<ElementId> out;
    for (ElementId v = 1; v <= x; v += 2) out.push_back(v);
    return out;
  };
  o.interval = [](ElementId x, ElementId y) -> std::optional<std::vector<ElementId>> {
    if (x % 2 != y % 2) return std::nullopt;
    std::vector<ElementId> out;
    for (ElementId v = std::min(x, y); v <= std::max(x, y); v += 2) out.push_back(v);
    return out;
  };
  o.side = [](ElementId x) { return x % 2 == 0 ? Side::FinPred : Side::FinSucc; };
  return StreamPoset(
      "omega-omega-star", [](std::size_t s) -> std::optional<ElementId> { return s; }, leq, std::move(o));
}

namespace {

std::int64_t zeta_value_at(std::size_t s, ZetaEnumeration order) {
  const auto k = static_cast<std::int64_t>(s);
  switch (order) {
    case ZetaEnumeration::Alternate:
      return zigzag_decode(s);
    case ZetaEnumeration::AlternatePositive:
      return s % 2 == 1 ? (k + 1) / 2 : -(k / 2);
    case ZetaEnumeration::Skewed: {
      if (s == 0) return 0;
      const std::int64_t g = (k - 1) / 3;
      switch ((k - 1) % 3) {
        case 0: return 2 * g + 1;
        case 1: return 2 * g + 2;
        default: return -(g + 1);
      }
    }
  }
  return 0;
}

}  // namespace

StreamPoset zeta_stream(ZetaEnumeration order) {
  OracleBundle o;
  o.interval = [](ElementId x, ElementId y) -> std::optional<std::vector<ElementId>> {
    const std::int64_t a = zigzag_decode(x);
    const std::int64_t b = zigzag_decode(y);
    std::vector<ElementId> out;
    for (std::int64_t v = std::min(a, b); v <= std::max(a, b); ++v) out.push_back(zigzag_encode(v));
    return out;
  };
  std::string name = "zeta";
  if (order == ZetaEnumeration::AlternatePositive) name = "zeta-positive";
  if (order == ZetaEnumeration::Skewed) name = "zeta-skewed";
  return StreamPoset(
      std::move(name),
      [order](std::size_t s) -> std::optional<ElementId> { return zigzag_encode(zeta_value_at(s, order)); },
      [](ElementId a, ElementId b) { return zigzag_decode(a) <= zigzag_decode(b); }, std::move(o));
}

StreamPoset finite_stream(FinitePoset poset, std::string name) {
  auto p = std::make_shared<const FinitePoset>(std::move(poset));
  auto known = [p](ElementId x) {
    if (!p->contains(x)) throw Error(ErrorCode::UnknownIdError, "element " + std::to_string(x) + " not in stream");
  };
  OracleBundle o;
  o.predecessors = [p, known](ElementId x) -> std::optional<std::vector<ElementId>> {
    known(x);
    return p->predecessors(x);
  };
  o.successors = [p, known](ElementId x) -> std::optional<std::vector<ElementId>> {
    known(x);
    return p->successors(x);
  };
  o.interval = [p](ElementId x, ElementId y) -> std::optional<std::vector<ElementId>> { return p->interval(x, y); };
  o.side = [](ElementId) { return Side::FinPred; };
  return StreamPoset(
      std::move(name),
      [p](std::size_t s) -> std::optional<ElementId> {
        if (s >= p->size()) return std::nullopt;
        return p->elements()[s];
      },
      [p](ElementId a, ElementId b) { return p->leq(a, b); }, std::move(o));
}

}  // namespace taulike
