#include "taulike/harness.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <string>

namespace taulike {

bool ExtensionSet::contains(std::span<const ElementId> order) const {
  return std::any_of(extensions.begin(), extensions.end(), [&](const LinearOrder& l) {
    return std::equal(l.elements().begin(), l.elements().end(), order.begin(), order.end());
  });
}

namespace {

/// Backtracking state over poset indices visited in ascending id order.
class ExtensionWalker {
 public:
  explicit ExtensionWalker(const FinitePoset& poset) : poset_(poset), n_(poset.size()) {
    by_id_.resize(n_);
    std::iota(by_id_.begin(), by_id_.end(), std::size_t{0});
    std::sort(by_id_.begin(), by_id_.end(),
              [&](std::size_t a, std::size_t b) { return poset.elements()[a] < poset.elements()[b]; });
    pending_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && poset.leq_at(i, j)) ++pending_[j];
      }
    }
    used_.assign(n_, false);
  }

  /// Minimal elements available now, ascending by id.
  std::vector<std::size_t> choices() const {
    std::vector<std::size_t> out;
    for (std::size_t i : by_id_) {
      if (!used_[i] && pending_[i] == 0) out.push_back(i);
    }
    return out;
  }

  void take(std::size_t i) {
    used_[i] = true;
    line_.push_back(poset_.elements()[i]);
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != i && poset_.leq_at(i, j)) --pending_[j];
    }
  }

  void undo(std::size_t i) {
    used_[i] = false;
    line_.pop_back();
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != i && poset_.leq_at(i, j)) ++pending_[j];
    }
  }

  /// Returns false once the visitor asks to stop.
  bool walk(const std::function<bool(std::span<const ElementId>)>& visit, std::size_t& count) {
    if (line_.size() == n_) {
      ++count;
      return visit(line_);
    }
    for (std::size_t i : by_id_) {
      if (used_[i] || pending_[i] != 0) continue;
      take(i);
      const bool go_on = walk(visit, count);
      undo(i);
      if (!go_on) return false;
    }
    return true;
  }

 private:
  const FinitePoset& poset_;
  std::size_t n_;
  std::vector<std::size_t> by_id_;
  std::vector<std::size_t> pending_;
  std::vector<bool> used_;
  std::vector<ElementId> line_;
};

void guard(const FinitePoset& poset, std::size_t max_size) {
  if (poset.size() > max_size) {
    throw Error(ErrorCode::TooLarge, "exhaustive enumeration is limited to " + std::to_string(max_size) +
                                         " elements, poset has " + std::to_string(poset.size()));
  }
}

}  // namespace

std::size_t for_each_linear_extension(const FinitePoset& poset,
                                      const std::function<bool(std::span<const ElementId>)>& visit,
                                      std::size_t max_size) {
  guard(poset, max_size);
  ExtensionWalker walker(poset);
  std::size_t count = 0;
  walker.walk(visit, count);
  return count;
}

ExtensionSet all_linear_extensions(const FinitePoset& poset, std::size_t max_size, unsigned jobs) {
  guard(poset, max_size);
  ExtensionSet out{poset, {}};
  auto collect_into = [](std::vector<LinearOrder>& sink) {
    return [&sink](std::span<const ElementId> line) {
      sink.emplace_back(std::vector<ElementId>(line.begin(), line.end()));
      return true;
    };
  };

  if (jobs <= 1 || poset.empty()) {
    std::size_t count = 0;
    ExtensionWalker walker(poset);
    walker.walk(collect_into(out.extensions), count);
    return out;
  }

  const auto first_choices = ExtensionWalker(poset).choices();
  std::vector<std::vector<LinearOrder>> branches(first_choices.size());
  for (std::size_t start = 0; start < first_choices.size(); start += jobs) {
    std::vector<std::future<void>> running;
    for (std::size_t b = start; b < std::min(first_choices.size(), start + jobs); ++b) {
      running.push_back(std::async(std::launch::async, [&, b] {
        ExtensionWalker walker(poset);
        walker.take(first_choices[b]);
        std::size_t count = 0;
        walker.walk(collect_into(branches[b]), count);
      }));
    }
    for (auto& f : running) f.get();
  }
  for (auto& branch : branches) {
    std::move(branch.begin(), branch.end(), std::back_inserter(out.extensions));
  }
  return out;
}

TauReport check_tau_like(const FinitePoset& poset, OrderKind kind) {
  TauReport r;
  r.kind = kind;
  r.prefix_size = poset.size();
  for (ElementId x : poset.elements()) {
    ElementCounts c{x, poset.predecessors(x).size() - 1, poset.successors(x).size() - 1};
    r.max_predecessors = std::max(r.max_predecessors, *c.predecessors);
    r.max_successors = std::max(r.max_successors, *c.successors);
    r.counts.push_back(c);
  }
  for (ElementId x : poset.elements()) {
    for (ElementId y : poset.elements()) {
      r.max_interval = std::max(r.max_interval, poset.interval(x, y).size());
    }
  }
  return r;
}

TauReport check_tau_like(const StreamPoset& stream, std::size_t count, OrderKind kind) {
  TauReport r;
  r.kind = kind;
  const auto ids = available_prefix(stream, count);
  r.prefix_size = ids.size();
  const OracleBundle& o = stream.oracles();

  auto missing = [&](OracleName which) {
    r.violations.push_back({ViolationKind::NotPresent, which, 0, std::nullopt, std::nullopt,
                            std::string(to_string(kind)) + " check needs the " + std::string(to_string(which)) +
                                " oracle"});
  };
  auto undefined = [&](OracleName which, ElementId x, std::optional<ElementId> y) {
    r.violations.push_back({ViolationKind::Undefined, which, x, y, std::nullopt, "no finite answer"});
  };

  const bool need_pred = kind == OrderKind::Omega;
  const bool need_succ = kind == OrderKind::OmegaStar;
  const bool need_side = kind == OrderKind::OmegaPlusOmegaStar;
  const bool need_interval = kind == OrderKind::Zeta;
  if (need_pred && !o.predecessors) missing(OracleName::Predecessors);
  if (need_succ && !o.successors) missing(OracleName::Successors);
  if (need_side && !o.side) missing(OracleName::Side);
  if (need_interval && !o.interval) missing(OracleName::Interval);
  if (!r.violations.empty()) return r;

  for (ElementId x : ids) {
    ElementCounts c{x, std::nullopt, std::nullopt};
    if (o.predecessors) {
      if (auto p = o.predecessors(x)) c.predecessors = p->size() - 1;
    }
    if (o.successors) {
      if (auto s = o.successors(x)) c.successors = s->size() - 1;
    }
    if (need_pred && !c.predecessors) undefined(OracleName::Predecessors, x, std::nullopt);
    if (need_succ && !c.successors) undefined(OracleName::Successors, x, std::nullopt);
    if (need_side) {
      const Side side = o.side(x);
      if (side == Side::FinPred && !c.predecessors) undefined(OracleName::Predecessors, x, std::nullopt);
      if (side == Side::FinSucc && !c.successors) undefined(OracleName::Successors, x, std::nullopt);
    }
    if (c.predecessors) r.max_predecessors = std::max(r.max_predecessors, *c.predecessors);
    if (c.successors) r.max_successors = std::max(r.max_successors, *c.successors);
    r.counts.push_back(c);
  }
  if (need_interval) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i; j < ids.size(); ++j) {
        auto iv = o.interval(ids[i], ids[j]);
        if (!iv) {
          undefined(OracleName::Interval, ids[i], ids[j]);
        } else {
          r.max_interval = std::max(r.max_interval, iv->size());
        }
      }
    }
  }

  // Closure within the prefix: every declared finite set must be sound and complete there.
  const auto report = validate_oracles(stream, count);
  for (const auto& v : report.failures()) {
    const bool relevant = v.oracle == OracleName::Enumeration ||
                          (v.oracle == OracleName::Predecessors && (need_pred || need_side)) ||
                          (v.oracle == OracleName::Successors && (need_succ || need_side)) ||
                          (v.oracle == OracleName::Side && need_side) ||
                          (v.oracle == OracleName::Interval && need_interval);
    if (relevant) r.violations.push_back(v);
  }
  return r;
}

FinitePoset random_poset(std::size_t n, double density, std::uint64_t seed) {
  if (n > kRandomPosetLimit) {
    throw Error(ErrorCode::InvalidArgument, "random posets are limited to " + std::to_string(kRandomPosetLimit) + " elements");
  }
  if (!(density >= 0.0 && density <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "density must lie in [0,1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<ElementId> perm(n);
  std::iota(perm.begin(), perm.end(), ElementId{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng() % i]);
  }
  std::vector<IdPair> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density) gens.emplace_back(perm[i], perm[j]);
    }
  }
  std::vector<ElementId> ids(n);
  std::iota(ids.begin(), ids.end(), ElementId{0});
  return build_poset(std::move(ids), gens);
}

}  // namespace taulike
