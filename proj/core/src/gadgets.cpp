#include "taulike/gadgets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <memory>
#include <unordered_set>

#include "taulike/linearizer.hpp"

namespace taulike {

// --- InjectiveFunction --------------------------------------------------------

namespace {

std::string join(std::span<const std::uint64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::uint64_t parse_number(std::string_view text, std::string_view spec) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::ParseError, "bad number '" + std::string(text) + "' in function spec '" + std::string(spec) + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_list(std::string_view text, std::string_view spec) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_number(text.substr(start, comma - start), spec));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

InjectiveFunction::InjectiveFunction(std::vector<std::uint64_t> values, std::uint64_t tail_start)
    : values_(std::move(values)), tail_start_(tail_start) {
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t v : values_) {
    if (!seen.insert(v).second) {
      throw Error(ErrorCode::NotInjective, "value " + std::to_string(v) + " repeats");
    }
    if (v >= tail_start_) {
      throw Error(ErrorCode::NotInjective, "value " + std::to_string(v) + " collides with the increasing tail from " +
                                               std::to_string(tail_start_));
    }
  }
  drop_.assign(values_.size(), 0);
  for (std::size_t n = 0; n < values_.size(); ++n) {
    for (std::size_t k = n + 1; k < values_.size(); ++k) {
      if (values_[k] < values_[n]) {
        drop_[n] = k;
        break;
      }
    }
  }
}

InjectiveFunction InjectiveFunction::identity() { return InjectiveFunction({}, 0); }

InjectiveFunction InjectiveFunction::permutation(std::vector<std::uint64_t> perm) {
  const auto k = perm.size();
  std::vector<bool> hit(k, false);
  for (std::uint64_t v : perm) {
    if (v >= k || hit[v]) throw Error(ErrorCode::NotInjective, "perm: values must be a permutation of 0.." + std::to_string(k) + "-1");
    hit[v] = true;
  }
  return InjectiveFunction(std::move(perm), k);
}

InjectiveFunction InjectiveFunction::pair_swaps(std::size_t k) {
  std::vector<std::uint64_t> values;
  for (std::size_t i = 0; i < k; ++i) {
    values.push_back(2 * i + 1);
    values.push_back(2 * i);
  }
  return InjectiveFunction(std::move(values), 2 * k);
}

InjectiveFunction InjectiveFunction::with_prefix(std::vector<std::uint64_t> values) {
  const std::uint64_t tail = values.empty() ? 0 : *std::max_element(values.begin(), values.end()) + 1;
  return InjectiveFunction(std::move(values), tail);
}

InjectiveFunction InjectiveFunction::parse(std::string_view spec) {
  if (spec == "identity") return identity();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "unknown function spec '" + std::string(spec) + "'");
  }
  const auto head = spec.substr(0, colon);
  const auto body = spec.substr(colon + 1);
  if (head == "perm") return permutation(parse_list(body, spec));
  if (head == "swap") return pair_swaps(parse_number(body, spec));
  if (head == "prefix") return with_prefix(parse_list(body, spec));
  if (head == "values") {
    const auto semi = body.find(";tail:");
    if (semi == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "values: spec needs ';tail:N' in '" + std::string(spec) + "'");
    }
    return InjectiveFunction(parse_list(body.substr(0, semi), spec), parse_number(body.substr(semi + 6), spec));
  }
  throw Error(ErrorCode::ParseError, "unknown function spec '" + std::string(spec) + "'");
}

std::string InjectiveFunction::spec() const {
  if (values_.empty() && tail_start_ == 0) return "identity";
  return "values:" + join(values_) + ";tail:" + std::to_string(tail_start_);
}

std::uint64_t InjectiveFunction::operator()(std::size_t n) const {
  if (n < values_.size()) return values_[n];
  return tail_start_ + (n - values_.size());
}

std::vector<std::uint64_t> InjectiveFunction::values(std::size_t count) const {
  std::vector<std::uint64_t> out(count);
  for (std::size_t n = 0; n < count; ++n) out[n] = (*this)(n);
  return out;
}

std::vector<std::size_t> InjectiveFunction::false_stages_below(std::size_t s) const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < std::min(s, values_.size()); ++n) {
    if (drop_[n] != 0) out.push_back(n);
  }
  return out;
}

std::vector<std::size_t> InjectiveFunction::preimages_at_most(std::uint64_t m) const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < values_.size(); ++n) {
    if (values_[n] <= m) out.push_back(n);
  }
  if (m >= tail_start_) {
    for (std::uint64_t v = tail_start_; v <= m; ++v) out.push_back(values_.size() + (v - tail_start_));
  }
  return out;
}

bool InjectiveFunction::in_range(std::uint64_t m) const {
  return m >= tail_start_ || std::find(values_.begin(), values_.end(), m) != values_.end();
}

std::size_t InjectiveFunction::descents() const {
  std::size_t count = 0;
  for (std::size_t n = 0; n + 1 < values_.size(); ++n) {
    if (values_[n] > values_[n + 1]) ++count;
  }
  return count;
}

// --- FUF gadgets --------------------------------------------------------------

std::string_view to_string(FufVariant v) noexcept {
  switch (v) {
    case FufVariant::Omega: return "omega";
    case FufVariant::OmegaStar: return "omega-star";
    case FufVariant::Zeta: return "zeta";
  }
  return "?";
}

std::size_t FufGadget::union_size() const {
  std::size_t n = 0;
  for (const auto& part : parts) n += part.size();
  return n;
}

FufGadget make_fuf_gadget_from_sizes(std::span<const std::size_t> sizes, FufVariant variant) {
  FufGadget g;
  g.variant = variant;
  ElementId next = 0;
  std::vector<ElementId> ids;
  std::vector<IdPair> gens;
  for (std::size_t size : sizes) {
    std::optional<ElementId> floor;
    if (variant == FufVariant::Zeta) {
      floor = next++;
      ids.push_back(*floor);
      g.bottom_markers.push_back(*floor);
    }
    std::vector<ElementId> part;
    for (std::size_t k = 0; k < size; ++k) {
      part.push_back(next++);
      ids.push_back(part.back());
    }
    const ElementId marker = next++;
    ids.push_back(marker);
    g.top_markers.push_back(marker);
    for (ElementId x : part) {
      if (variant == FufVariant::OmegaStar) {
        gens.emplace_back(marker, x);
      } else {
        gens.emplace_back(x, marker);
      }
      if (floor) gens.emplace_back(*floor, x);
    }
    if (floor) gens.emplace_back(*floor, marker);
    g.parts.push_back(std::move(part));
  }
  g.base = build_poset(std::move(ids), gens);
  return g;
}

FufGadget make_fuf_gadget(std::span<const std::vector<ElementId>> sets, FufVariant variant) {
  std::vector<std::size_t> sizes;
  sizes.reserve(sets.size());
  for (const auto& s : sets) {
    std::unordered_set<ElementId> distinct(s.begin(), s.end());
    sizes.push_back(distinct.size());
  }
  return make_fuf_gadget_from_sizes(sizes, variant);
}

std::size_t fuf_decode(const LinearOrder& order, const FufGadget& gadget) {
  const auto check = is_linear_extension(order, gadget.base);
  if (!check) {
    throw Error(ErrorCode::NotAnExtension, "order is not a linear extension of the gadget (" +
                                               std::string(to_string(check.reason)) + ")");
  }
  if (gadget.top_markers.empty()) return 0;
  std::vector<std::size_t> at;
  for (ElementId m : gadget.top_markers) at.push_back(*order.index_of(m));
  if (gadget.variant == FufVariant::OmegaStar) {
    return order.size() - 1 - *std::min_element(at.begin(), at.end());
  }
  return *std::max_element(at.begin(), at.end());
}

// --- Stage order -----------------------------------------------------------

StageOrder::StageOrder(std::vector<std::uint64_t> f_prefix) : f_(std::move(f_prefix)) {
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t v : f_) {
    if (!seen.insert(v).second) throw Error(ErrorCode::NotInjective, "value " + std::to_string(v) + " repeats");
  }
  for (std::size_t n = 0; n < f_.size(); ++n) {
    for (std::size_t m = n + 1; m < f_.size(); ++m) {
      if (f_[m] < f_[n]) {
        false_stages_.push_back(n);
        break;
      }
    }
  }
}

bool StageOrder::leq(std::size_t n, std::size_t m) const {
  for (std::size_t k = n + 1; k <= m; ++k) {
    if (f_[k] < f_[n]) return true;
  }
  if (m <= n) {
    for (std::size_t k = m + 1; k <= n; ++k) {
      if (f_[k] <= f_[m]) return false;
    }
    return true;
  }
  return false;
}

LinearOrder StageOrder::as_linear_order() const {
  std::vector<ElementId> ids(size());
  for (std::size_t i = 0; i < size(); ++i) ids[i] = i;
  return LinearOrder(szpilrajn_insert(std::span<const ElementId>(ids),
                                      [this](ElementId a, ElementId b) { return leq(a, b); }));
}

FinitePoset StageOrder::as_poset() const {
  std::vector<ElementId> ids(size());
  for (std::size_t i = 0; i < size(); ++i) ids[i] = i;
  return FinitePoset::from_order(std::move(ids), [this](ElementId a, ElementId b) { return leq(a, b); });
}

StageOrder make_stage_order(std::span<const std::uint64_t> f_prefix) {
  return StageOrder(std::vector<std::uint64_t>(f_prefix.begin(), f_prefix.end()));
}

// --- Range gadget ----------------------------------------------------------

namespace {

/// a_m <= a_n in A, via first drops: for m < n, iff m drops by stage n;
/// for m > n, iff n does not drop by stage m.
bool stage_leq(const InjectiveFunction& f, std::size_t m, std::size_t n) {
  if (m == n) return true;
  if (m < n) {
    const auto w = f.first_drop_after(m);
    return w && *w <= n;
  }
  const auto w = f.first_drop_after(n);
  return !w || *w > m;
}

}  // namespace

RangeGadget make_range_gadget(InjectiveFunction f) {
  using namespace range_ids;
  auto fn = std::make_shared<const InjectiveFunction>(f);

  auto leq = [fn](ElementId x, ElementId y) {
    if (is_a(x) != is_a(y)) return false;
    if (is_a(x)) return stage_leq(*fn, index(x), index(y));
    return index(x) >= index(y);
  };

  OracleBundle o;
  o.predecessors = [fn](ElementId x) -> std::optional<std::vector<ElementId>> {
    if (!is_a(x)) return std::nullopt;
    const std::size_t n = index(x);
    const auto w = fn->first_drop_after(n);
    if (!w) return std::nullopt;
    std::vector<ElementId> out;
    for (std::size_t m = 0; m < n; ++m) {
      const auto wm = fn->first_drop_after(m);
      if (wm && *wm <= n) out.push_back(a(m));
    }
    for (std::size_t m = n; m < *w; ++m) out.push_back(a(m));
    return out;
  };
  o.successors = [fn](ElementId x) -> std::optional<std::vector<ElementId>> {
    std::vector<ElementId> out;
    if (!is_a(x)) {
      for (std::size_t m = 0; m <= index(x); ++m) out.push_back(b(m));
      return out;
    }
    const std::size_t n = index(x);
    if (!fn->is_true_stage(n)) return std::nullopt;
    for (std::size_t m = 0; m <= n; ++m) {
      if (stage_leq(*fn, n, m)) out.push_back(a(m));
    }
    return out;
  };
  o.side = [fn](ElementId x) {
    if (!is_a(x)) return Side::FinSucc;
    return fn->is_true_stage(index(x)) ? Side::FinSucc : Side::FinPred;
  };
  // Finite exactly when both ends sit on the same side. True stages lie above
  // every false one and are ordered by descending index, so a true lower end
  // gives the true stages in [m, n]; a false upper end bounds the candidates by
  // its first drop.
  o.interval = [fn, leq](ElementId x, ElementId y) -> std::optional<std::vector<ElementId>> {
    if (!leq(x, y)) std::swap(x, y);
    if (!leq(x, y)) return std::vector<ElementId>{};
    std::vector<ElementId> out;
    if (!is_a(x)) {
      out.reserve(index(x) - index(y) + 1);
      for (std::size_t k = index(y); k <= index(x); ++k) out.push_back(b(k));
      return out;
    }
    const std::size_t n = index(x);
    const std::size_t m = index(y);
    if (fn->is_true_stage(n)) {
      out.reserve(n - m + 1);
      for (std::size_t k = m; k <= n; ++k) {
        if (fn->is_true_stage(k)) out.push_back(a(k));
      }
      return out;
    }
    const auto w = fn->first_drop_after(m);
    if (!w) return std::nullopt;
    for (std::size_t k = 0; k < *w; ++k) {
      if (stage_leq(*fn, n, k) && stage_leq(*fn, k, m)) out.push_back(a(k));
    }
    return out;
  };

  return {std::move(f), StreamPoset(
                            "range:" + fn->spec(), [](std::size_t s) -> std::optional<ElementId> { return s; },
                            std::move(leq), std::move(o))};
}

FalseStageDecode decode_false_stages(const LinearOrder& order, std::size_t s) {
  using namespace range_ids;
  FalseStageDecode out;
  std::optional<std::size_t> first_b;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!is_a(order.elements()[i])) {
      ++out.horizon;
      if (!first_b) first_b = i;
    }
  }
  if (out.horizon < s) {
    throw Error(ErrorCode::HorizonTooSmall,
                "order holds " + std::to_string(out.horizon) + " b elements, need at least " + std::to_string(s));
  }
  for (std::size_t n = 0; n < s; ++n) {
    const auto at = order.index_of(a(n));
    if (!at) throw Error(ErrorCode::HorizonTooSmall, "a_" + std::to_string(n) + " is not in the order");
    if (!first_b || *at < *first_b) out.false_stages.push_back(n);
  }
  return out;
}

// --- Embedding gadget ------------------------------------------------------

namespace {

ElementId embed_stage(std::size_t s) {
  // round r occupies stages r(r+3)/2 .. r(r+3)/2 + r + 1
  auto r = static_cast<std::size_t>((std::sqrt(9.0 + 8.0 * static_cast<double>(s)) - 3.0) / 2.0);
  while (embed_ids::stage_of_a(r) > s) --r;
  while (embed_ids::stage_of_a(r + 1) <= s) ++r;
  const std::size_t offset = s - embed_ids::stage_of_a(r);
  return offset == 0 ? embed_ids::a(r) : embed_ids::b(r, offset - 1);
}

}  // namespace

EmbedGadget make_embed_gadget(InjectiveFunction f) {
  auto fn = std::make_shared<const InjectiveFunction>(f);
  auto leq = [fn](ElementId x, ElementId y) {
    if (x == y) return true;
    if (embed_ids::is_a(x) || !embed_ids::is_a(y)) return false;
    const std::size_t n = unpair_id((x - 1) / 2).first;
    return (*fn)(n) <= y / 2;
  };
  OracleBundle o;
  o.predecessors = [fn](ElementId x) -> std::optional<std::vector<ElementId>> {
    std::vector<ElementId> out{x};
    if (!embed_ids::is_a(x)) return out;
    for (std::size_t n : fn->preimages_at_most(x / 2)) {
      for (std::size_t j = 0; j <= n; ++j) out.push_back(embed_ids::b(n, j));
    }
    return out;
  };
  o.successors = [](ElementId x) -> std::optional<std::vector<ElementId>> {
    if (embed_ids::is_a(x)) return std::vector<ElementId>{x};
    return std::nullopt;
  };
  o.interval = [leq](ElementId x, ElementId y) -> std::optional<std::vector<ElementId>> {
    if (x == y) return std::vector<ElementId>{x};
    if (leq(x, y) || leq(y, x)) return std::vector<ElementId>{x, y};
    return std::vector<ElementId>{};
  };
  o.side = [](ElementId) { return Side::FinPred; };
  return {std::move(f), StreamPoset(
                            "embed:" + fn->spec(), [](std::size_t s) -> std::optional<ElementId> { return embed_stage(s); },
                            std::move(leq), std::move(o))};
}

std::size_t embed_gadget_budget(const EmbedGadget& gadget, std::size_t k) {
  BlockLinearizer lin(gadget.stream, BlockLinearizer::Mode::Omega);
  std::size_t pivots_a = 0;
  while (pivots_a < k) {
    lin.next_block();
    if (embed_ids::is_a(lin.blocks().back().pivot)) ++pivots_a;
  }
  return lin.blocks().size();
}

bool decode_range(const Embedding& h, std::span<const std::uint64_t> f_prefix, std::uint64_t m) {
  if (h.kind() != OrderKind::Omega) {
    throw Error(ErrorCode::KindMismatch, "range decoding needs an omega embedding");
  }
  const auto bound = static_cast<std::size_t>(h.at(embed_ids::a(m)).rank);
  if (bound > f_prefix.size()) {
    throw Error(ErrorCode::PrefixTooShort, "h(a_" + std::to_string(m) + ") = " + std::to_string(bound) +
                                               " exceeds the " + std::to_string(f_prefix.size()) + " given values");
  }
  return std::find(f_prefix.begin(), f_prefix.begin() + static_cast<std::ptrdiff_t>(bound), m) !=
         f_prefix.begin() + static_cast<std::ptrdiff_t>(bound);
}

}  // namespace taulike
