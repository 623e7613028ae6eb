#include "taulike/poset.hpp"

#include <cmath>
#include <string>

namespace taulike {

ElementId pair_ids(ElementId first, ElementId second) {
  const ElementId s = first + second;
  return s * (s + 1) / 2 + second;
}

IdPair unpair_id(ElementId code) {
  auto w = static_cast<ElementId>((std::sqrt(8.0L * static_cast<long double>(code) + 1) - 1) / 2);
  // sqrt rounding can be off by one for large codes
  while (w * (w + 1) / 2 > code) --w;
  while ((w + 1) * (w + 2) / 2 <= code) ++w;
  const ElementId second = code - w * (w + 1) / 2;
  return {w - second, second};
}

FinitePoset::FinitePoset(std::vector<ElementId> elements) : elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw Error(ErrorCode::DuplicateIdError, "duplicate element id " + std::to_string(elements_[i]));
    }
  }
  words_ = (elements_.size() + 63) / 64;
  bits_.assign(elements_.size() * words_, 0);
}

std::optional<std::size_t> FinitePoset::index_of(ElementId x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FinitePoset::checked_index(ElementId x) const {
  auto it = index_.find(x);
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownIdError, "unknown element id " + std::to_string(x));
  }
  return it->second;
}

bool FinitePoset::leq(ElementId x, ElementId y) const {
  return leq_at(checked_index(x), checked_index(y));
}

std::vector<ElementId> FinitePoset::predecessors(ElementId x) const {
  const std::size_t j = checked_index(x);
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (leq_at(i, j)) out.push_back(elements_[i]);
  }
  return out;
}

std::vector<ElementId> FinitePoset::successors(ElementId x) const {
  const std::size_t i = checked_index(x);
  std::vector<ElementId> out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (leq_at(i, j)) out.push_back(elements_[j]);
  }
  return out;
}

std::vector<ElementId> FinitePoset::interval(ElementId x, ElementId y) const {
  std::size_t lo = checked_index(x);
  std::size_t hi = checked_index(y);
  if (!leq_at(lo, hi)) std::swap(lo, hi);
  std::vector<ElementId> out;
  if (!leq_at(lo, hi)) return out;
  for (std::size_t k = 0; k < size(); ++k) {
    if (leq_at(lo, k) && leq_at(k, hi)) out.push_back(elements_[k]);
  }
  return out;
}

std::vector<IdPair> FinitePoset::relation() const {
  std::vector<IdPair> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (leq_at(i, j)) out.emplace_back(elements_[i], elements_[j]);
    }
  }
  return out;
}

std::vector<IdPair> FinitePoset::cover_relation() const {
  std::vector<IdPair> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i == j || !leq_at(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < size() && covered; ++k) {
        if (k != i && k != j && leq_at(i, k) && leq_at(k, j)) covered = false;
      }
      if (covered) out.emplace_back(elements_[i], elements_[j]);
    }
  }
  return out;
}

FinitePoset FinitePoset::restrict_to(std::span<const ElementId> subset) const {
  for (ElementId x : subset) checked_index(x);
  return from_order(std::vector<ElementId>(subset.begin(), subset.end()),
                    [this](ElementId a, ElementId b) { return leq(a, b); });
}

FinitePoset FinitePoset::dual() const {
  FinitePoset d(elements_);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (leq_at(i, j)) d.set(j, i);
    }
  }
  return d;
}

void FinitePoset::close() {
  // Warshall over up-set rows: if i <= k then up(k) is contained in up(i).
  const std::size_t n = size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t* row_k = &bits_[k * words_];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || !leq_at(i, k)) continue;
      std::uint64_t* row_i = &bits_[i * words_];
      for (std::size_t w = 0; w < words_; ++w) row_i[w] |= row_k[w];
    }
  }
}

bool FinitePoset::satisfies_order_axioms() const {
  try {
    validate();
  } catch (const Error&) {
    return false;
  }
  return true;
}

void FinitePoset::validate() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_at(i, i)) {
      throw Error(ErrorCode::InvalidArgument, "relation is not reflexive at " + std::to_string(elements_[i]));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq_at(i, j) && leq_at(j, i)) {
        throw Error(ErrorCode::CycleError, "elements " + std::to_string(elements_[i]) + " and " +
                                               std::to_string(elements_[j]) + " are mutually below each other");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t* row_i = &bits_[i * words_];
    for (std::size_t k = 0; k < n; ++k) {
      if (!leq_at(i, k)) continue;
      const std::uint64_t* row_k = &bits_[k * words_];
      for (std::size_t w = 0; w < words_; ++w) {
        if ((row_k[w] & ~row_i[w]) != 0) {
          throw Error(ErrorCode::InvalidArgument, "relation is not transitive through " + std::to_string(elements_[k]));
        }
      }
    }
  }
}

FinitePoset build_poset(std::vector<ElementId> elements, std::span<const IdPair> relation) {
  FinitePoset p(std::move(elements));
  for (std::size_t i = 0; i < p.size(); ++i) p.set(i, i);
  for (const auto& [x, y] : relation) {
    p.set(p.checked_index(x), p.checked_index(y));
  }
  p.close();
  p.validate();
  return p;
}

FinitePoset lex_sum(const FinitePoset& index, const std::map<ElementId, FinitePoset>& parts) {
  std::vector<ElementId> ids;
  std::unordered_map<ElementId, IdPair> origin;
  for (ElementId i : index.elements()) {
    auto it = parts.find(i);
    if (it == parts.end()) {
      throw Error(ErrorCode::MissingPartError, "no part for index element " + std::to_string(i));
    }
    for (ElementId x : it->second.elements()) {
      const ElementId id = pair_ids(i, x);
      ids.push_back(id);
      origin.emplace(id, IdPair{i, x});
    }
  }
  return FinitePoset::from_order(std::move(ids), [&](ElementId a, ElementId b) {
    const auto [i, x] = origin.at(a);
    const auto [j, y] = origin.at(b);
    if (i == j) return parts.at(i).leq(x, y);
    return index.leq(i, j);
  });
}

FinitePoset disjoint_sum(std::span<const FinitePoset> parts) {
  std::map<ElementId, FinitePoset> indexed;
  for (std::size_t k = 0; k < parts.size(); ++k) indexed.emplace(k, parts[k]);
  return lex_sum(antichain(parts.size()), indexed);
}

namespace {

std::vector<ElementId> iota_ids(std::size_t n) {
  std::vector<ElementId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  return ids;
}

}  // namespace

FinitePoset chain(std::size_t n) {
  return FinitePoset::from_order(iota_ids(n), [](ElementId a, ElementId b) { return a <= b; });
}

FinitePoset antichain(std::size_t n) {
  return build_poset(iota_ids(n), {});
}

FinitePoset fence(std::size_t n) {
  std::vector<IdPair> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (i % 2 == 0) {
      gens.emplace_back(i, i + 1);
    } else {
      gens.emplace_back(i + 1, i);
    }
  }
  return build_poset(iota_ids(n), gens);
}

}  // namespace taulike
