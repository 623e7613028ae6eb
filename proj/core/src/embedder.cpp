#include "taulike/embedder.hpp"

#include <string>

#include "taulike/linearizer.hpp"

namespace taulike {

Embedding::Embedding(OrderKind kind, std::vector<Assignment> assignments)
    : kind_(kind), assignments_(std::move(assignments)) {
  index_.reserve(assignments_.size());
  for (std::size_t i = 0; i < assignments_.size(); ++i) {
    if (assignments_[i].second.kind != kind_) {
      throw Error(ErrorCode::KindMismatch, "assignment of element " + std::to_string(assignments_[i].first) +
                                               " is not a " + std::string(to_string(kind_)) + " point");
    }
    if (!index_.emplace(assignments_[i].first, i).second) {
      throw Error(ErrorCode::DuplicateIdError, "element " + std::to_string(assignments_[i].first) + " assigned twice");
    }
  }
}

const CanonicalPoint& Embedding::at(ElementId x) const {
  auto it = index_.find(x);
  if (it == index_.end()) {
    throw Error(ErrorCode::NotStabilized, "element " + std::to_string(x) + " has no final coordinate");
  }
  return assignments_[it->second].second;
}

namespace {

void require_growth(const LinearOrder& order, std::initializer_list<Growth> allowed, std::string_view what) {
  for (Growth g : allowed) {
    if (order.growth() == g) return;
  }
  throw Error(ErrorCode::NotStabilized, std::string(what) + " ranks are not final on an order with growth '" +
                                            std::string(to_string(order.growth())) + "'");
}

}  // namespace

Embedding embed_omega(const LinearOrder& order) {
  require_growth(order, {Growth::Fixed, Growth::Right}, "omega");
  std::vector<Embedding::Assignment> out;
  out.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.emplace_back(order.elements()[i], CanonicalPoint::omega(static_cast<std::int64_t>(i)));
  }
  return Embedding(OrderKind::Omega, std::move(out));
}

Embedding embed_omega_star(const LinearOrder& order) {
  require_growth(order, {Growth::Fixed, Growth::Left}, "omega*");
  std::vector<Embedding::Assignment> out;
  out.reserve(order.size());
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(order.elements()[i], CanonicalPoint::omega_star(static_cast<std::int64_t>(n - 1 - i)));
  }
  return Embedding(OrderKind::OmegaStar, std::move(out));
}

Embedding embed_omega_plus_omega_star(const LinearOrder& order, std::span<const Side> sides) {
  if (sides.size() != order.size()) {
    throw Error(ErrorCode::InvalidArgument, "side classification does not cover the order");
  }
  std::size_t boundary = 0;
  while (boundary < sides.size() && sides[boundary] == Side::FinPred) ++boundary;
  for (std::size_t i = boundary; i < sides.size(); ++i) {
    if (sides[i] == Side::FinPred) {
      throw Error(ErrorCode::ClassifierInconsistent,
                  "fin-pred element " + std::to_string(order.elements()[i]) + " follows a fin-succ element");
    }
  }
  const bool lower_final = order.growth() == Growth::Fixed || order.growth() == Growth::Middle ||
                           order.growth() == Growth::Right;
  const bool upper_final = order.growth() == Growth::Fixed || order.growth() == Growth::Middle ||
                           order.growth() == Growth::Left;
  if ((boundary > 0 && !lower_final) || (boundary < sides.size() && !upper_final)) {
    throw Error(ErrorCode::NotStabilized, "omega+omega* ranks are not final on an order with growth '" +
                                              std::string(to_string(order.growth())) + "'");
  }
  std::vector<Embedding::Assignment> out;
  out.reserve(order.size());
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto coord = i < boundary ? CanonicalPoint::omega_plus_omega_star(0, static_cast<std::int64_t>(i))
                                    : CanonicalPoint::omega_plus_omega_star(1, static_cast<std::int64_t>(n - 1 - i));
    out.emplace_back(order.elements()[i], coord);
  }
  return Embedding(OrderKind::OmegaPlusOmegaStar, std::move(out));
}

Embedding embed_zeta(const LinearOrder& order) {
  // Only insertions strictly inside the truncation can move a signed position.
  require_growth(order, {Growth::Fixed, Growth::Right, Growth::Left, Growth::BothEnds}, "zeta");
  std::vector<Embedding::Assignment> out;
  out.reserve(order.size());
  for (ElementId x : order.elements()) {
    out.emplace_back(x, CanonicalPoint::zeta(order.signed_position(x)));
  }
  return Embedding(OrderKind::Zeta, std::move(out));
}

Embedding embed_poset(const StreamPoset& stream, OrderKind kind, std::size_t budget) {
  switch (kind) {
    case OrderKind::Omega:
      return embed_omega(omega_linearize(stream, budget).order);
    case OrderKind::OmegaStar:
      return embed_omega_star(omega_star_linearize(stream, budget).order);
    case OrderKind::Zeta:
      return embed_zeta(zeta_linearize(stream, budget).order);
    case OrderKind::OmegaPlusOmegaStar: {
      const auto split = split_linearize(stream, budget);
      return embed_omega_plus_omega_star(split.order, split.sides);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown order kind");
}

}  // namespace taulike
