#include "taulike/linearizer.hpp"

#include <algorithm>
#include <memory>
#include <string>

namespace taulike {

std::string_view to_string(BlockSide s) noexcept { return s == BlockSide::Left ? "left" : "right"; }

LinearOrder szpilrajn_extend(const FinitePoset& poset) {
  return LinearOrder(szpilrajn_insert(poset.elements(), [&poset](ElementId a, ElementId b) { return poset.leq(a, b); }));
}

namespace {

std::string_view mode_name(BlockLinearizer::Mode m) {
  switch (m) {
    case BlockLinearizer::Mode::Omega: return "omega";
    case BlockLinearizer::Mode::OmegaStar: return "omega-star";
    case BlockLinearizer::Mode::Zeta: return "zeta";
  }
  return "?";
}

}  // namespace

BlockLinearizer::BlockLinearizer(StreamPoset stream, Mode mode) : stream_(std::move(stream)), mode_(mode) {
  const OracleBundle& o = stream_.oracles();
  const bool present = mode_ == Mode::Omega       ? static_cast<bool>(o.predecessors)
                       : mode_ == Mode::OmegaStar ? static_cast<bool>(o.successors)
                                                  : static_cast<bool>(o.interval);
  if (!present) {
    throw Error(ErrorCode::OracleMissing, std::string(mode_name(mode_)) + " linearization of '" + stream_.name() +
                                              "' needs an oracle the stream does not supply");
  }
}

std::vector<ElementId> BlockLinearizer::oracle_set(const FiniteSetOracle& oracle, ElementId x,
                                                   std::string_view what) const {
  auto answer = oracle(x);
  if (!answer) {
    throw Error(ErrorCode::OracleMissing, std::string(what) + " of element " + std::to_string(x) + " in '" +
                                              stream_.name() + "' is not finite");
  }
  return std::move(*answer);
}

std::vector<ElementId> BlockLinearizer::block_members(ElementId pivot) {
  std::vector<ElementId> candidates;
  switch (mode_) {
    case Mode::Omega:
      candidates = oracle_set(stream_.oracles().predecessors, pivot, "predecessors");
      break;
    case Mode::OmegaStar:
      candidates = oracle_set(stream_.oracles().successors, pivot, "successors");
      break;
    case Mode::Zeta:
      for (const Block& b : blocks_) {
        auto part = stream_.oracles().interval(b.pivot, pivot);
        if (!part) {
          throw Error(ErrorCode::OracleMissing, "interval [" + std::to_string(b.pivot) + "," + std::to_string(pivot) +
                                                    "] in '" + stream_.name() + "' is not finite");
        }
        candidates.insert(candidates.end(), part->begin(), part->end());
      }
      break;
  }
  candidates.push_back(pivot);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::erase_if(candidates, [this](ElementId x) { return placed_.count(x) != 0; });
  return candidates;
}

bool BlockLinearizer::next_block() {
  if (exhausted_) return false;
  std::optional<ElementId> pivot;
  for (;; ++cursor_) {
    pivot = stream_.at(cursor_);
    if (!pivot) {
      exhausted_ = true;
      return false;
    }
    if (placed_.count(*pivot) == 0) break;
  }

  Block block;
  block.pivot = *pivot;
  if (mode_ == Mode::Zeta) {
    const bool below_earlier = std::any_of(blocks_.begin(), blocks_.end(),
                                           [&](const Block& b) { return stream_.leq(*pivot, b.pivot); });
    block.side = below_earlier ? BlockSide::Left : BlockSide::Right;
  }

  const auto members = block_members(*pivot);
  block.members = szpilrajn_insert(std::span<const ElementId>(members),
                                   [this](ElementId a, ElementId b) { return stream_.leq(a, b); });
  for (ElementId x : block.members) placed_.insert(x);

  if (blocks_.empty()) {
    const auto at = std::find(block.members.begin(), block.members.end(), block.pivot);
    pivot0_offset_ = static_cast<std::size_t>(at - block.members.begin());
  }
  const bool prepend = mode_ == Mode::OmegaStar || block.side == BlockSide::Left;
  if (prepend) {
    line_.insert(line_.begin(), block.members.begin(), block.members.end());
    if (!blocks_.empty()) pivot0_offset_ += block.members.size();
  } else {
    line_.insert(line_.end(), block.members.begin(), block.members.end());
  }
  blocks_.push_back(std::move(block));
  ++cursor_;
  return true;
}

void BlockLinearizer::run_blocks(std::size_t count) {
  while (blocks_.size() < count && next_block()) {
  }
}

void BlockLinearizer::run_elements(std::size_t count) {
  while (line_.size() < count && next_block()) {
  }
}

LinearOrder BlockLinearizer::order() const {
  std::vector<ElementId> seq(line_.begin(), line_.end());
  if (exhausted_ || seq.empty()) {
    const std::size_t anchor = mode_ == Mode::OmegaStar && !seq.empty() ? seq.size() - 1
                               : mode_ == Mode::Zeta                    ? pivot0_offset_
                                                                        : 0;
    return LinearOrder(std::move(seq), anchor, Growth::Fixed);
  }
  switch (mode_) {
    case Mode::Omega:
      return LinearOrder(std::move(seq), 0, Growth::Right);
    case Mode::OmegaStar: {
      const std::size_t last = seq.size() - 1;
      return LinearOrder(std::move(seq), last, Growth::Left);
    }
    case Mode::Zeta:
      return LinearOrder(std::move(seq), pivot0_offset_, Growth::BothEnds);
  }
  return LinearOrder(std::move(seq));
}

namespace {

Linearization run(const StreamPoset& stream, BlockLinearizer::Mode mode, std::size_t blocks_wanted) {
  BlockLinearizer lin(stream, mode);
  lin.run_blocks(blocks_wanted);
  return lin.result();
}

StreamPoset substream(const StreamPoset& stream, std::vector<ElementId> ids, std::string suffix) {
  auto shared = std::make_shared<const std::vector<ElementId>>(std::move(ids));
  return StreamPoset(
      stream.name() + suffix,
      [shared](std::size_t s) -> std::optional<ElementId> {
        if (s >= shared->size()) return std::nullopt;
        return (*shared)[s];
      },
      [stream](ElementId a, ElementId b) { return stream.leq(a, b); }, stream.oracles());
}

}  // namespace

Linearization omega_linearize(const StreamPoset& stream, std::size_t blocks_wanted) {
  return run(stream, BlockLinearizer::Mode::Omega, blocks_wanted);
}

Linearization omega_star_linearize(const StreamPoset& stream, std::size_t blocks_wanted) {
  return run(stream, BlockLinearizer::Mode::OmegaStar, blocks_wanted);
}

Linearization zeta_linearize(const StreamPoset& stream, std::size_t blocks_wanted) {
  return run(stream, BlockLinearizer::Mode::Zeta, blocks_wanted);
}

Linearization linearize_elements(const StreamPoset& stream, BlockLinearizer::Mode mode, std::size_t elements_wanted) {
  BlockLinearizer lin(stream, mode);
  lin.run_elements(elements_wanted);
  return lin.result();
}

SplitLinearization split_linearize(const StreamPoset& stream, std::size_t elements_wanted) {
  const OracleBundle& o = stream.oracles();
  if (!o.side) {
    throw Error(ErrorCode::OracleMissing, "split linearization of '" + stream.name() + "' needs the side oracle");
  }
  const auto ids = available_prefix(stream, elements_wanted);
  const bool whole_domain = !stream.at(ids.size()).has_value();

  std::vector<ElementId> lower_ids;
  std::vector<ElementId> upper_ids;
  for (ElementId x : ids) {
    (o.side(x) == Side::FinPred ? lower_ids : upper_ids).push_back(x);
  }

  SplitLinearization out;
  if (!lower_ids.empty()) {
    BlockLinearizer lin(substream(stream, std::move(lower_ids), "/fin-pred"), BlockLinearizer::Mode::Omega);
    while (lin.next_block()) {
    }
    out.lower = lin.result();
  }
  if (!upper_ids.empty()) {
    BlockLinearizer lin(substream(stream, std::move(upper_ids), "/fin-succ"), BlockLinearizer::Mode::OmegaStar);
    while (lin.next_block()) {
    }
    out.upper = lin.result();
  }

  const auto lower = out.lower.order.elements();
  const auto upper = out.upper.order.elements();
  for (ElementId x : lower) {
    if (o.side(x) != Side::FinPred) {
      throw Error(ErrorCode::ClassifierInconsistent,
                  "element " + std::to_string(x) + " is a predecessor of a fin-pred element but is classified fin-succ");
    }
  }
  for (ElementId x : upper) {
    if (o.side(x) != Side::FinSucc) {
      throw Error(ErrorCode::ClassifierInconsistent,
                  "element " + std::to_string(x) + " is a successor of a fin-succ element but is classified fin-pred");
    }
  }
  for (ElementId x : upper) {
    for (ElementId y : lower) {
      if (stream.leq(x, y)) {
        throw Error(ErrorCode::ClassifierInconsistent, "fin-succ element " + std::to_string(x) +
                                                           " lies below fin-pred element " + std::to_string(y));
      }
    }
  }

  std::vector<ElementId> seq(lower.begin(), lower.end());
  seq.insert(seq.end(), upper.begin(), upper.end());
  out.sides.assign(lower.size(), Side::FinPred);
  out.sides.insert(out.sides.end(), upper.size(), Side::FinSucc);
  out.order = LinearOrder(std::move(seq), 0, whole_domain ? Growth::Fixed : Growth::Middle);
  return out;
}

}  // namespace taulike
