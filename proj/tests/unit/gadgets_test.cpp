#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "taulike/gadgets.hpp"
#include "taulike/harness.hpp"
#include "taulike/linearizer.hpp"

using namespace taulike;

namespace {

std::vector<std::size_t> sizes(std::initializer_list<std::size_t> s) { return s; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no taulike::Error thrown";
  return ErrorCode::InvalidArgument;
}

std::vector<std::uint64_t> random_injective(std::mt19937_64& rng, std::size_t len) {
  std::set<std::uint64_t> used;
  std::vector<std::uint64_t> out;
  while (out.size() < len) {
    const std::uint64_t v = rng() % 40;
    if (used.insert(v).second) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(InjectiveFunction, Specs) {
  auto id = InjectiveFunction::parse("identity");
  EXPECT_EQ(id.values(4), (std::vector<std::uint64_t>{0, 1, 2, 3}));
  auto perm = InjectiveFunction::parse("perm:1,0,2");
  EXPECT_EQ(perm.values(5), (std::vector<std::uint64_t>{1, 0, 2, 3, 4}));
  auto swaps = InjectiveFunction::parse("swap:2");
  EXPECT_EQ(swaps.values(6), (std::vector<std::uint64_t>{1, 0, 3, 2, 4, 5}));
  auto pre = InjectiveFunction::parse("prefix:5,3,9");
  EXPECT_EQ(pre.values(5), (std::vector<std::uint64_t>{5, 3, 9, 10, 11}));
  auto raw = InjectiveFunction::parse("values:2,0;tail:7");
  EXPECT_EQ(raw.values(4), (std::vector<std::uint64_t>{2, 0, 7, 8}));
  EXPECT_EQ(InjectiveFunction::parse(raw.spec()).values(10), raw.values(10));
  EXPECT_EQ(InjectiveFunction::parse(pre.spec()).values(10), pre.values(10));
}

TEST(InjectiveFunction, BadSpecs) {
  EXPECT_EQ(code_of([] { InjectiveFunction::parse("perm:0,0"); }), ErrorCode::NotInjective);
  EXPECT_EQ(code_of([] { InjectiveFunction::parse("perm:1,2"); }), ErrorCode::NotInjective);
  EXPECT_EQ(code_of([] { InjectiveFunction::parse("values:9;tail:3"); }), ErrorCode::NotInjective);
  EXPECT_EQ(code_of([] { InjectiveFunction::parse("swap:x"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { InjectiveFunction::parse("cubic"); }), ErrorCode::ParseError);
}

TEST(InjectiveFunction, StagesAndRange) {
  auto f = InjectiveFunction::with_prefix({4, 1, 3, 0});
  EXPECT_EQ(f.false_stages_below(10), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(f.is_true_stage(3));
  EXPECT_EQ(f.first_drop_after(0), 1u);
  EXPECT_EQ(f.first_drop_after(2), 3u);
  EXPECT_EQ(f.preimages_at_most(3), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_TRUE(f.in_range(5));
  EXPECT_FALSE(f.in_range(2));
  EXPECT_EQ(f.descents(), 2u);
}

TEST(FufGadget, Examples) {
  const std::vector<std::vector<ElementId>> empty{{}};
  auto single = make_fuf_gadget(empty, FufVariant::Omega);
  EXPECT_EQ(single.base.size(), 1u);
  EXPECT_EQ(single.top_markers.size(), 1u);

  auto g = make_fuf_gadget_from_sizes(sizes({1, 2}), FufVariant::Omega);
  ASSERT_EQ(g.base.size(), 5u);
  // x00=0, m0=1, x10=2, x11=3, m1=4
  EXPECT_EQ(g.top_markers, (std::vector<ElementId>{1, 4}));
  const std::vector<IdPair> strict{{0, 1}, {2, 4}, {3, 4}};
  std::size_t count = 0;
  for (ElementId x : g.base.elements()) {
    for (ElementId y : g.base.elements()) count += g.base.less(x, y) ? 1 : 0;
  }
  EXPECT_EQ(count, strict.size());
  for (auto [x, y] : strict) EXPECT_TRUE(g.base.less(x, y));
  EXPECT_EQ(g.union_size(), 3u);

  auto z = make_fuf_gadget_from_sizes(sizes({1}), FufVariant::Zeta);
  EXPECT_EQ(z.base, chain(3));
  EXPECT_EQ(z.bottom_markers, std::vector<ElementId>{0});
  EXPECT_EQ(z.top_markers, std::vector<ElementId>{2});
}

TEST(FufGadget, OmegaStarIsDual) {
  auto g = make_fuf_gadget_from_sizes(sizes({2, 0, 3}), FufVariant::Omega);
  auto d = make_fuf_gadget_from_sizes(sizes({2, 0, 3}), FufVariant::OmegaStar);
  EXPECT_EQ(d.base, g.base.dual());
}

TEST(FufGadget, ContentsOnlyMatterThroughSizes) {
  const std::vector<std::vector<ElementId>> sets{{42}, {7, 99}};
  auto g = make_fuf_gadget(sets, FufVariant::Zeta);
  EXPECT_EQ(g.base, make_fuf_gadget_from_sizes(sizes({1, 2}), FufVariant::Zeta).base);
}

TEST(FufDecode, Examples) {
  auto g = make_fuf_gadget_from_sizes(sizes({1, 2}), FufVariant::Omega);
  EXPECT_EQ(fuf_decode(LinearOrder({0, 1, 2, 3, 4}), g), 4u);
  auto empty = make_fuf_gadget_from_sizes(sizes({0}), FufVariant::Omega);
  EXPECT_EQ(fuf_decode(szpilrajn_extend(empty.base), empty), 0u);
  EXPECT_EQ(code_of([&] { fuf_decode(LinearOrder({1, 0, 2, 3, 4}), g); }), ErrorCode::NotAnExtension);
}

TEST(FufDecode, TwoSingletonsEveryExtension) {
  for (auto variant : {FufVariant::Omega, FufVariant::Zeta}) {
    auto g = make_fuf_gadget_from_sizes(sizes({1, 1}), variant);
    const auto all = oracle::extensions(g.base);
    EXPECT_EQ(all.size(), variant == FufVariant::Omega ? 6u : 20u);
    for (const auto& l : all) EXPECT_GE(fuf_decode(LinearOrder(l), g), 2u);
  }
}

TEST(FufDecode, OmegaStarUsesSuccessorsOfLeastMarker) {
  auto g = make_fuf_gadget_from_sizes(sizes({1, 2}), FufVariant::OmegaStar);
  for (const auto& l : oracle::extensions(g.base)) EXPECT_GE(fuf_decode(LinearOrder(l), g), 3u);
}

TEST(StageOrder, Examples) {
  StageOrder inc({0, 1, 2});
  for (std::size_t n = 0; n < 3; ++n) {
    for (std::size_t m = 0; m < 3; ++m) EXPECT_EQ(inc.leq(n, m), m <= n);
  }
  StageOrder s({1, 0, 2});
  const auto line = s.as_linear_order();
  EXPECT_EQ(std::vector<ElementId>(line.elements().begin(), line.elements().end()), (std::vector<ElementId>{0, 2, 1}));
  EXPECT_EQ(s.false_stages(), std::vector<std::size_t>{0});
  StageOrder one({5});
  EXPECT_EQ(one.as_poset(), chain(1));
  EXPECT_EQ(code_of([] { StageOrder({3, 3}); }), ErrorCode::NotInjective);
}

TEST(StageOrder, MatchesLiteralFormulaAndIsLinear) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_injective(rng, 1 + rng() % 12);
    StageOrder a(f);
    const std::size_t s = f.size();
    for (std::size_t n = 0; n < s; ++n) {
      for (std::size_t m = 0; m < s; ++m) {
        ASSERT_EQ(a.leq(n, m), oracle::stage_leq(f, n, m));
        EXPECT_TRUE(a.leq(n, m) || a.leq(m, n));
        if (n != m) EXPECT_FALSE(a.leq(n, m) && a.leq(m, n));
      }
    }
    EXPECT_TRUE(a.as_poset().satisfies_order_axioms());
    std::vector<std::size_t> want;
    for (std::size_t n = 0; n < s; ++n) {
      if (oracle::is_false_stage(f, n)) want.push_back(n);
    }
    EXPECT_EQ(a.false_stages(), want);
  }
}

TEST(StageOrder, FalseStagePredecessorCountSettles) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_injective(rng, 20);
    for (std::size_t n = 0; n < f.size(); ++n) {
      std::optional<std::size_t> witness;
      for (std::size_t k = n + 1; k < f.size() && !witness; ++k) {
        if (f[k] < f[n]) witness = k;
      }
      if (!witness) continue;
      std::optional<std::size_t> settled;
      for (std::size_t s = *witness + 1; s <= f.size(); ++s) {
        std::size_t below = 0;
        for (std::size_t m = 0; m < s; ++m) below += oracle::stage_leq(f, m, n) ? 1 : 0;
        if (!settled) settled = below;
        EXPECT_EQ(below, *settled);
      }
    }
  }
}

TEST(RangeGadget, Sides) {
  auto id = make_range_gadget(InjectiveFunction::identity());
  for (std::size_t n = 0; n < 20; ++n) EXPECT_EQ(id.stream.oracles().side(range_ids::a(n)), Side::FinSucc);
  auto g = make_range_gadget(InjectiveFunction::with_prefix({1, 0, 2}));
  EXPECT_EQ(g.stream.oracles().side(range_ids::a(0)), Side::FinPred);
  for (std::size_t n = 1; n < 20; ++n) EXPECT_EQ(g.stream.oracles().side(range_ids::a(n)), Side::FinSucc);
  for (std::size_t n = 0; n < 20; ++n) {
    EXPECT_EQ(g.stream.oracles().side(range_ids::b(n)), Side::FinSucc);
    std::vector<ElementId> want;
    for (std::size_t m = 0; m <= n; ++m) want.push_back(range_ids::b(m));
    auto got = *g.stream.oracles().successors(range_ids::b(n));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, want);
  }
}

TEST(RangeGadget, OrderAgreesWithLiteralFormula) {
  auto f = InjectiveFunction::with_prefix({6, 2, 9, 0, 4});
  auto g = make_range_gadget(f);
  const auto values = f.values(30);
  for (std::size_t n = 0; n < 30; ++n) {
    for (std::size_t m = 0; m < 30; ++m) {
      EXPECT_EQ(g.stream.leq(range_ids::a(n), range_ids::a(m)), oracle::stage_leq(values, n, m));
      EXPECT_EQ(g.stream.leq(range_ids::b(n), range_ids::b(m)), n >= m);
      EXPECT_FALSE(g.stream.leq(range_ids::a(n), range_ids::b(m)));
      EXPECT_FALSE(g.stream.leq(range_ids::b(n), range_ids::a(m)));
    }
  }
}

TEST(RangeGadget, OraclesAreHonest) {
  for (const char* spec : {"identity", "perm:1,0,2", "swap:4", "prefix:7,3,12,1,9,0"}) {
    auto g = make_range_gadget(InjectiveFunction::parse(spec));
    auto r = validate_oracles(g.stream, 200);
    EXPECT_TRUE(r.passed()) << spec << ": " << (r.passed() ? "" : r.failures()[0].detail);
  }
}

TEST(DecodeFalseStages, Examples) {
  auto g = make_range_gadget(InjectiveFunction::with_prefix({1, 0, 2}));
  auto split = split_linearize(g.stream, 100);
  EXPECT_EQ(decode_false_stages(split.order, 1).false_stages, std::vector<std::size_t>{0});
  EXPECT_TRUE(decode_false_stages(split.order, 0).false_stages.empty());

  auto id = make_range_gadget(InjectiveFunction::identity());
  for (std::size_t horizon : {10u, 40u, 100u}) {
    auto l = split_linearize(id.stream, 2 * horizon).order;
    EXPECT_TRUE(decode_false_stages(l, 5).false_stages.empty());
  }
}

TEST(DecodeFalseStages, HorizonTooSmall) {
  auto g = make_range_gadget(InjectiveFunction::with_prefix({1, 0, 2}));
  auto l = split_linearize(g.stream, 6).order;
  EXPECT_EQ(code_of([&] { decode_false_stages(l, 10); }), ErrorCode::HorizonTooSmall);
}

TEST(DecodeFalseStages, ExactOnceHorizonCoversLastDescent) {
  auto f = InjectiveFunction::parse("prefix:8,3,11,5,0,14,2");
  auto g = make_range_gadget(f);
  const auto truth = f.false_stages_below(10);
  auto d = decode_false_stages(split_linearize(g.stream, 60).order, 10);
  EXPECT_EQ(d.false_stages, truth);
  EXPECT_GE(d.horizon, 10u);
}

TEST(EmbedGadget, Examples) {
  auto g0 = make_embed_gadget(InjectiveFunction::with_prefix({0}));
  for (std::size_t m = 0; m < 10; ++m) EXPECT_TRUE(g0.stream.leq(embed_ids::b(0, 0), embed_ids::a(m)));

  auto g = make_embed_gadget(InjectiveFunction::with_prefix({1, 0, 2}));
  auto preds = *g.stream.oracles().predecessors(embed_ids::a(0));
  std::sort(preds.begin(), preds.end());
  std::vector<ElementId> want{embed_ids::a(0), embed_ids::b(1, 0), embed_ids::b(1, 1)};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(preds, want);

  for (std::size_t n = 0; n < 6; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      EXPECT_EQ(*g.stream.oracles().predecessors(embed_ids::b(n, j)), std::vector<ElementId>{embed_ids::b(n, j)});
    }
  }
}

TEST(EmbedGadget, EnumerationRounds) {
  auto g = make_embed_gadget(InjectiveFunction::identity());
  const auto ids = enumerate_prefix(g.stream, 10);
  const std::vector<ElementId> want{embed_ids::a(0), embed_ids::b(0, 0), embed_ids::a(1), embed_ids::b(1, 0),
                                    embed_ids::b(1, 1), embed_ids::a(2), embed_ids::b(2, 0), embed_ids::b(2, 1),
                                    embed_ids::b(2, 2), embed_ids::a(3)};
  EXPECT_EQ(ids, want);
  for (std::size_t m = 0; m < 6; ++m) EXPECT_EQ(*g.stream.at(embed_ids::stage_of_a(m)), embed_ids::a(m));
}

TEST(EmbedGadget, OraclesAreHonest) {
  for (const char* spec : {"identity", "perm:2,0,1", "swap:3", "prefix:9,4,0,7"}) {
    auto g = make_embed_gadget(InjectiveFunction::parse(spec));
    EXPECT_TRUE(validate_oracles(g.stream, 300).passed()) << spec;
  }
}

TEST(DecodeRange, Examples) {
  auto f = InjectiveFunction::with_prefix({1, 0, 2});
  auto g = make_embed_gadget(f);
  const auto values = f.values(60);
  auto h = embed_poset(g.stream, OrderKind::Omega, embed_ids::stage_of_a(6) + 1);
  EXPECT_GE(h.at(embed_ids::a(0)).rank, 2);
  EXPECT_TRUE(decode_range(h, values, 0));
  EXPECT_TRUE(decode_range(h, values, 1));
  EXPECT_TRUE(decode_range(h, values, 5));

  auto gap = InjectiveFunction::with_prefix({1, 0, 6});
  auto hg = embed_poset(make_embed_gadget(gap).stream, OrderKind::Omega, embed_ids::stage_of_a(6) + 1);
  const auto gv = gap.values(60);
  EXPECT_FALSE(decode_range(hg, gv, 5));
  EXPECT_FALSE(decode_range(hg, gv, 2));
  EXPECT_TRUE(decode_range(hg, gv, 6));
}

TEST(DecodeRange, Errors) {
  auto f = InjectiveFunction::with_prefix({1, 0, 2});
  auto h = embed_poset(make_embed_gadget(f).stream, OrderKind::Omega, 10);
  const std::vector<std::uint64_t> tiny{1};
  EXPECT_EQ(code_of([&] { decode_range(h, tiny, 0); }), ErrorCode::PrefixTooShort);
  const auto values = f.values(50);
  EXPECT_EQ(code_of([&] { decode_range(h, values, 40); }), ErrorCode::NotStabilized);
  auto z = embed_poset(zeta_stream(), OrderKind::Zeta, 3);
  EXPECT_EQ(code_of([&] { decode_range(z, values, 0); }), ErrorCode::KindMismatch);
}

TEST(EmbedGadgetBudget, LeastBudgetPlacingTheFirstAs) {
  for (const char* spec : {"identity", "swap:3", "prefix:60,61", "prefix:8,3,11,5,0,14,2"}) {
    const auto g = make_embed_gadget(InjectiveFunction::parse(spec));
    for (std::size_t k = 1; k <= 6; ++k) {
      const std::size_t budget = embed_gadget_budget(g, k);
      EXPECT_LE(budget, embed_ids::stage_of_a(k - 1) + 1) << spec;
      EXPECT_TRUE(embed_poset(g.stream, OrderKind::Omega, budget).contains(embed_ids::a(k - 1))) << spec;
      EXPECT_FALSE(embed_poset(g.stream, OrderKind::Omega, budget - 1).contains(embed_ids::a(k - 1))) << spec;
    }
  }
  // No b is absorbed below a_5 when every value is at least 60.
  const auto far = make_embed_gadget(InjectiveFunction::parse("prefix:60,61"));
  EXPECT_EQ(embed_gadget_budget(far, 5), embed_ids::stage_of_a(4) + 1);
}
