#include <gtest/gtest.h>

#include "taulike/canonical.hpp"
#include "taulike/gadgets.hpp"
#include "taulike/harness.hpp"
#include "taulike/stream.hpp"

using namespace taulike;

namespace {

bool has_violation(const ValidationReport& r, ViolationKind kind, OracleName oracle) {
  for (const auto& v : r.failures()) {
    if (v.kind == kind && v.oracle == oracle) return true;
  }
  return false;
}

}  // namespace

TEST(Prefix, CanonicalFamilies) {
  EXPECT_EQ(prefix(omega_stream(), 3), chain(3));
  EXPECT_EQ(prefix(antichain_stream(), 2), antichain(2));
  EXPECT_TRUE(prefix(omega_stream(), 0).empty());
  EXPECT_TRUE(prefix(zeta_stream(), 0).empty());
}

TEST(Prefix, FiniteStreamEndsWithFiniteDomainEnd) {
  auto s = finite_stream(chain(3));
  EXPECT_EQ(prefix(s, 3), chain(3));
  try {
    (void)prefix(s, 4);
    FAIL() << "expected FiniteDomainEnd";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FiniteDomainEnd);
  }
  EXPECT_EQ(available_prefix(s, 10).size(), 3u);
}

TEST(Prefix, MonotoneInLength) {
  for (const auto& s : {omega_plus_omega_star_stream(), zeta_stream(ZetaEnumeration::Skewed),
                        make_range_gadget(InjectiveFunction::with_prefix({4, 1, 3, 0})).stream}) {
    auto big = prefix(s, 30);
    for (std::size_t k : {0u, 1u, 7u, 19u}) {
      const auto ids = enumerate_prefix(s, k);
      EXPECT_EQ(prefix(s, k), big.restrict_to(ids)) << s.name();
    }
  }
}

TEST(Prefix, ZetaStreamIsTheIntegers) {
  auto s = zeta_stream(ZetaEnumeration::Alternate);
  const auto ids = enumerate_prefix(s, 5);
  std::vector<std::int64_t> values;
  for (ElementId id : ids) values.push_back(zigzag_decode(id));
  EXPECT_EQ(values, (std::vector<std::int64_t>{0, -1, 1, -2, 2}));
  EXPECT_TRUE(s.leq(zigzag_encode(-2), zigzag_encode(1)));
}

TEST(ValidateOracles, HonestFamiliesPass) {
  for (const auto& s : {omega_stream(), omega_star_stream(), antichain_stream(), omega_plus_omega_star_stream(),
                        zeta_stream(ZetaEnumeration::Alternate), zeta_stream(ZetaEnumeration::AlternatePositive),
                        zeta_stream(ZetaEnumeration::Skewed), finite_stream(fence(7))}) {
    auto r = validate_oracles(s, 100);
    EXPECT_TRUE(r.passed()) << s.name() << ": " << (r.failures().empty() ? "" : r.failures()[0].detail);
  }
}

TEST(ValidateOracles, AbsentOracleIsNotAFailure) {
  auto r = validate_oracles(zeta_stream(), 20);
  EXPECT_TRUE(r.passed());
  bool saw = false;
  for (const auto& v : r.entries) saw = saw || v.kind == ViolationKind::NotPresent;
  EXPECT_TRUE(saw);
}

TEST(ValidateOracles, OmittedPredecessorIsNamed) {
  auto base = omega_stream();
  OracleBundle o = base.oracles();
  auto honest = o.predecessors;
  o.predecessors = [honest](ElementId x) -> std::optional<std::vector<ElementId>> {
    auto v = honest(x);
    if (x == 5 && v) std::erase(*v, ElementId{3});
    return v;
  };
  auto r = validate_oracles(base.with_oracles(o), 10);
  ASSERT_FALSE(r.passed());
  const auto f = r.failures();
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].kind, ViolationKind::Incomplete);
  EXPECT_EQ(f[0].oracle, OracleName::Predecessors);
  EXPECT_EQ(f[0].subject, 5u);
  EXPECT_EQ(f[0].offending, ElementId{3});
}

TEST(ValidateOracles, ExtraSuccessorIsUnsound) {
  auto base = omega_star_stream();
  OracleBundle o = base.oracles();
  auto honest = o.successors;
  o.successors = [honest](ElementId x) -> std::optional<std::vector<ElementId>> {
    auto v = honest(x);
    if (x == 2 && v) v->push_back(7);
    return v;
  };
  auto r = validate_oracles(base.with_oracles(o), 10);
  EXPECT_TRUE(has_violation(r, ViolationKind::Unsound, OracleName::Successors));
}

TEST(ValidateOracles, FinPredWithoutPredecessorsIsInconsistent) {
  auto base = antichain_stream();
  OracleBundle o = base.oracles();
  o.predecessors = nullptr;
  o.side = [](ElementId) { return Side::FinPred; };
  auto r = validate_oracles(base.with_oracles(o), 10);
  EXPECT_TRUE(has_violation(r, ViolationKind::Inconsistent, OracleName::Side));
}

TEST(ValidateOracles, WrongSideOnOmegaPlusOmegaStar) {
  auto base = omega_plus_omega_star_stream();
  OracleBundle o = base.oracles();
  o.side = [](ElementId) { return Side::FinPred; };
  auto r = validate_oracles(base.with_oracles(o), 20);
  EXPECT_FALSE(r.passed());
}

TEST(ValidateOracles, RepeatedEnumerationIsReported) {
  auto base = omega_stream();
  StreamPoset s("repeats", [](std::size_t k) -> std::optional<ElementId> { return k == 4 ? 1 : k; },
                [](ElementId a, ElementId b) { return a <= b; }, base.oracles());
  auto r = validate_oracles(s, 8);
  EXPECT_TRUE(has_violation(r, ViolationKind::Inconsistent, OracleName::Enumeration));
}

TEST(TauLike, FiniteChainMaxInterval) {
  auto r = check_tau_like(chain(3), OrderKind::Zeta);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.max_interval, 3u);
}

TEST(TauLike, OmegaPrefixCounts) {
  auto r = check_tau_like(omega_stream(), 50, OrderKind::Omega);
  ASSERT_TRUE(r.passed());
  ASSERT_EQ(r.counts.size(), 50u);
  for (std::size_t n = 0; n < 50; ++n) {
    EXPECT_EQ(r.counts[n].id, n);
    EXPECT_EQ(r.counts[n].predecessors, n);
  }
}

TEST(TauLike, OmegaStarStreamIsNotOmegaLike) {
  auto r = check_tau_like(omega_star_stream(), 10, OrderKind::Omega);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.violations[0].kind, ViolationKind::Undefined);
}

TEST(TauLike, SeededIncompletePredecessors) {
  auto g = make_embed_gadget(InjectiveFunction::with_prefix({1, 0, 2}));
  OracleBundle o = g.stream.oracles();
  auto honest = o.predecessors;
  o.predecessors = [honest](ElementId x) -> std::optional<std::vector<ElementId>> {
    auto v = honest(x);
    if (x == embed_ids::a(0) && v) std::erase(*v, embed_ids::b(1, 1));
    return v;
  };
  auto r = check_tau_like(g.stream.with_oracles(o), 40, OrderKind::Omega);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.violations[0].kind, ViolationKind::Incomplete);
  EXPECT_EQ(r.violations[0].subject, embed_ids::a(0));
  EXPECT_EQ(r.violations[0].offending, embed_ids::b(1, 1));
}

TEST(ValidateOracles, IntervalFaultsAreNamed) {
  auto base = zeta_stream();
  OracleBundle o = base.oracles();
  auto honest = o.interval;
  const ElementId zero = zigzag_encode(0), two = zigzag_encode(2), one = zigzag_encode(1), five = zigzag_encode(5);
  o.interval = [=](ElementId x, ElementId y) -> std::optional<std::vector<ElementId>> {
    auto v = honest(x, y);
    if (x == zero && y == two && v) {
      std::erase(*v, one);
      v->push_back(five);
    }
    return v;
  };
  auto r = validate_oracles(base.with_oracles(o), 12);
  const auto f = r.failures();
  ASSERT_EQ(f.size(), 2u);
  EXPECT_TRUE(has_violation(r, ViolationKind::Incomplete, OracleName::Interval));
  EXPECT_TRUE(has_violation(r, ViolationKind::Unsound, OracleName::Interval));
  for (const auto& v : f) {
    EXPECT_EQ(v.subject, zero);
    EXPECT_EQ(v.other, two);
    EXPECT_EQ(v.offending, v.kind == ViolationKind::Incomplete ? one : five);
  }
}

TEST(ValidateOracles, RangeGadgetIntervalsMatchBruteForce) {
  for (const char* spec : {"identity", "prefix:8,3,11,5,0,14,2", "perm:3,1,0,2"}) {
    auto g = make_range_gadget(InjectiveFunction::parse(spec));
    EXPECT_TRUE(validate_oracles(g.stream, 300).passed()) << spec;
  }
}
