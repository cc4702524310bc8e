#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include "hollowlat/error.hpp"
#include "hollowlat/module.hpp"
#include "hollowlat/random.hpp"
#include "oracles.hpp"

using namespace hollowlat;

namespace {

std::vector<Element> members(const Submodule& n) { return n.elements(); }

FiniteModule klein() { return FiniteModule(Ring(2), {2, 2}); }

std::size_t divisor_count(std::uint32_t n) {
  std::size_t c = 0;
  for (std::uint32_t d = 1; d <= n; ++d) c += n % d == 0 ? 1 : 0;
  return c;
}

}  // namespace

TEST(Ring, Divisors) {
  EXPECT_EQ(Ring(12).divisors(), (std::vector<std::uint32_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_TRUE(ideal_contains(Ideal{2}, Ideal{4}));
  EXPECT_FALSE(ideal_contains(Ideal{4}, Ideal{2}));
  EXPECT_EQ(ideal_sum(Ideal{4}, Ideal{6}).generator, 2u);
  EXPECT_EQ(ideal_intersection(Ring(12), Ideal{4}, Ideal{6}).generator, 12u);
  EXPECT_EQ(ideal_name(Ring(12), Ideal{12}), "(0)");
  EXPECT_EQ(ideal_name(Ring(12), Ideal{3}), "(3)");
  const std::vector<Ideal> ideals{{1}, {2}, {4}, {3}};
  EXPECT_EQ(minimal_ideals(ideals), (std::vector<Ideal>{{3}, {4}}));
}

TEST(Module, RejectsBadFactors) {
  EXPECT_THROW(FiniteModule(Ring(12), {5}), Error);
  EXPECT_THROW(FiniteModule(Ring(12), {1}), Error);
}

TEST(Module, Arithmetic) {
  const FiniteModule M(Ring(12), {2, 6});
  EXPECT_EQ(M.order(), 12u);
  const std::vector<std::uint32_t> c{1, 5};
  const auto e = M.from_coordinates(c);
  EXPECT_EQ(M.coordinate(e, 0), 1u);
  EXPECT_EQ(M.coordinate(e, 1), 5u);
  EXPECT_EQ(M.element_order(e), 6u);
  EXPECT_EQ(M.add(e, M.negate(e)), 0u);
  EXPECT_EQ(M.scale(6, e), 0u);
  EXPECT_EQ(M.element_name(e), "(1,5)");
}

TEST(Module, Span) {
  const auto z12 = FiniteModule::cyclic(12);
  const std::vector<Element> four{4};
  EXPECT_EQ(members(span(z12, four)), (std::vector<Element>{0, 4, 8}));
  EXPECT_EQ(members(span(z12, {})), (std::vector<Element>{0}));
  const auto K = klein();
  const std::vector<Element> basis{K.from_coordinates(std::vector<std::uint32_t>{1, 0}),
                                   K.from_coordinates(std::vector<std::uint32_t>{0, 1})};
  EXPECT_EQ(span(K, basis), whole_module(K));
}

TEST(Module, EnumerateExamples) {
  EXPECT_EQ(enumerate_submodules(FiniteModule::cyclic(12)).size(), 6u);
  EXPECT_EQ(enumerate_submodules(klein()).size(), 5u);
  EXPECT_EQ(enumerate_submodules(FiniteModule::cyclic(30)).size(), 8u);
}

TEST(Module, FrozenSubmoduleCounts) {
  EXPECT_EQ(enumerate_submodules(FiniteModule(Ring(4), {2, 4})).size(), 8u);
  EXPECT_EQ(enumerate_submodules(FiniteModule(Ring(2), {2, 2, 2})).size(), 16u);
  EXPECT_EQ(enumerate_submodules(FiniteModule(Ring(4), {4, 4})).size(), 15u);
  EXPECT_EQ(enumerate_submodules(FiniteModule(Ring(2), {2, 2, 2, 2})).size(), 67u);
}

TEST(Module, BoundExceeded) {
  try {
    (void)enumerate_submodules(FiniteModule::cyclic(64), 32);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

TEST(Module, BoundFromEnvironment) {
  ::setenv("HOLLOWLAT_BOUND", "77", 1);
  EXPECT_EQ(default_module_bound(), 77u);
  ::setenv("HOLLOWLAT_BOUND", "junk", 1);
  EXPECT_EQ(default_module_bound(), kDefaultModuleBound);
  ::unsetenv("HOLLOWLAT_BOUND");
  EXPECT_EQ(default_module_bound(), kDefaultModuleBound);
}

TEST(ModuleProperty, EnumerationMatchesSubsetOracle) {
  const std::vector<FiniteModule> fixtures{
      FiniteModule::cyclic(12), FiniteModule::cyclic(16),     klein(),
      FiniteModule(Ring(4), {2, 4}), FiniteModule(Ring(2), {2, 2, 2}), FiniteModule(Ring(4), {4, 4}),
      FiniteModule(Ring(2), {2, 2, 2, 2}), FiniteModule(Ring(6), {2, 6}), FiniteModule(Ring(3), {3, 3}),
      FiniteModule(Ring(12), {2, 6})};
  for (const auto& M : fixtures) {
    const auto subs = enumerate_submodules(M);
    std::set<oracle::Mask> got;
    for (const auto& s : subs) got.insert(oracle::mask_of(s));
    const auto expected = oracle::subgroups(M);
    EXPECT_EQ(got, std::set<oracle::Mask>(expected.begin(), expected.end())) << M.description();
    EXPECT_EQ(got.size(), subs.size()) << "duplicates in " << M.description();
    for (std::size_t i = 1; i < subs.size(); ++i) EXPECT_TRUE(canonical_less(subs[i - 1], subs[i]));
  }
}

TEST(ModuleProperty, CyclicCountIsDivisorCount) {
  for (std::uint32_t n = 2; n <= 120; ++n) {
    const auto M = FiniteModule::cyclic(n);
    const auto subs = enumerate_submodules(M);
    ASSERT_EQ(subs.size(), divisor_count(n)) << n;
    for (auto d : M.ring().divisors()) {
      const std::vector<Element> gen{d % n};
      ASSERT_NE(std::find(subs.begin(), subs.end(), span(M, gen)), subs.end());
    }
  }
}

TEST(Module, IdealApply) {
  const auto M = FiniteModule::cyclic(12);
  const auto whole = whole_module(M);
  EXPECT_EQ(members(ideal_apply(M, Ideal{2}, whole)), (std::vector<Element>{0, 2, 4, 6, 8, 10}));
  const std::vector<Element> four{4};
  const auto n4 = span(M, four);
  EXPECT_TRUE(ideal_apply(M, Ideal{3}, n4).is_zero());
  EXPECT_EQ(ideal_apply(M, Ideal{1}, n4), n4);
}

TEST(Module, SumIntersectAnnihilator) {
  const auto M = FiniteModule::cyclic(12);
  const std::vector<Element> g4{4}, g6{6}, g2{2};
  const auto n4 = span(M, g4);
  const auto n6 = span(M, g6);
  EXPECT_EQ(sum(M, n4, n6), span(M, g2));
  EXPECT_TRUE(intersect(n4, n6).is_zero());
  EXPECT_EQ(annihilator(M, n4).generator, 3u);
  EXPECT_EQ(annihilator(M, whole_module(M)).generator, 12u);
  EXPECT_EQ(annihilated_by(M, Ideal{3}), n4);
}

TEST(ModuleProperty, AnnihilatorIsLargestKillingIdeal) {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto M = random_module(rng, 36, 64);
    for (const auto& n : enumerate_submodules(M)) {
      const auto ann = annihilator(M, n);
      ASSERT_TRUE(ideal_apply(M, ann, n).is_zero());
      for (auto d : M.ring().divisors()) {
        if (ideal_apply(M, Ideal{d}, n).is_zero()) {
          ASSERT_TRUE(ideal_contains(ann, Ideal{d})) << M.description();
        }
      }
    }
  }
}

TEST(Module, QuotientModule) {
  const auto M = FiniteModule::cyclic(12);
  const std::vector<Element> g4{4};
  const QuotientModule q(M, span(M, g4));
  EXPECT_EQ(q.order(), 4u);
  std::uint32_t max_order = 0;
  for (std::size_t c = 0; c < q.order(); ++c) max_order = std::max(max_order, q.element_order(c));
  EXPECT_EQ(max_order, 4u);  // cyclic of order 4
  EXPECT_EQ(q.submodules().size(), 3u);
  EXPECT_EQ(QuotientModule(M, whole_module(M)).order(), 1u);
  const QuotientModule same(M, zero_submodule(M));
  EXPECT_EQ(same.order(), 12u);
  EXPECT_EQ(same.submodules().size(), 6u);
}

TEST(Module, QuotientSmallness) {
  const auto M = FiniteModule::cyclic(12);
  const std::vector<Element> g2{2}, g4{4}, g6{6};
  // (2)/(4) is the unique maximal submodule of Z_12/(4) ≅ Z_4, hence small.
  EXPECT_TRUE(QuotientModule(M, span(M, g4)).is_small(span(M, g2)));
  // (2)/(6) in Z_12/(6) ≅ Z_6 is not small: (2)/(6) + (3)/(6) = M/(6).
  EXPECT_FALSE(QuotientModule(M, span(M, g6)).is_small(span(M, g2)));
}

TEST(Module, Names) {
  const SubmoduleLattice sub(FiniteModule::cyclic(12));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < sub.size(); ++i) names.push_back(sub.name(i));
  EXPECT_EQ(names, (std::vector<std::string>{"(0)", "(6)", "(4)", "(3)", "(2)", "(1)"}));
  const SubmoduleLattice k(klein());
  EXPECT_EQ(k.name(k.whole()), "<(0,1),(1,0)>");
}

TEST(Bridge, SmallLattices) {
  const SubmoduleLattice zp(FiniteModule::cyclic(7));
  EXPECT_EQ(zp.size(), 2u);
  EXPECT_EQ(zp.action().acting_size(), 2u);
  const SubmoduleLattice z12(FiniteModule::cyclic(12));
  // Isomorphic to the divisor lattice of 12 under reverse divisibility.
  for (std::size_t a = 0; a < z12.size(); ++a)
    for (std::size_t b = 0; b < z12.size(); ++b) {
      const auto da = 12 / z12.submodule(a).cardinality();
      const auto db = 12 / z12.submodule(b).cardinality();
      EXPECT_EQ(z12.leq(a, b), da % db == 0);
    }
  const SubmoduleLattice k(klein());
  EXPECT_EQ(k.size(), 5u);
  EXPECT_EQ(k.lattice().covers().size(), 6u);
}

TEST(BridgeProperty, ActionAxiomsAndJoinDistributivity) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto M = random_module(rng, 36, 64);
    const SubmoduleLattice sub(M);
    const auto& A = sub.action();
    ASSERT_FALSE(find_axiom_violation(A.lattice(), A.poset(), A.table()).has_value());
    ASSERT_TRUE(distributes_over_joins(A)) << M.description();
    for (std::size_t s = 0; s < sub.ideals().size(); ++s)
      for (std::size_t n = 0; n < sub.size(); ++n)
        ASSERT_EQ(sub.submodule(sub.apply(s, n)), ideal_apply(M, sub.ideals()[s], sub.submodule(n)));
    ASSERT_EQ(check_duality(A, DualityPart::coprime_is_dual_second).count(Verdict::fail), 0u);
  }
}

TEST(BridgeProperty, MeetJoinAreIntersectionAndSum) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto M = random_module(rng, 24, 48);
    const SubmoduleLattice sub(M);
    for (std::size_t a = 0; a < sub.size(); ++a)
      for (std::size_t b = 0; b < sub.size(); ++b) {
        ASSERT_EQ(sub.submodule(sub.meet(a, b)), intersect(sub.submodule(a), sub.submodule(b)));
        ASSERT_EQ(sub.submodule(sub.sum(a, b)), sum(M, sub.submodule(a), sub.submodule(b)));
      }
  }
}
