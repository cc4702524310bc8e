#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "hollowlat/module_classes.hpp"
#include "hollowlat/random.hpp"
#include "oracles.hpp"

using namespace hollowlat;

namespace {

std::vector<FiniteModule> small_fixtures() {
  return {FiniteModule::cyclic(2),          FiniteModule::cyclic(4),          FiniteModule::cyclic(6),
          FiniteModule::cyclic(8),          FiniteModule::cyclic(12),         FiniteModule::cyclic(16),
          FiniteModule(Ring(2), {2, 2}),    FiniteModule(Ring(4), {2, 2}),    FiniteModule(Ring(4), {2, 4}),
          FiniteModule(Ring(2), {2, 2, 2}), FiniteModule(Ring(4), {4, 4}),    FiniteModule(Ring(6), {2, 6}),
          FiniteModule(Ring(3), {3, 3}),    FiniteModule(Ring(12), {2, 6}),   FiniteModule(Ring(6), {6}),
          FiniteModule(Ring(12), {6}),      FiniteModule(Ring(8), {2, 4}),    FiniteModule(Ring(2), {2, 2, 2, 2})};
}

std::size_t named(const SubmoduleLattice& sub, const std::string& name) {
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (sub.name(i) == name) return i;
  throw std::logic_error("no submodule " + name);
}

std::vector<std::size_t> named(const SubmoduleLattice& sub, std::initializer_list<const char*> names) {
  std::vector<std::size_t> out;
  for (const char* n : names) out.push_back(named(sub, n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(ModuleClassesOracle, PredicatesMatchBruteForce) {
  for (const auto& M : small_fixtures()) {
    const SubmoduleLattice sub(M);
    const auto subs = oracle::subgroups(M);
    for (std::size_t i = 0; i < sub.size(); ++i) {
      const auto mask = oracle::mask_of(sub.submodule(i));
      EXPECT_EQ(is_second_submodule(M, sub.submodule(i)), oracle::is_second(M, mask)) << M.description() << " " << sub.name(i);
      EXPECT_EQ(is_second_submodule(sub, i), oracle::is_second(M, mask));
      EXPECT_EQ(is_hollow_submodule(sub, i), oracle::is_hollow(M, subs, mask)) << M.description() << " " << sub.name(i);
      EXPECT_EQ(is_small(sub, i), oracle::is_small(M, subs, mask)) << M.description() << " " << sub.name(i);
      EXPECT_EQ(sub.annihilator(i).generator, oracle::annihilator(M, mask));
    }
    EXPECT_EQ(is_distributive(sub, Execution::serial), oracle::is_distributive(M, subs)) << M.description();
    EXPECT_EQ(is_distributive(sub, Execution::parallel), oracle::is_distributive(M, subs));
    EXPECT_EQ(is_pseudo_distributive(sub, Execution::serial), oracle::is_pseudo_distributive(M, subs)) << M.description();
    EXPECT_EQ(is_pseudo_distributive(sub, Execution::parallel), oracle::is_pseudo_distributive(M, subs));
    EXPECT_EQ(is_multiplication_module(sub), oracle::is_multiplication(M, subs)) << M.description();
    EXPECT_EQ(is_semisimple(sub), oracle::is_semisimple(M, subs)) << M.description();
  }
}

TEST(ModuleClassesOracle, SecondPredicateAgreesWithLattice) {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto M = random_module(rng, 36, 96);
    const SubmoduleLattice sub(M);
    for (std::size_t i = 1; i < sub.size(); ++i)
      ASSERT_EQ(is_second_submodule(M, sub.submodule(i)),
                is_kind(sub.action(), static_cast<ElementId>(i), SpectrumKind::second))
          << M.description() << " " << sub.name(i);
  }
}

TEST(ModuleClasses, SmallExamples) {
  const SubmoduleLattice z4(FiniteModule::cyclic(4));
  EXPECT_TRUE(is_small(z4, z4.zero()));
  EXPECT_TRUE(is_small(z4, named(z4, "(2)")));
  const SubmoduleLattice z12(FiniteModule::cyclic(12));
  EXPECT_FALSE(is_small(z12, named(z12, "(3)")));
  // (3) ≅ Z_4 has (6) as its unique maximal submodule; (2) ≅ Z_6 = (4) + (6).
  EXPECT_TRUE(is_small_in(z12, named(z12, "(6)"), named(z12, "(3)")));
  EXPECT_FALSE(is_small_in(z12, named(z12, "(4)"), named(z12, "(2)")));
}

TEST(ModuleClasses, CyclicThirty) {
  const SubmoduleLattice sub(FiniteModule::cyclic(30));
  EXPECT_TRUE(is_multiplication_module(sub));
  EXPECT_TRUE(is_comultiplication(sub));
  EXPECT_TRUE(is_semisimple(sub));
  EXPECT_TRUE(is_distributive(sub));
  EXPECT_TRUE(is_second_representable(sub));
  const auto rep = minimal_second_representation(sub);
  ASSERT_TRUE(rep.has_value());
  EXPECT_EQ(*rep, named(sub, {"(6)", "(10)", "(15)"}));
  const auto att = attached_primes(sub, *rep);
  EXPECT_EQ(att, (std::vector<Ideal>{{2}, {3}, {5}}));
  EXPECT_EQ(minimal_ideals(att), att);
  EXPECT_EQ(minimal_second_representations(sub).size(), 1u);
}

TEST(ModuleClasses, CyclicTwelve) {
  const SubmoduleLattice sub(FiniteModule::cyclic(12));
  EXPECT_FALSE(is_semisimple(sub));
  EXPECT_FALSE(is_s_lifting(sub));
  EXPECT_TRUE(is_lifting(sub));
  EXPECT_TRUE(is_multiplication_module(sub));
  EXPECT_TRUE(is_comultiplication(sub));
  EXPECT_EQ(second_submodules(sub), named(sub, {"(4)", "(6)"}));
  EXPECT_FALSE(is_second_representable(sub));
  EXPECT_FALSE(minimal_second_representation(sub).has_value());
  EXPECT_TRUE(minimal_second_representations(sub).empty());
  // (3) is a maximal hollow submodule that is not second.
  const auto hollow = maximal_hollow_submodules(sub);
  EXPECT_NE(std::find(hollow.begin(), hollow.end(), named(sub, "(3)")), hollow.end());
}

TEST(ModuleClasses, KleinFourOverTwo) {
  const SubmoduleLattice sub(FiniteModule(Ring(2), {2, 2}));
  EXPECT_TRUE(is_pseudo_distributive(sub));
  EXPECT_FALSE(is_distributive(sub));
  EXPECT_FALSE(is_hollow_submodule(sub, sub.whole()));
  EXPECT_TRUE(is_semisimple(sub));
  EXPECT_FALSE(is_multiplication_module(sub));
  EXPECT_FALSE(is_comultiplication(sub));
  EXPECT_TRUE(is_second_submodule(sub, sub.whole()));
}

TEST(ModuleClasses, SimpleModule) {
  const SubmoduleLattice sub(FiniteModule::cyclic(5));
  EXPECT_TRUE(is_simple(sub, sub.whole()));
  const auto rep = minimal_second_representation(sub);
  ASSERT_TRUE(rep.has_value());
  EXPECT_EQ(*rep, std::vector<std::size_t>{sub.whole()});
  EXPECT_EQ(attached_primes(sub, *rep), (std::vector<Ideal>{{5}}));
}

TEST(ModuleClasses, SumsAndDirectness) {
  const SubmoduleLattice sub(FiniteModule::cyclic(12));
  const auto three_four_six = named(sub, {"(3)", "(4)", "(6)"});
  EXPECT_EQ(sum_of(sub, three_four_six), sub.whole());
  EXPECT_EQ(sum_of(sub, {}), sub.zero());
  const auto r = redundant_summand(sub, three_four_six);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(three_four_six[*r], named(sub, "(6)"));
  EXPECT_TRUE(is_direct_sum(sub, named(sub, {"(3)", "(4)"})));
  EXPECT_FALSE(is_direct_sum(sub, named(sub, {"(2)", "(3)"})));
}

TEST(ModuleClassesProperty, SecondRepresentationsAreMinimal) {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto M = random_module(rng, 36, 64);
    const SubmoduleLattice sub(M);
    const auto all = minimal_second_representations(sub);
    EXPECT_EQ(all.empty(), !is_second_representable(sub)) << M.description();
    auto greedy = minimal_second_representation(sub);
    EXPECT_EQ(greedy.has_value(), is_second_representable(sub));
    if (greedy) {
      std::sort(greedy->begin(), greedy->end());
      EXPECT_NE(std::find(all.begin(), all.end(), *greedy), all.end()) << M.description();
    }
    for (const auto& rep : all) {
      EXPECT_EQ(sum_of(sub, rep), sub.whole());
      EXPECT_FALSE(redundant_summand(sub, rep).has_value());
      for (auto k : rep) EXPECT_TRUE(is_second_submodule(sub, k));
    }
  }
}
