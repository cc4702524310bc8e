#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "hollowlat/cli.hpp"
#include "hollowlat/error.hpp"
#include "hollowlat/module.hpp"
#include "hollowlat/random.hpp"
#include "hollowlat/spectra.hpp"
#include "oracles.hpp"

using namespace hollowlat;

namespace {

std::vector<ElementId> ids_named(const SubmoduleLattice& sub, std::vector<std::string> names) {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (std::find(names.begin(), names.end(), sub.name(i)) != names.end()) out.push_back(static_cast<ElementId>(i));
  return out;
}

bool has(const std::vector<ElementId>& v, ElementId x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST(Spectra, KindNamesRoundTrip) {
  for (auto kind : kAllSpectrumKinds) EXPECT_EQ(parse_spectrum_kind(to_string(kind)), kind);
  EXPECT_FALSE(parse_spectrum_kind("bogus").has_value());
}

TEST(Spectra, DomainErrors) {
  const auto A = PosetAction::identity(FiniteLattice::chain(2), FinitePoset::antichain(1));
  EXPECT_THROW((void)is_kind(A, 1, SpectrumKind::prime), Error);
  EXPECT_THROW((void)is_kind(A, 0, SpectrumKind::second), Error);
  try {
    (void)is_kind(A, 0, SpectrumKind::hollow);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainError);
  }
}

TEST(Spectra, TwoChainTrivialAction) {
  const auto A = PosetAction::identity(FiniteLattice::chain(2), FinitePoset::antichain(1));
  EXPECT_TRUE(is_kind(A, 0, SpectrumKind::prime));
  EXPECT_TRUE(is_kind(A, 1, SpectrumKind::first));
  EXPECT_TRUE(is_kind(A, 1, SpectrumKind::second));
}

TEST(Spectra, TopIsSecondIffUnitImagesExtreme) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto A = random_instance(seed);
    const auto& L = A.lattice();
    if (L.size() < 2) continue;
    bool extreme = true;
    for (ElementId s = 0; s < A.acting_size(); ++s)
      extreme = extreme && (A.unit_image(s) == L.top() || A.unit_image(s) == L.bottom());
    ASSERT_EQ(is_kind(A, L.top(), SpectrumKind::second), extreme);
  }
}

TEST(Spectra, OneElementLatticeHasEmptySpectra) {
  const auto A = PosetAction::identity(FiniteLattice::chain(1), FinitePoset::antichain(1));
  for (auto kind : kAllSpectrumKinds) EXPECT_TRUE(spectrum(A, kind).empty());
}

TEST(Spectra, CyclicTwelveExamples) {
  const SubmoduleLattice sub(FiniteModule::cyclic(12));
  const auto& A = sub.action();
  const auto four = static_cast<ElementId>(ids_named(sub, {"(4)"}).front());
  const auto three = static_cast<ElementId>(ids_named(sub, {"(3)"}).front());
  EXPECT_TRUE(is_kind(A, four, SpectrumKind::second));
  EXPECT_FALSE(is_kind(A, three, SpectrumKind::second));
  EXPECT_EQ(spectrum(A, SpectrumKind::second), ids_named(sub, {"(4)", "(6)"}));
  const auto psh = spectrum(A, SpectrumKind::ps_hollow);
  EXPECT_TRUE(has(psh, three));
  EXPECT_TRUE(has(psh, four));
  EXPECT_FALSE(has(psh, static_cast<ElementId>(sub.whole())));
}

TEST(Spectra, Varieties) {
  const auto L = FiniteLattice::chain(4);
  EXPECT_TRUE(is_top(L, {}));
  const std::vector<ElementId> X{0, 2};
  EXPECT_TRUE(is_top(L, X));
  EXPECT_EQ(variety(L, X, 1).members, (std::vector<ElementId>{2}));
  // Over X = {0, a, b} in the diamond, V(a) ∪ V(b) = {a, b} is no variety.
  const std::vector<OrderPair> pairs{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  const auto D = FiniteLattice::build(4, pairs);
  const std::vector<ElementId> atoms{1, 2};
  EXPECT_TRUE(is_top(D, atoms));  // V(0) = {a, b}
  const std::vector<ElementId> with_bottom{0, 1, 2};
  EXPECT_FALSE(is_top(D, with_bottom));
}

TEST(Spectra, MultiplicationLatticeIsPrimeTop) {
  for (std::uint32_t n : {12u, 30u, 36u}) {
    const SubmoduleLattice sub(FiniteModule::cyclic(n));
    const auto primes = spectrum(sub.action(), SpectrumKind::prime);
    EXPECT_TRUE(is_top(sub.lattice(), primes));
  }
}

TEST(SpectraProperty, PredicatesMatchOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto A = random_instance(seed, 8, 4);
    for (auto kind : kAllSpectrumKinds) {
      ASSERT_EQ(spectrum(A, kind, Execution::serial), oracle::naive_spectrum(A, kind))
          << "seed " << seed << " kind " << to_string(kind);
      ASSERT_EQ(spectrum(A, kind, Execution::parallel), spectrum(A, kind, Execution::serial));
    }
  }
}

TEST(SpectraProperty, DualityAndImplications) {
  for (std::uint64_t seed = 1000; seed < 1250; ++seed) {
    const auto A = random_instance(seed, 10, 4);
    const auto dual = dual_action(A);
    const auto star = star_action(A);
    ASSERT_EQ(spectrum(A, SpectrumKind::coprime), spectrum(dual, SpectrumKind::second)) << seed;
    ASSERT_EQ(spectrum(dual, SpectrumKind::coprime), spectrum(star, SpectrumKind::second)) << seed;
    const auto sh = spectrum(A, SpectrumKind::strongly_hollow);
    const auto dual_prime = spectrum(dual, SpectrumKind::prime);
    ASSERT_TRUE(std::includes(dual_prime.begin(), dual_prime.end(), sh.begin(), sh.end()));
    const auto& L = A.lattice();
    for (ElementId x = 0; x < L.size(); ++x) {
      if (x != L.top() && is_kind(A, x, SpectrumKind::strongly_irreducible))
        ASSERT_TRUE(is_kind(A, x, SpectrumKind::irreducible));
      if (x != L.bottom() && is_kind(A, x, SpectrumKind::strongly_hollow)) {
        ASSERT_TRUE(is_kind(A, x, SpectrumKind::hollow));
        ASSERT_TRUE(is_kind(A, x, SpectrumKind::ps_hollow));
      }
      if (x != L.bottom() && is_multiplication(A))
        ASSERT_EQ(is_kind(A, x, SpectrumKind::ps_hollow), is_kind(A, x, SpectrumKind::strongly_hollow));
    }
  }
}

TEST(SpectraProperty, BatteryHasNoFailures) {
  std::size_t multiplication = 0;
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    const auto A = random_instance(seed, 8, 4);
    multiplication += is_multiplication(A) ? 1 : 0;
    const auto report = check_lattice_battery(A);
    ASSERT_EQ(report.count(Verdict::fail), 0u) << "seed " << seed << "\n" << to_human_text(report);
  }
  // The multiplication-gated identity must actually be exercised.
  EXPECT_GT(multiplication, 0u);
}

TEST(Spectra, MultiplicationIdentityAsPrintedFailsOnCyclicTwelve) {
  // Spec^psi sits in L ∖ {1} and SH in L ∖ {0}, so the printed equality
  // cannot hold on a multiplication lattice with more than two elements.
  const SubmoduleLattice sub(FiniteModule::cyclic(12));
  const auto& A = sub.action();
  ASSERT_TRUE(is_multiplication(A));
  const auto psi = spectrum(A, SpectrumKind::psi);
  const auto sh = spectrum(A, SpectrumKind::strongly_hollow);
  EXPECT_NE(psi, sh);
  // The reading that holds: SH = Spec^p(L⁰) = Spec^psi(L⁰) and Spec^psi = SI.
  const auto dual = dual_action(A);
  EXPECT_EQ(sh, spectrum(dual, SpectrumKind::prime));
  EXPECT_EQ(sh, spectrum(dual, SpectrumKind::psi));
  EXPECT_EQ(psi, spectrum(A, SpectrumKind::strongly_irreducible));
  const auto report = check_spectral_identities(A, sub.labels());
  ASSERT_NE(report.find("identity.multiplication-spectra"), nullptr);
  EXPECT_EQ(report.find("identity.multiplication-spectra")->verdict, Verdict::pass);
}

TEST(Spectra, DualityPartsOnCyclicTwelve) {
  const SubmoduleLattice sub(FiniteModule::cyclic(12));
  for (auto part : {DualityPart::coprime_is_dual_second, DualityPart::dual_coprime_is_star_second,
                    DualityPart::prime_quotient_first, DualityPart::prime_quotient_equivalence}) {
    const auto report = check_duality(sub.action(), part, sub.labels());
    EXPECT_EQ(report.count(Verdict::fail), 0u) << to_human_text(report);
    EXPECT_GT(report.count(Verdict::pass), 0u);
  }
}

TEST(Spectra, EquivalenceGatedWithoutJoinDistributivity) {
  const std::vector<OrderPair> pairs{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  const PosetAction broken(FiniteLattice::build(4, pairs), FinitePoset::antichain(1), {0, 0, 0, 3});
  ASSERT_FALSE(distributes_over_joins(broken));
  const auto report = check_duality(broken, DualityPart::prime_quotient_equivalence);
  ASSERT_FALSE(report.findings.empty());
  EXPECT_EQ(report.count(Verdict::hypothesis_unmet), report.findings.size());
}

TEST(Spectra, ZeroPrimeIffOneFirstOnTwoChain) {
  const auto A = PosetAction::identity(FiniteLattice::chain(2), FinitePoset::antichain(1));
  const auto report = check_spectral_identities(A);
  ASSERT_NE(report.find("identity.zero-prime-iff-one-first"), nullptr);
  EXPECT_EQ(report.find("identity.zero-prime-iff-one-first")->verdict, Verdict::pass);
}

TEST(Spectra, PsHollowReadingIsFlagged) {
  AnalysisRequest r;
  r.command = "spectra";
  r.input_path = std::string(HOLLOWLAT_FIXTURES) + "/diamond.spec";
  const auto report = run(r).report;
  EXPECT_NE(std::find(report.flags.begin(), report.flags.end(), ps_hollow_reading_flag()), report.flags.end());
}
