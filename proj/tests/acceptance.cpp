// Acceptance run: one line per criterion with verdict, detail and wall time.
// Exits 0 only when every criterion passes within its time budget.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "hollowlat/cli.hpp"
#include "hollowlat/error.hpp"
#include "hollowlat/module_classes.hpp"
#include "hollowlat/pshollow.hpp"
#include "hollowlat/random.hpp"
#include "hollowlat/spectra.hpp"
#include "oracles.hpp"

using namespace hollowlat;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("hollowlat-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_spec(const FiniteModule& m) {
  const auto path = work_dir() / ("module-" + std::to_string(m.ring().modulus()) + ".spec");
  std::ofstream(path) << emit_module_spec(m);
  return path.string();
}

RunResult run_command(const std::string& command, const FiniteModule& m) {
  AnalysisRequest r;
  r.command = command;
  r.input_path = write_spec(m);
  return run(r);
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

/// (n / p^m) for every prime power p^m exactly dividing n, ascending index.
std::vector<std::size_t> prime_power_components(const SubmoduleLattice& sub) {
  const auto n = sub.ring().modulus();
  std::vector<std::size_t> out;
  auto rest = n;
  for (std::uint32_t p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    std::uint32_t q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    out.push_back(named(sub, "(" + std::to_string(n / q) + ")"));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require(Outcome& o, bool condition, const std::string& what) {
  if (!condition && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

Outcome canonical_cyclic_representation() {
  Outcome o;
  for (std::uint32_t n : {12u, 30u, 60u, 72u, 180u}) {
    const auto M = FiniteModule::cyclic(n);
    const SubmoduleLattice sub(M);
    const auto expected = prime_power_components(sub);
    std::vector<std::string> witnesses{sub.names(expected)};
    for (auto c : expected) witnesses.push_back(sub.name(c) + ":H={" + sub.name(c) + "}:In=" + sub.name(c));
    const auto result = run_command("represent", M);
    bool found = false;
    for (const auto& f : result.report.findings)
      found = found || (f.claim == "represent.minimal" && f.verdict == Verdict::pass && f.witnesses == witnesses);
    require(o, result.exit_code == 0, "Z_" + std::to_string(n) + " exit " + std::to_string(result.exit_code));
    require(o, found, "Z_" + std::to_string(n) + " missing " + witnesses.front());
  }
  if (o.ok) o.detail = "n in {12,30,60,72,180} match {(n/p^m)} with H={(n/p^m)}";
  return o;
}

Outcome cyclic_twelve_facts() {
  Outcome o;
  const SubmoduleLattice sub(FiniteModule::cyclic(12));
  const auto reps = enumerate_minimal_representations(sub, 0);
  require(o, reps.size() == 1 && reps[0].summands == named(sub, {"(3)", "(4)"}), "minimal representation");
  require(o, second_submodules(sub) == named(sub, {"(4)", "(6)"}), "second submodules");
  require(o, !is_second_representable(sub), "second representable");
  require(o, !is_semisimple(sub), "semisimple");
  require(o, !is_s_lifting(sub), "s-lifting");
  if (o.ok) o.detail = "rep {(3),(4)}; second {(4),(6)}; not second representable, semisimple or s-lifting";
  return o;
}

Outcome cyclic_thirty_facts() {
  Outcome o;
  const SubmoduleLattice sub(FiniteModule::cyclic(30));
  require(o, ps_hollow_submodules(sub) == named(sub, {"(6)", "(10)", "(15)"}), "PS-hollow submodules");
  const auto rep = minimal_second_representation(sub);
  require(o, rep.has_value(), "no second representation");
  if (rep) {
    const auto att = attached_primes(sub, *rep);
    require(o, att == std::vector<Ideal>{{2}, {3}, {5}}, "att^s");
    require(o, minimal_ideals(att) == att, "att^s != Min(att^s)");
  }
  require(o, is_multiplication_module(sub), "multiplication");
  require(o, is_comultiplication(sub), "comultiplication");
  require(o, is_semisimple(sub), "semisimple");
  const auto eq = check_semisimple_equivalence(sub);
  const auto* f = eq.find("semisimple.four-way-equivalence");
  require(o, f && f->verdict == Verdict::pass, "four-way equivalence");
  if (o.ok) o.detail = "PS-hollow {(6),(10),(15)}; att^s {(2),(3),(5)} minimal; four-way equivalence pass";
  return o;
}

Outcome uniqueness_up_to_200() {
  Outcome o;
  std::size_t pairs = 0;
  std::size_t fails = 0;
  for (std::uint32_t n = 2; n <= 200; ++n) {
    const SubmoduleLattice sub(FiniteModule::cyclic(n));
    const auto reps = enumerate_minimal_representations(sub, 0);
    require(o, !reps.empty(), "Z_" + std::to_string(n) + " has no minimal representation");
    for (const auto& a : reps)
      for (const auto& b : reps) {
        ++pairs;
        try {
          fails += verify_first_uniqueness(sub, a, b).count(Verdict::fail);
          fails += verify_second_uniqueness(sub, a, b).count(Verdict::fail);
        } catch (const Error& e) {
          require(o, false, "Z_" + std::to_string(n) + ": " + e.what());
        }
      }
  }
  require(o, fails == 0, std::to_string(fails) + " failing claims");
  if (o.ok) o.detail = std::to_string(pairs) + " pairs over n<=200, 0 failures";
  return o;
}

Outcome lattice_duality_suite() {
  Outcome o;
  constexpr std::uint64_t kInstances = 300;
  std::size_t fails = 0;
  std::size_t claims = 0;
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    const auto A = random_instance(seed, 8, 4);
    const auto report = check_lattice_battery(A);
    fails += report.count(Verdict::fail);
    claims += report.count(Verdict::pass);
    // The spectra themselves must match their literal definitions.
    for (auto kind : kAllSpectrumKinds)
      require(o, spectrum(A, kind) == oracle::naive_spectrum(A, kind),
              "seed " + std::to_string(seed) + " spectrum " + std::string(to_string(kind)));
  }
  require(o, fails == 0, std::to_string(fails) + " failing claims");
  if (o.ok) o.detail = std::to_string(kInstances) + " instances, " + std::to_string(claims) + " claims pass, 0 fail";
  return o;
}

Outcome quotient_prime_correspondence() {
  Outcome o;
  std::size_t forward = 0;
  std::size_t converse = 0;
  for (std::uint32_t n = 2; n <= 60; ++n) {
    const SubmoduleLattice sub(FiniteModule::cyclic(n));
    const auto p3 = check_duality(sub.action(), DualityPart::prime_quotient_first, sub.labels());
    const auto p4 = check_duality(sub.action(), DualityPart::prime_quotient_equivalence, sub.labels());
    require(o, p3.count(Verdict::fail) == 0 && p4.count(Verdict::fail) == 0, "Z_" + std::to_string(n));
    forward += p3.count(Verdict::pass);
    converse += p4.count(Verdict::pass);
    require(o, distributes_over_joins(sub.action()), "Z_" + std::to_string(n) + " fails join distributivity");
  }
  require(o, converse == 59, "converse gated off on some Z_n");
  if (o.ok)
    o.detail = "Z_n, n<=60: forward " + std::to_string(forward) + " pass, converse " + std::to_string(converse) + " pass";
  return o;
}

Outcome finite_analogs() {
  Outcome o;
  const FiniteModule M(Ring(2), {2, 2});
  const SubmoduleLattice sub(M);
  const auto subs = oracle::subgroups(M);
  const auto whole = oracle::full(M);
  require(o, is_pseudo_distributive(sub) && oracle::is_pseudo_distributive(M, subs), "pseudo-distributive");
  require(o, !is_distributive(sub) && !oracle::is_distributive(M, subs), "distributive");
  require(o, is_ps_hollow(sub, sub.whole()) && oracle::is_ps_hollow(M, subs, whole), "PS-hollow");
  require(o, !is_hollow_submodule(sub, sub.whole()) && !oracle::is_hollow(M, subs, whole), "hollow");
  if (o.ok) o.detail = "Z2+Z2 over Z_2: pseudo-distributive, not distributive, PS-hollow, not hollow (library = oracle)";
  return o;
}

Outcome gated_battery() {
  Outcome o;
  std::size_t passes = 0;
  for (std::uint32_t n : {12u, 30u}) {
    const auto result = run_command("verify", FiniteModule::cyclic(n));
    require(o, result.exit_code == 0, "verify Z_" + std::to_string(n) + " exit " + std::to_string(result.exit_code));
    require(o, result.report.count(Verdict::fail) == 0, "verify Z_" + std::to_string(n) + " has failures");
    passes += result.report.count(Verdict::pass);
  }
  const SubmoduleLattice sub(FiniteModule::cyclic(12));
  for (const char* name : {"(3)", "(4)"}) {
    const auto r = check_non_small_inheritance(sub, named(sub, name));
    require(o, r.count(Verdict::pass) > 0 && r.count(Verdict::fail) == 0 && r.count(Verdict::hypothesis_unmet) == 0,
            std::string("non-small inheritance on ") + name);
  }
  if (o.ok) o.detail = "verify Z_12, Z_30 exit 0 with " + std::to_string(passes) + " passes; (3),(4) <= Z_12 inherit H";
  return o;
}

Outcome second_predicate_consistency() {
  Outcome o;
  std::vector<FiniteModule> fixtures;
  for (std::uint32_t n = 2; n <= 60; ++n) fixtures.push_back(FiniteModule::cyclic(n));
  for (auto [n, f] : std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>>{
           {2, {2, 2}}, {2, {2, 2, 2}}, {2, {2, 2, 2, 2}}, {3, {3, 3}}, {4, {2, 4}}, {4, {4, 4}}, {6, {2, 6}},
           {6, {6, 6}}, {8, {2, 8}}, {12, {6, 12}}, {12, {2, 6}}, {36, {6, 36}}, {30, {10, 15}}})
    fixtures.emplace_back(Ring(n), f);
  Rng rng(9);
  for (int i = 0; i < 40; ++i) fixtures.push_back(random_module(rng, 36, 128));
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  for (const auto& M : fixtures) {
    const SubmoduleLattice sub(M);
    for (std::size_t i = 1; i < sub.size(); ++i) {
      ++checked;
      if (is_second_submodule(M, sub.submodule(i)) !=
          is_kind(sub.action(), static_cast<ElementId>(i), SpectrumKind::second))
        ++disagreements;
    }
  }
  require(o, disagreements == 0, std::to_string(disagreements) + " disagreements");
  if (o.ok)
    o.detail = std::to_string(fixtures.size()) + " modules, " + std::to_string(checked) + " submodules, 0 disagreements";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double budget_s;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "cyclic canonical representation", 5, canonical_cyclic_representation},
      {2, "Z_12 facts", 1, cyclic_twelve_facts},
      {3, "Z_30 facts", 1, cyclic_thirty_facts},
      {4, "uniqueness for Z_n, n<=200", 60, uniqueness_up_to_200},
      {5, "lattice duality suite", 30, lattice_duality_suite},
      {6, "quotient/prime correspondence", 30, quotient_prime_correspondence},
      {7, "finite analogs", 1, finite_analogs},
      {8, "hypothesis-gated battery", 5, gated_battery},
      {9, "second predicate consistency", 60, second_predicate_consistency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && elapsed > c.budget_s) {
      o.ok = false;
      o.detail += " (over time budget)";
    }
    failed += o.ok ? 0 : 1;
    std::printf("criterion %d %s: %s [%.3fs / %.0fs] %s\n", c.number, c.name, o.ok ? "PASS" : "FAIL", elapsed,
                c.budget_s, o.detail.c_str());
  }
  fs::remove_all(work_dir());
  std::printf("%s: %zu of %zu criteria pass\n", failed ? "FAIL" : "PASS", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
