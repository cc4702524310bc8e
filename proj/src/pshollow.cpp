#include "hollowlat/pshollow.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hollowlat/error.hpp"
#include "hollowlat/kernels.hpp"
#include "hollowlat/module_classes.hpp"
#include "hollowlat/spectra.hpp"

namespace hollowlat {
namespace {

std::vector<std::size_t> distinct_ideal_images(const SubmoduleLattice& sub) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < sub.ideals().size(); ++s) out.push_back(sub.ideal_image(s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ps_hollow_with(const SubmoduleLattice& sub, std::size_t n, const std::vector<std::size_t>& images) {
  for (auto im : images) {
    if (sub.leq(n, im)) continue;
    for (std::size_t l = 0; l < sub.size(); ++l) {
      if (sub.leq(n, sub.sum(im, l)) && !sub.leq(n, l)) return false;
    }
  }
  return true;
}

bool nonzero_ps_hollow(const SubmoduleLattice& sub, std::size_t n) {
  return n != sub.zero() && is_ps_hollow(sub, n);
}

std::string flag01(const char* key, bool value) { return std::string(key) + "=" + (value ? "1" : "0"); }

std::string h_name(const SubmoduleLattice& sub, const std::vector<Ideal>& h) { return ideal_set_name(sub.ring(), h); }

std::vector<std::size_t> below(const SubmoduleLattice& sub, std::size_t n) {
  std::vector<std::size_t> out;
  const auto& set = sub.lattice().down_set(static_cast<ElementId>(n));
  for (auto x = set.find_first(); x != Bitset::npos; x = set.find_next(x)) out.push_back(x);
  return out;
}

bool hulls_comparable(const SubmoduleLattice& sub, const HollowProfile& a, const HollowProfile& b) {
  return sub.leq(a.hull, b.hull) || sub.leq(b.hull, a.hull);
}

// Folds many per-instance findings of one claim into a single finding:
// fail if any instance failed, pass if any passed, otherwise unmet.
class Tally {
 public:
  explicit Tally(std::string claim) : claim_(std::move(claim)) {}

  void record(Verdict verdict, const std::vector<std::string>& witnesses) {
    switch (verdict) {
      case Verdict::pass: ++pass_; break;
      case Verdict::fail:
        ++fail_;
        failures_.insert(failures_.end(), witnesses.begin(), witnesses.end());
        break;
      case Verdict::hypothesis_unmet:
        ++unmet_;
        if (first_unmet_.empty()) first_unmet_ = witnesses;
        break;
    }
  }
  void record_claims(const Report& report, std::string_view claim) {
    for (const auto& f : report.findings) {
      if (f.claim == claim) record(f.verdict, f.witnesses);
    }
  }
  void unmet(std::string why) { record(Verdict::hypothesis_unmet, {std::move(why)}); }

  void emit(Report& report) const {
    if (fail_ > 0) {
      std::vector<std::string> w{"checked=" + std::to_string(pass_ + fail_)};
      w.insert(w.end(), failures_.begin(), failures_.end());
      report.add(claim_, Verdict::fail, std::move(w));
    } else if (pass_ > 0) {
      report.add(claim_, Verdict::pass, {"checked=" + std::to_string(pass_)});
    } else {
      report.add(claim_, Verdict::hypothesis_unmet, first_unmet_.empty() ? std::vector<std::string>{"no-instance"} : first_unmet_);
    }
  }

 private:
  std::string claim_;
  std::size_t pass_ = 0;
  std::size_t fail_ = 0;
  std::size_t unmet_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> first_unmet_;
};

std::string summand_names(const SubmoduleLattice& sub, const std::vector<std::size_t>& summands) {
  return sub.names(summands);
}

std::string non_small_reading_flag() {
  return "non-small inheritance read as: K non-small in N, conclusion A_K = A_N";
}

std::string hull_family_order_flag() { return "H-families ordered by set inclusion"; }

std::string zero_overlap_flag() { return "zero overlaps count as satisfying the PS-hollow overlap hypothesis"; }

std::string strongly_irreducible_flag() {
  return "strong irreducibility of summand submodules evaluated in the lattice of M";
}

std::string nonzero_submodules_flag() { return "submodules of summands read as nonzero submodules"; }

}  // namespace

bool is_ps_hollow(const SubmoduleLattice& sub, std::size_t n) {
  if (n == sub.zero()) throw Error(ErrorKind::ZeroSubmodule, "PS-hollow is defined for nonzero submodules");
  return ps_hollow_with(sub, n, distinct_ideal_images(sub));
}

HollowProfile profile(const SubmoduleLattice& sub, std::size_t n) {
  HollowProfile p;
  p.submodule = n;
  for (std::size_t s = 0; s < sub.ideals().size(); ++s) {
    if (sub.leq(n, sub.ideal_image(s))) p.covering.push_back(sub.ideals()[s]);
  }
  p.minimal = minimal_ideals(p.covering);
  p.hull = sub.whole();
  for (const auto& ideal : p.minimal) p.hull = sub.meet(p.hull, sub.ideal_image(sub.ideal_position(ideal)));
  p.ps_hollow = nonzero_ps_hollow(sub, n);
  return p;
}

std::vector<std::size_t> ps_hollow_submodules(const SubmoduleLattice& sub, Execution exec) {
  const auto images = distinct_ideal_images(sub);
  const auto flags = kernels::evaluate_all(
      sub.size(), [&](std::size_t n) { return n != sub.zero() && ps_hollow_with(sub, n, images); }, exec);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < flags.size(); ++n) {
    if (flags[n]) out.push_back(n);
  }
  return out;
}

bool is_hollow_ideal(const Ring& ring, Ideal ideal) {
  if (ideal.generator == ring.modulus()) return false;
  for (auto a : ring.divisors()) {
    for (auto b : ring.divisors()) {
      if (std::gcd(a, b) == ideal.generator && a != ideal.generator && b != ideal.generator) return false;
    }
  }
  return true;
}

Representation make_representation(const SubmoduleLattice& sub, std::vector<std::size_t> summands) {
  std::sort(summands.begin(), summands.end());
  summands.erase(std::unique(summands.begin(), summands.end()), summands.end());
  if (summands.empty()) throw Error(ErrorKind::HypothesisUnmet, "representation has no summands");
  Representation rep;
  for (auto n : summands) {
    if (n >= sub.size()) throw Error(ErrorKind::ValidationError, "summand index out of range");
    auto p = profile(sub, n);
    if (!p.ps_hollow) throw Error(ErrorKind::HypothesisUnmet, "summand " + sub.name(n) + " is not PS-hollow");
    rep.profiles.push_back(std::move(p));
  }
  if (sum_of(sub, summands) != sub.whole()) {
    throw Error(ErrorKind::HypothesisUnmet, "summands " + sub.names(summands) + " do not sum to M");
  }
  rep.summands = std::move(summands);
  return rep;
}

MinimalityCheck check_minimal(const SubmoduleLattice& sub, const Representation& rep) {
  MinimalityCheck out;
  const auto k = rep.summands.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (hulls_comparable(sub, rep.profiles[i], rep.profiles[j])) {
        out.minimal = false;
        out.witnesses.push_back("hulls-comparable:" + sub.name(rep.summands[i]) + "," + sub.name(rep.summands[j]));
      }
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t rest = sub.zero();
    for (std::size_t i = 0; i < k; ++i) {
      if (i != j) rest = sub.sum(rest, rep.summands[i]);
    }
    if (sub.leq(rep.summands[j], rest)) {
      out.minimal = false;
      out.witnesses.push_back("redundant:" + sub.name(rep.summands[j]));
    }
  }
  return out;
}

Representation minimize(const SubmoduleLattice& sub, const Representation& rep) {
  std::vector<std::size_t> current = rep.summands;
  for (auto n : current) {
    if (!nonzero_ps_hollow(sub, n)) throw Error(ErrorKind::HypothesisUnmet, sub.name(n) + " is not PS-hollow");
  }
  if (sum_of(sub, current) != sub.whole()) throw Error(ErrorKind::HypothesisUnmet, "summands do not sum to M");

  auto normalize = [](std::vector<std::size_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  auto remove_redundant = [&] {
    while (auto j = redundant_summand(sub, current)) current.erase(current.begin() + static_cast<std::ptrdiff_t>(*j));
  };
  auto merge_equal_h = [&] {
    std::map<std::vector<Ideal>, std::vector<std::size_t>> groups;
    for (auto n : current) groups[profile(sub, n).minimal].push_back(n);
    std::vector<std::size_t> next;
    for (const auto& [h, members] : groups) {
      if (members.size() == 1) {
        next.push_back(members.front());
        continue;
      }
      const auto merged = sum_of(sub, members);
      const auto p = profile(sub, merged);
      if (!p.ps_hollow || p.minimal != h) {
        throw Error(ErrorKind::StepFailed, "step 2: " + sub.names(members) + " sum to " + sub.name(merged) +
                                               ", which is not " + h_name(sub, h) + "-PS-hollow");
      }
      next.push_back(merged);
    }
    normalize(next);
    current = std::move(next);
  };

  normalize(current);
  while (true) {
    remove_redundant();
    merge_equal_h();
    remove_redundant();
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    std::vector<HollowProfile> profiles;
    for (auto n : current) profiles.push_back(profile(sub, n));
    for (std::size_t i = 0; i < current.size() && !pair; ++i) {
      for (std::size_t j = i + 1; j < current.size() && !pair; ++j) {
        if (hulls_comparable(sub, profiles[i], profiles[j])) pair = {i, j};
      }
    }
    if (!pair) break;
    const auto [i, j] = *pair;
    const auto larger = sub.leq(profiles[i].hull, profiles[j].hull) ? profiles[j].hull : profiles[i].hull;
    if (!nonzero_ps_hollow(sub, larger)) {
      throw Error(ErrorKind::StepFailed, "step 3: hull " + sub.name(larger) + " of " + sub.name(current[i]) + "," +
                                             sub.name(current[j]) + " is not PS-hollow");
    }
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(j));
    current[i] = larger;
    normalize(current);
  }
  auto out = make_representation(sub, current);
  const auto check = check_minimal(sub, out);
  if (!check.minimal) {
    std::string why = "step 0: fixpoint is not minimal";
    for (const auto& w : check.witnesses) why += " " + w;
    throw Error(ErrorKind::StepFailed, why);
  }
  return out;
}

namespace {

struct SearchState {
  const SubmoduleLattice& sub;
  const std::vector<std::size_t>& pool;
  const std::vector<HollowProfile>& profiles;
  std::size_t cap;
  std::vector<std::size_t> chosen;
  std::vector<Representation> out;
};

void search_minimal(SearchState& st, std::size_t start, std::size_t current) {
  for (std::size_t i = start; i < st.pool.size(); ++i) {
    const auto n = st.pool[i];
    if (st.sub.leq(n, current)) continue;
    const bool clash = std::any_of(st.chosen.begin(), st.chosen.end(), [&](std::size_t c) {
      return hulls_comparable(st.sub, st.profiles[c], st.profiles[i]);
    });
    if (clash) continue;
    st.chosen.push_back(i);
    const auto next = st.sub.sum(current, n);
    if (next == st.sub.whole()) {
      std::vector<std::size_t> summands;
      for (auto c : st.chosen) summands.push_back(st.pool[c]);
      if (!redundant_summand(st.sub, summands)) {
        Representation rep;
        rep.summands = std::move(summands);
        for (auto c : st.chosen) rep.profiles.push_back(st.profiles[c]);
        st.out.push_back(std::move(rep));
      }
    } else if (st.chosen.size() < st.cap) {
      search_minimal(st, i + 1, next);
    }
    st.chosen.pop_back();
  }
}

}  // namespace

std::vector<Representation> enumerate_minimal_representations(const SubmoduleLattice& sub, std::size_t max_terms) {
  const auto pool = ps_hollow_submodules(sub);
  std::vector<HollowProfile> profiles;
  profiles.reserve(pool.size());
  for (auto n : pool) profiles.push_back(profile(sub, n));
  const std::size_t cap = max_terms == 0 ? pool.size() : std::min(max_terms, pool.size());
  SearchState st{sub, pool, profiles, cap, {}, {}};
  search_minimal(st, 0, sub.zero());
  return std::move(st.out);
}

std::vector<Ideal> main_associated_hollow_ideals(const Representation& rep) {
  std::vector<Ideal> out;
  for (const auto& p : rep.profiles) out.insert(out.end(), p.minimal.begin(), p.minimal.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Report check_minimal_ideals_hollow(const SubmoduleLattice& sub) {
  Report report;
  const auto ps = ps_hollow_submodules(sub);
  if (ps.empty()) {
    report.add("ps-hollow.minimal-ideals-hollow", Verdict::hypothesis_unmet, {"no-ps-hollow-submodule"});
    report.add("ps-hollow.contained-in-hull", Verdict::hypothesis_unmet, {"no-ps-hollow-submodule"});
    return report;
  }
  std::vector<std::string> not_hollow;
  std::vector<std::string> outside;
  for (auto n : ps) {
    const auto p = profile(sub, n);
    for (const auto& ideal : p.minimal) {
      if (!is_hollow_ideal(sub.ring(), ideal)) not_hollow.push_back(sub.name(n) + ":" + ideal_name(sub.ring(), ideal));
    }
    if (!sub.leq(n, p.hull)) outside.push_back(sub.name(n));
  }
  const std::string checked = "checked=" + std::to_string(ps.size());
  not_hollow.insert(not_hollow.begin(), checked);
  outside.insert(outside.begin(), checked);
  report.add("ps-hollow.minimal-ideals-hollow", not_hollow.size() == 1 ? Verdict::pass : Verdict::fail, not_hollow);
  report.add("ps-hollow.contained-in-hull", outside.size() == 1 ? Verdict::pass : Verdict::fail, outside);
  return report;
}

Report check_sum_of_h_ps_hollow(const SubmoduleLattice& sub, std::size_t n, std::size_t k) {
  if (!nonzero_ps_hollow(sub, n) || !nonzero_ps_hollow(sub, k)) {
    throw Error(ErrorKind::HypothesisUnmet, "both submodules must be PS-hollow");
  }
  if (sub.leq(n, k) || sub.leq(k, n)) {
    throw Error(ErrorKind::HypothesisUnmet, sub.name(n) + " and " + sub.name(k) + " are comparable");
  }
  const auto pn = profile(sub, n);
  const auto pk = profile(sub, k);
  const auto ps = profile(sub, sub.sum(n, k));
  std::vector<std::vector<Ideal>> candidates{pn.minimal, pk.minimal, ps.minimal};
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  Report report;
  bool ok = true;
  std::vector<std::string> witnesses{"N=" + sub.name(n), "K=" + sub.name(k)};
  for (const auto& h : candidates) {
    const bool lhs = ps.ps_hollow && ps.minimal == h;
    const bool rhs = pn.minimal == h && pk.minimal == h;
    if (lhs != rhs) ok = false;
    witnesses.push_back("H=" + h_name(sub, h) + ":" + flag01("sum", lhs) + ":" + flag01("both", rhs));
  }
  report.add("ps-hollow.sum-shares-h", ok ? Verdict::pass : Verdict::fail, std::move(witnesses));
  return report;
}

Report verify_first_uniqueness(const SubmoduleLattice& sub, const Representation& r1, const Representation& r2) {
  if (!is_minimal(sub, r1) || !is_minimal(sub, r2)) {
    throw Error(ErrorKind::HypothesisUnmet, "both representations must be minimal");
  }
  Report report;
  const std::string pair = summand_names(sub, r1.summands) + "|" + summand_names(sub, r2.summands);
  const bool same_length = r1.summands.size() == r2.summands.size();
  report.add("uniqueness.same-length", same_length ? Verdict::pass : Verdict::fail,
             {pair, "n=" + std::to_string(r1.summands.size()), "m=" + std::to_string(r2.summands.size())});

  auto families = [](const Representation& r) {
    std::vector<std::vector<Ideal>> out;
    for (const auto& p : r.profiles) out.push_back(p.minimal);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  const bool same_families = families(r1) == families(r2);
  report.add("uniqueness.same-h-families", same_families ? Verdict::pass : Verdict::fail, {pair});

  std::vector<std::string> hull_mismatch{pair};
  for (const auto& a : r1.profiles) {
    for (const auto& b : r2.profiles) {
      if (a.minimal == b.minimal && a.hull != b.hull) {
        hull_mismatch.push_back(h_name(sub, a.minimal) + ":" + sub.name(a.hull) + "!=" + sub.name(b.hull));
      }
    }
  }
  report.add("uniqueness.hulls-match-by-h", hull_mismatch.size() == 1 ? Verdict::pass : Verdict::fail,
             hull_mismatch);
  return report;
}

Report verify_second_uniqueness(const SubmoduleLattice& sub, const Representation& r1, const Representation& r2) {
  if (!is_minimal(sub, r1) || !is_minimal(sub, r2)) {
    throw Error(ErrorKind::HypothesisUnmet, "both representations must be minimal");
  }
  if (r1.summands.size() != r2.summands.size()) {
    throw Error(ErrorKind::HypothesisUnmet, "representations differ in length");
  }
  const std::size_t k = r1.summands.size();
  std::vector<std::size_t> align(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto it = std::find_if(r2.profiles.begin(), r2.profiles.end(),
                           [&](const HollowProfile& p) { return p.minimal == r1.profiles[i].minimal; });
    if (it == r2.profiles.end()) {
      throw Error(ErrorKind::HypothesisUnmet, "no summand matches H = " + h_name(sub, r1.profiles[i].minimal));
    }
    align[i] = static_cast<std::size_t>(it - r2.profiles.begin());
  }

  Report report;
  report.flag(hull_family_order_flag());
  const std::string pair = summand_names(sub, r1.summands) + "|" + summand_names(sub, r2.summands);
  std::vector<std::string> bad{pair};
  for (std::size_t m = 0; m < k; ++m) {
    const auto& hm = r1.profiles[m].minimal;
    const bool minimal = std::none_of(r1.profiles.begin(), r1.profiles.end(), [&](const HollowProfile& p) {
      return p.minimal != hm && std::includes(hm.begin(), hm.end(), p.minimal.begin(), p.minimal.end());
    });
    if (!minimal) continue;
    const auto n = r1.summands[m];
    const auto kk = r2.summands[align[m]];
    if (n != kk && nonzero_ps_hollow(sub, r1.profiles[m].hull)) {
      bad.push_back(h_name(sub, hm) + ":" + sub.name(n) + "!=" + sub.name(kk));
    }
  }
  report.add("uniqueness.h-minimal-summands-agree", bad.size() == 1 ? Verdict::pass : Verdict::fail, bad);

  std::vector<std::string> hull_not_ps;
  for (const auto* r : {&r1, &r2}) {
    for (const auto& p : r->profiles) {
      if (!nonzero_ps_hollow(sub, p.hull)) hull_not_ps.push_back("hull-not-ps-hollow:" + sub.name(p.hull));
    }
  }
  if (!hull_not_ps.empty()) {
    report.add("uniqueness.all-summands-agree", Verdict::hypothesis_unmet, {hull_not_ps.front()});
  } else {
    std::vector<std::string> differ{pair};
    for (std::size_t i = 0; i < k; ++i) {
      if (r1.summands[i] != r2.summands[align[i]]) {
        differ.push_back(sub.name(r1.summands[i]) + "!=" + sub.name(r2.summands[align[i]]));
      }
    }
    report.add("uniqueness.all-summands-agree", differ.size() == 1 ? Verdict::pass : Verdict::fail, differ);
  }
  return report;
}

Report check_non_small_inheritance(const SubmoduleLattice& sub, std::size_t n) {
  Report report;
  report.flag(non_small_reading_flag());
  const std::string claim = "non-small.inherits-h";
  if (n == sub.zero() || !is_ps_hollow(sub, n)) {
    report.add(claim, Verdict::hypothesis_unmet, {"not-ps-hollow:" + sub.name(n)});
    return report;
  }
  const auto images = distinct_ideal_images(sub);
  for (std::size_t k = 0; k < sub.size(); ++k) {
    if (!is_small(sub, k) && !std::binary_search(images.begin(), images.end(), k)) {
      report.add(claim, Verdict::hypothesis_unmet, {"non-small-not-ideal-image:" + sub.name(k)});
      return report;
    }
  }
  const auto pn = profile(sub, n);
  std::vector<std::string> witnesses{"N=" + sub.name(n)};
  bool ok = true;
  for (auto k : below(sub, n)) {
    if (k == sub.zero() || is_small_in(sub, k, n)) continue;
    const auto pk = profile(sub, k);
    if (!pk.ps_hollow || pk.minimal != pn.minimal || pk.covering != pn.covering) {
      ok = false;
      witnesses.push_back("K=" + sub.name(k) + ":" + flag01("ps-hollow", pk.ps_hollow) + ":H=" +
                          h_name(sub, pk.minimal));
    } else {
      witnesses.push_back("K=" + sub.name(k));
    }
  }
  report.add(claim, ok ? Verdict::pass : Verdict::fail, std::move(witnesses));
  return report;
}

namespace {

struct FourConditions {
  bool multiplication;
  bool ps_hollow_simple;
  bool second_simple;
  bool comultiplication;
  bool agree() const {
    return multiplication == ps_hollow_simple && ps_hollow_simple == second_simple &&
           second_simple == comultiplication;
  }
  std::vector<std::string> witnesses() const {
    return {flag01("multiplication", multiplication), flag01("ps-hollow-simple", ps_hollow_simple),
            flag01("second-simple", second_simple), flag01("comultiplication", comultiplication)};
  }
};

FourConditions four_conditions(const SubmoduleLattice& sub) {
  const auto ps = ps_hollow_submodules(sub);
  const auto seconds = second_submodules(sub);
  auto all_simple = [&](const std::vector<std::size_t>& v) {
    return std::all_of(v.begin(), v.end(), [&](std::size_t n) { return is_simple(sub, n); });
  };
  return {is_multiplication_module(sub), all_simple(ps), all_simple(seconds), is_comultiplication(sub)};
}

}  // namespace

Report check_semisimple_equivalence(const SubmoduleLattice& sub) {
  Report report;
  const std::string claim = "semisimple.four-way-equivalence";
  if (!is_semisimple(sub)) {
    report.add(claim, Verdict::hypothesis_unmet, {"not-semisimple"});
    return report;
  }
  const auto& ring = sub.ring();
  const auto b = maximal_second_submodules(sub);
  const auto ann_m = sub.annihilator(sub.whole());
  for (auto n : b) {
    Ideal meet{1};
    for (auto k : b) {
      if (k != n) meet = ideal_intersection(ring, meet, sub.annihilator(k));
    }
    if (meet == ann_m) {
      report.add(claim, Verdict::hypothesis_unmet, {"annihilator-separation-fails:" + sub.name(n)});
      return report;
    }
  }
  const auto c = four_conditions(sub);
  report.add(claim, c.agree() ? Verdict::pass : Verdict::fail, c.witnesses());
  return report;
}

Report check_second_representable_equivalence(const SubmoduleLattice& sub) {
  Report report;
  const std::string claim = "semisimple.second-representable-equivalence";
  if (!is_semisimple(sub)) {
    report.add(claim, Verdict::hypothesis_unmet, {"not-semisimple"});
    return report;
  }
  const auto rep = minimal_second_representation(sub);
  if (!rep) {
    report.add(claim, Verdict::hypothesis_unmet, {"not-second-representable"});
    return report;
  }
  const auto att = attached_primes(sub, *rep);
  const std::string att_text = "att=" + ideal_set_name(sub.ring(), att);
  if (minimal_ideals(att) != att) {
    report.add(claim, Verdict::hypothesis_unmet, {"attached-primes-comparable", att_text});
    return report;
  }
  const auto c = four_conditions(sub);
  auto w = c.witnesses();
  w.insert(w.begin(), att_text);
  report.add(claim, c.agree() ? Verdict::pass : Verdict::fail, std::move(w));
  return report;
}

Report check_direct_sum_from_intersections(const SubmoduleLattice& sub, const std::vector<std::size_t>& seconds) {
  Report report;
  report.flag(zero_overlap_flag());
  const std::string claim = "direct-sum.second-overlaps";
  const bool valid = !seconds.empty() && sum_of(sub, seconds) == sub.whole() && !redundant_summand(sub, seconds) &&
                     std::all_of(seconds.begin(), seconds.end(),
                                 [&](std::size_t n) { return is_second_submodule(sub, n); });
  if (!valid) {
    report.add(claim, Verdict::hypothesis_unmet, {"not-a-minimal-second-representation"});
    return report;
  }
  const auto att = attached_primes(sub, seconds);
  if (minimal_ideals(att) != att) {
    report.add(claim, Verdict::hypothesis_unmet, {"attached-primes-comparable"});
    return report;
  }
  for (std::size_t i = 0; i < seconds.size(); ++i) {
    std::size_t rest = sub.zero();
    for (std::size_t j = 0; j < seconds.size(); ++j) {
      if (j != i) rest = sub.sum(rest, seconds[j]);
    }
    const auto overlap = sub.meet(seconds[i], rest);
    if (overlap != sub.zero() && !is_ps_hollow(sub, overlap)) {
      report.add(claim, Verdict::hypothesis_unmet, {"overlap-not-ps-hollow:" + sub.name(overlap)});
      return report;
    }
  }
  bool pairwise_zero = true;
  for (std::size_t i = 0; i < seconds.size(); ++i) {
    for (std::size_t j = i + 1; j < seconds.size(); ++j) {
      if (sub.meet(seconds[i], seconds[j]) != sub.zero()) pairwise_zero = false;
    }
  }
  const bool direct = is_direct_sum(sub, seconds);
  report.add(claim, direct == pairwise_zero ? Verdict::pass : Verdict::fail,
             {"rep=" + sub.names(seconds), flag01("direct", direct), flag01("pairwise-zero", pairwise_zero)});
  return report;
}

Report check_direct_sum_distributive(const SubmoduleLattice& sub, const Representation& rep) {
  Report report;
  report.flag(strongly_irreducible_flag());
  const std::string claim = "direct-sum.distributive";
  if (!is_distributive(sub)) {
    report.add(claim, Verdict::hypothesis_unmet, {"not-distributive"});
    return report;
  }
  if (!is_minimal(sub, rep)) {
    report.add(claim, Verdict::hypothesis_unmet, {"representation-not-minimal"});
    return report;
  }
  const auto& action = sub.action();
  for (std::size_t i = 0; i < rep.summands.size(); ++i) {
    for (auto x : below(sub, rep.summands[i])) {
      if (x == sub.zero()) continue;
      const auto id = static_cast<ElementId>(x);
      const bool si = x != sub.whole() && is_kind(action, id, SpectrumKind::strongly_irreducible);
      if (si) continue;
      const auto p = profile(sub, x);
      if (p.ps_hollow && p.minimal == rep.profiles[i].minimal) continue;
      report.add(claim, Verdict::hypothesis_unmet,
                 {"summand=" + sub.name(rep.summands[i]), "submodule-fails:" + sub.name(x)});
      return report;
    }
  }
  const bool direct = is_direct_sum(sub, rep.summands);
  report.add(claim, direct ? Verdict::pass : Verdict::fail, {"rep=" + sub.names(rep.summands)});
  return report;
}

Report check_direct_sum_from_hulls(const SubmoduleLattice& sub, const Representation& rep) {
  Report report;
  report.flag(nonzero_submodules_flag());
  const std::string claim = "direct-sum.hull-overlaps";
  if (!is_minimal(sub, rep)) {
    report.add(claim, Verdict::hypothesis_unmet, {"representation-not-minimal"});
    return report;
  }
  for (auto k : rep.summands) {
    for (auto x : below(sub, k)) {
      if (x != sub.zero() && !is_ps_hollow(sub, x)) {
        report.add(claim, Verdict::hypothesis_unmet, {"submodule-not-ps-hollow:" + sub.name(x)});
        return report;
      }
    }
  }
  for (std::size_t i = 0; i < rep.profiles.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.profiles.size(); ++j) {
      if (sub.meet(rep.profiles[i].hull, rep.profiles[j].hull) != sub.zero()) {
        report.add(claim, Verdict::hypothesis_unmet,
                   {"hulls-meet:" + sub.name(rep.profiles[i].hull) + "," + sub.name(rep.profiles[j].hull)});
        return report;
      }
    }
  }
  const bool direct = is_direct_sum(sub, rep.summands);
  report.add(claim, direct ? Verdict::pass : Verdict::fail, {"rep=" + sub.names(rep.summands)});
  return report;
}

Report check_direct_sum_from_hull_submodules(const SubmoduleLattice& sub, const Representation& rep) {
  Report report;
  const std::string claim = "direct-sum.hull-submodules";
  if (!is_minimal(sub, rep)) {
    report.add(claim, Verdict::hypothesis_unmet, {"representation-not-minimal"});
    return report;
  }
  for (const auto& p : rep.profiles) {
    for (auto x : below(sub, p.hull)) {
      if (x == sub.zero()) continue;
      const auto px = profile(sub, x);
      if (!px.ps_hollow || px.minimal != p.minimal) {
        report.add(claim, Verdict::hypothesis_unmet,
                   {"hull=" + sub.name(p.hull), "submodule-fails:" + sub.name(x)});
        return report;
      }
    }
  }
  bool hulls_disjoint = true;
  for (std::size_t i = 0; i < rep.profiles.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.profiles.size(); ++j) {
      if (sub.meet(rep.profiles[i].hull, rep.profiles[j].hull) != sub.zero()) hulls_disjoint = false;
    }
  }
  const bool direct = is_direct_sum(sub, rep.summands);
  report.add(claim, hulls_disjoint && direct ? Verdict::pass : Verdict::fail,
             {"rep=" + sub.names(rep.summands), flag01("hulls-disjoint", hulls_disjoint), flag01("direct", direct)});
  return report;
}

Report check_hull_properties(const SubmoduleLattice& sub) {
  Report report;
  const auto ps = ps_hollow_submodules(sub);
  std::vector<HollowProfile> profiles;
  for (auto n : ps) profiles.push_back(profile(sub, n));

  {
    Tally keeps("ps-hollow.hull-keeps-h");
    for (const auto& p : profiles) {
      const auto hp = profile(sub, p.hull);
      if (!hp.ps_hollow) {
        keeps.unmet("hull-not-ps-hollow:" + sub.name(p.hull));
        continue;
      }
      keeps.record(hp.minimal == p.minimal ? Verdict::pass : Verdict::fail,
                   {sub.name(p.submodule) + ":H=" + h_name(sub, p.minimal) + ":hull-H=" + h_name(sub, hp.minimal)});
    }
    keeps.emit(report);
  }
  {
    Tally covers("ps-hollow.hull-under-covers");
    for (const auto& p : profiles) {
      const auto& above = sub.lattice().up_set(static_cast<ElementId>(p.submodule));
      bool hypothesis = true;
      for (auto l = above.find_first(); l != Bitset::npos && hypothesis; l = above.find_next(l)) {
        hypothesis = sub.leq(p.hull, l);
      }
      if (!hypothesis) {
        covers.unmet("hull-not-below-every-cover:" + sub.name(p.submodule));
        continue;
      }
      const auto hp = profile(sub, p.hull);
      covers.record(hp.ps_hollow && hp.minimal == p.minimal ? Verdict::pass : Verdict::fail,
                    {sub.name(p.submodule)});
    }
    covers.emit(report);
  }
  {
    const std::string claim = "representation.minimize-reaches-minimal";
    const auto bad = std::find_if(profiles.begin(), profiles.end(),
                                  [&](const HollowProfile& p) { return !nonzero_ps_hollow(sub, p.hull); });
    if (ps.empty() || sum_of(sub, ps) != sub.whole()) {
      report.add(claim, Verdict::hypothesis_unmet, {"not-ps-hollow-representable"});
    } else if (bad != profiles.end()) {
      report.add(claim, Verdict::hypothesis_unmet, {"hull-not-ps-hollow:" + sub.name(bad->hull)});
    } else {
      try {
        const auto out = minimize(sub, make_representation(sub, ps));
        report.add(claim, Verdict::pass, {"rep=" + sub.names(out.summands)});
      } catch (const Error&) {
        report.add(claim, Verdict::fail, {"step-failed"});
      }
    }
  }

  const auto& action = sub.action();
  const auto sh = spectrum(action, SpectrumKind::strongly_hollow);
  {
    std::vector<std::string> bad{"checked=" + std::to_string(sh.size())};
    for (auto x : sh) {
      if (!std::binary_search(ps.begin(), ps.end(), std::size_t{x})) bad.push_back(sub.name(x));
    }
    report.add("ps-hollow.strongly-hollow-implies", bad.size() == 1 ? Verdict::pass : Verdict::fail, bad);
  }
  const bool multiplication = is_multiplication_module(sub);
  if (!multiplication) {
    report.add("ps-hollow.multiplication-converse", Verdict::hypothesis_unmet, {"not-multiplication"});
    report.add("ps-hollow.multiplication-hull-identity", Verdict::hypothesis_unmet, {"not-multiplication"});
  } else {
    std::vector<std::string> not_sh{"checked=" + std::to_string(ps.size())};
    std::vector<std::string> hull_differs{"checked=" + std::to_string(ps.size())};
    for (const auto& p : profiles) {
      if (!std::binary_search(sh.begin(), sh.end(), static_cast<ElementId>(p.submodule))) {
        not_sh.push_back(sub.name(p.submodule));
      }
      if (p.hull != p.submodule) hull_differs.push_back(sub.name(p.submodule) + ":" + sub.name(p.hull));
    }
    report.add("ps-hollow.multiplication-converse", not_sh.size() == 1 ? Verdict::pass : Verdict::fail, not_sh);
    report.add("ps-hollow.multiplication-hull-identity", hull_differs.size() == 1 ? Verdict::pass : Verdict::fail,
               hull_differs);
  }
  if (!is_second_submodule(sub, sub.whole())) {
    report.add("ps-hollow.second-module-all", Verdict::hypothesis_unmet, {"module-not-second"});
  } else {
    const bool all = ps.size() + 1 == sub.size();
    report.add("ps-hollow.second-module-all", all ? Verdict::pass : Verdict::fail,
               {"ps-hollow=" + std::to_string(ps.size())});
  }
  if (!is_pseudo_distributive(sub)) {
    report.add("ps-hollow.pseudo-distributive-hollow", Verdict::hypothesis_unmet, {"not-pseudo-distributive"});
  } else {
    std::vector<std::string> bad{"checked=0"};
    std::size_t checked = 0;
    for (std::size_t n = 1; n < sub.size(); ++n) {
      if (!is_hollow_submodule(sub, n)) continue;
      ++checked;
      if (!std::binary_search(ps.begin(), ps.end(), n)) bad.push_back(sub.name(n));
    }
    bad.front() = "checked=" + std::to_string(checked);
    report.add("ps-hollow.pseudo-distributive-hollow", bad.size() == 1 ? Verdict::pass : Verdict::fail, bad);
  }
  if (!is_s_lifting(sub)) {
    report.add("ps-hollow.s-lifting-maximal-hollow", Verdict::hypothesis_unmet, {"not-s-lifting"});
  } else {
    const auto maximal = maximal_hollow_submodules(sub);
    std::vector<std::string> bad{"checked=" + std::to_string(maximal.size())};
    for (auto n : maximal) {
      if (!std::binary_search(ps.begin(), ps.end(), n)) bad.push_back(sub.name(n));
    }
    report.add("ps-hollow.s-lifting-maximal-hollow", bad.size() == 1 ? Verdict::pass : Verdict::fail, bad);
  }
  return report;
}

namespace {

// p^m exactly dividing n, ascending by p.
std::vector<std::uint32_t> prime_power_parts(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint32_t q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.push_back(q);
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Report check_prime_power_representation(const SubmoduleLattice& sub) {
  Report report;
  const std::string claim = "cyclic.prime-power-representation";
  const auto& module = sub.module();
  const auto n = module.ring().modulus();
  if (module.rank() != 1 || module.factors()[0] != n) {
    report.add(claim, Verdict::hypothesis_unmet, {"not-cyclic-over-itself"});
    return report;
  }
  std::vector<std::size_t> summands;
  std::vector<std::vector<Ideal>> expected_h;
  for (auto q : prime_power_parts(n)) {
    const Element generator = n / q;
    const Element gens[] = {generator};
    summands.push_back(sub.index_of(span(module, gens)));
    expected_h.push_back({Ideal{generator}});
  }
  std::vector<std::string> witnesses;
  bool ok = true;
  try {
    const auto rep = make_representation(sub, summands);
    witnesses.push_back("rep=" + sub.names(rep.summands));
    ok = is_minimal(sub, rep);
    for (std::size_t i = 0; i < rep.summands.size(); ++i) {
      const auto& h = rep.profiles[i].minimal;
      witnesses.push_back(sub.name(rep.summands[i]) + ":H=" + h_name(sub, h));
      const auto gen = Ideal{static_cast<std::uint32_t>(n / sub.submodule(rep.summands[i]).cardinality())};
      if (h != std::vector<Ideal>{gen}) ok = false;
    }
    const auto all = enumerate_minimal_representations(sub, rep.summands.size());
    const bool found = std::any_of(all.begin(), all.end(), [&](const Representation& r) {
      return r.summands == rep.summands;
    });
    if (!found) ok = false;
    witnesses.push_back(flag01("enumerated", found));
  } catch (const Error&) {
    ok = false;
    witnesses.push_back("invalid-representation");
  }
  report.add(claim, ok ? Verdict::pass : Verdict::fail, std::move(witnesses));
  return report;
}

Report check_module_battery(const SubmoduleLattice& sub, std::size_t max_terms) {
  Report report;
  report.subject = sub.module().description();
  report.flag(ps_hollow_reading_flag());
  report.merge(check_lattice_battery(sub.action(), sub.labels()));

  {
    std::vector<std::string> disagree{"checked=" + std::to_string(sub.size() - 1)};
    for (std::size_t n = 1; n < sub.size(); ++n) {
      const bool module_side = is_second_submodule(sub.module(), sub.submodule(n));
      const bool lattice_side = is_kind(sub.action(), static_cast<ElementId>(n), SpectrumKind::second);
      if (module_side != lattice_side) disagree.push_back(sub.name(n));
    }
    report.add("consistency.second-predicate", disagree.size() == 1 ? Verdict::pass : Verdict::fail, disagree);
  }
  report.add("bridge.join-distributive", distributes_over_joins(sub.action()) ? Verdict::pass : Verdict::fail);

  report.merge(check_minimal_ideals_hollow(sub));

  const auto ps = ps_hollow_submodules(sub);
  {
    Tally sums("ps-hollow.sum-shares-h");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        if (sub.leq(ps[i], ps[j]) || sub.leq(ps[j], ps[i])) continue;
        sums.record_claims(check_sum_of_h_ps_hollow(sub, ps[i], ps[j]), "ps-hollow.sum-shares-h");
      }
    }
    if (ps.size() < 2) sums.unmet("fewer-than-two-ps-hollow");
    sums.emit(report);
  }
  report.merge(check_hull_properties(sub));

  const auto reps = enumerate_minimal_representations(sub, max_terms);
  {
    Tally same_length("uniqueness.same-length");
    Tally same_families("uniqueness.same-h-families");
    Tally hulls("uniqueness.hulls-match-by-h");
    Tally h_minimal("uniqueness.h-minimal-summands-agree");
    Tally all_agree("uniqueness.all-summands-agree");
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i; j < reps.size(); ++j) {
        const auto first = verify_first_uniqueness(sub, reps[i], reps[j]);
        same_length.record_claims(first, "uniqueness.same-length");
        same_families.record_claims(first, "uniqueness.same-h-families");
        hulls.record_claims(first, "uniqueness.hulls-match-by-h");
        try {
          const auto second = verify_second_uniqueness(sub, reps[i], reps[j]);
          h_minimal.record_claims(second, "uniqueness.h-minimal-summands-agree");
          all_agree.record_claims(second, "uniqueness.all-summands-agree");
          for (const auto& f : second.flags) report.flag(f);
        } catch (const Error&) {
          h_minimal.unmet("alignment-failed");
          all_agree.unmet("alignment-failed");
        }
      }
    }
    if (reps.empty()) {
      for (auto* t : {&same_length, &same_families, &hulls, &h_minimal, &all_agree}) t->unmet("no-minimal-representation");
    }
    for (auto* t : {&same_length, &same_families, &hulls, &h_minimal, &all_agree}) t->emit(report);
  }
  if (reps.empty()) {
    report.add("representation.associated-ideals-independent", Verdict::hypothesis_unmet, {"no-minimal-representation"});
  } else {
    const auto base = main_associated_hollow_ideals(reps.front());
    const bool same = std::all_of(reps.begin(), reps.end(), [&](const Representation& r) {
      return main_associated_hollow_ideals(r) == base;
    });
    report.add("representation.associated-ideals-independent", same ? Verdict::pass : Verdict::fail,
               {"ass=" + ideal_set_name(sub.ring(), base), "representations=" + std::to_string(reps.size())});
  }
  if (!is_multiplication_module(sub)) {
    report.add("representation.multiplication-unique", Verdict::hypothesis_unmet, {"not-multiplication"});
  } else {
    std::vector<std::string> w{"representations=" + std::to_string(reps.size())};
    for (const auto& r : reps) w.push_back(sub.names(r.summands));
    report.add("representation.multiplication-unique", reps.size() == 1 ? Verdict::pass : Verdict::fail, w);
  }

  {
    Tally inherit("non-small.inherits-h");
    for (auto n : ps) {
      const auto r = check_non_small_inheritance(sub, n);
      inherit.record_claims(r, "non-small.inherits-h");
      for (const auto& f : r.flags) report.flag(f);
    }
    if (ps.empty()) inherit.unmet("no-ps-hollow-submodule");
    inherit.emit(report);
  }
  report.merge(check_semisimple_equivalence(sub));
  report.merge(check_second_representable_equivalence(sub));
  if (const auto seconds = minimal_second_representation(sub)) {
    report.merge(check_direct_sum_from_intersections(sub, *seconds));
  } else {
    report.add("direct-sum.second-overlaps", Verdict::hypothesis_unmet, {"not-second-representable"});
  }
  {
    Tally distributive("direct-sum.distributive");
    Tally hull_overlaps("direct-sum.hull-overlaps");
    Tally hull_subs("direct-sum.hull-submodules");
    for (const auto& r : reps) {
      const auto a = check_direct_sum_distributive(sub, r);
      const auto b = check_direct_sum_from_hulls(sub, r);
      const auto c = check_direct_sum_from_hull_submodules(sub, r);
      distributive.record_claims(a, "direct-sum.distributive");
      hull_overlaps.record_claims(b, "direct-sum.hull-overlaps");
      hull_subs.record_claims(c, "direct-sum.hull-submodules");
      for (const auto* x : {&a, &b, &c}) {
        for (const auto& f : x->flags) report.flag(f);
      }
    }
    if (reps.empty()) {
      for (auto* t : {&distributive, &hull_overlaps, &hull_subs}) t->unmet("no-minimal-representation");
    }
    for (auto* t : {&distributive, &hull_overlaps, &hull_subs}) t->emit(report);
  }
  report.merge(check_prime_power_representation(sub));
  return report;
}

}  // namespace hollowlat
