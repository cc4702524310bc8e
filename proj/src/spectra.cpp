#include "hollowlat/spectra.hpp"

#include <algorithm>
#include <string>

#include "hollowlat/error.hpp"
#include "hollowlat/kernels.hpp"

namespace hollowlat {

std::string_view to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::irreducible: return "irreducible";
    case SpectrumKind::strongly_irreducible: return "strongly_irreducible";
    case SpectrumKind::hollow: return "hollow";
    case SpectrumKind::strongly_hollow: return "strongly_hollow";
    case SpectrumKind::psi: return "psi";
    case SpectrumKind::prime: return "prime";
    case SpectrumKind::coprime: return "coprime";
    case SpectrumKind::ps_hollow: return "ps_hollow";
    case SpectrumKind::second: return "second";
    case SpectrumKind::first: return "first";
  }
  return "unknown";
}

std::optional<SpectrumKind> parse_spectrum_kind(std::string_view text) {
  for (auto kind : kAllSpectrumKinds) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

bool is_primeness_kind(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::irreducible:
    case SpectrumKind::strongly_irreducible:
    case SpectrumKind::psi:
    case SpectrumKind::prime:
    case SpectrumKind::coprime:
      return true;
    default:
      return false;
  }
}

bool in_domain(const FiniteLattice& lattice, ElementId x, SpectrumKind kind) {
  if (x >= lattice.size()) return false;
  return is_primeness_kind(kind) ? x != lattice.top() : x != lattice.bottom();
}

namespace {

bool holds(const PosetAction& action, ElementId x, SpectrumKind kind) {
  const auto& L = action.lattice();
  const auto n = static_cast<ElementId>(L.size());
  const auto m = static_cast<ElementId>(action.acting_size());
  const ElementId zero = L.bottom();
  const ElementId one = L.top();

  switch (kind) {
    case SpectrumKind::irreducible:
      for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = a; b < n; ++b) {
          if (L.meet(a, b) == x && a != x && b != x) return false;
        }
      }
      return true;
    case SpectrumKind::strongly_irreducible:
      for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = a; b < n; ++b) {
          if (L.leq(L.meet(a, b), x) && !L.leq(a, x) && !L.leq(b, x)) return false;
        }
      }
      return true;
    case SpectrumKind::hollow:
      for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = a; b < n; ++b) {
          if (L.join(a, b) == x && a != x && b != x) return false;
        }
      }
      return true;
    case SpectrumKind::strongly_hollow:
      for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = a; b < n; ++b) {
          if (L.leq(x, L.join(a, b)) && !L.leq(x, a) && !L.leq(x, b)) return false;
        }
      }
      return true;
    case SpectrumKind::psi:
      for (ElementId s = 0; s < m; ++s) {
        const auto unit = action.unit_image(s);
        if (L.leq(unit, x)) continue;
        for (ElementId y = 0; y < n; ++y) {
          if (L.leq(L.meet(unit, y), x) && !L.leq(y, x)) return false;
        }
      }
      return true;
    case SpectrumKind::prime:
      for (ElementId s = 0; s < m; ++s) {
        if (L.leq(action.unit_image(s), x)) continue;
        for (ElementId y = 0; y < n; ++y) {
          if (L.leq(action.apply(s, y), x) && !L.leq(y, x)) return false;
        }
      }
      return true;
    case SpectrumKind::coprime:
      for (ElementId s = 0; s < m; ++s) {
        const auto unit = action.unit_image(s);
        if (!L.leq(unit, x) && L.join(unit, x) != one) return false;
      }
      return true;
    case SpectrumKind::ps_hollow:
      for (ElementId s = 0; s < m; ++s) {
        const auto unit = action.unit_image(s);
        if (L.leq(x, unit)) continue;
        for (ElementId y = 0; y < n; ++y) {
          if (L.leq(x, L.join(unit, y)) && !L.leq(x, y)) return false;
        }
      }
      return true;
    case SpectrumKind::second:
      for (ElementId s = 0; s < m; ++s) {
        const auto sx = action.apply(s, x);
        if (sx != x && sx != zero) return false;
      }
      return true;
    case SpectrumKind::first:
      for (ElementId s = 0; s < m; ++s) {
        if (action.apply(s, x) == zero) continue;
        const auto& below = L.down_set(x);
        for (auto y = below.find_first(); y != Bitset::npos; y = below.find_next(y)) {
          if (y != zero && action.apply(s, static_cast<ElementId>(y)) == zero) return false;
        }
      }
      return true;
  }
  return false;
}

std::vector<ElementId> sorted_difference(std::span<const ElementId> a, std::span<const ElementId> b) {
  std::vector<ElementId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(std::span<const ElementId> a, std::span<const ElementId> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Adds a set-equality finding with both sides as witnesses.
void add_equality(Report& report, const std::string& claim, const Labels& labels,
                  std::span<const ElementId> lhs, std::span<const ElementId> rhs) {
  const bool equal = std::equal(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
  report.add(claim, equal ? Verdict::pass : Verdict::fail,
             {"lhs=" + format_set(labels, lhs), "rhs=" + format_set(labels, rhs)});
}

std::vector<ElementId> all_except(std::size_t n, ElementId excluded) {
  std::vector<ElementId> out;
  for (ElementId y = 0; y < n; ++y) {
    if (y != excluded) out.push_back(y);
  }
  return out;
}

// Spec^f(L/x) = (L/x) ∖ {x/x}, with the first classes that fail reported.
bool quotient_all_first(const PosetAction& action, ElementId x, std::vector<ElementId>& failing) {
  const auto q = quotient(action, x);
  const auto firsts = spectrum(q.action, SpectrumKind::first, Execution::serial);
  const auto expected = all_except(q.action.lattice().size(), q.action.lattice().bottom());
  failing.clear();
  for (auto c : sorted_difference(expected, firsts)) failing.push_back(q.representatives[c]);
  return failing.empty() && firsts == expected;
}

}  // namespace

bool is_kind(const PosetAction& action, ElementId x, SpectrumKind kind) {
  if (!in_domain(action.lattice(), x, kind)) {
    throw Error(ErrorKind::DomainError,
                "element " + std::to_string(x) + " is outside the domain of " + std::string(to_string(kind)));
  }
  return holds(action, x, kind);
}

std::vector<ElementId> spectrum(const PosetAction& action, SpectrumKind kind, Execution exec) {
  const auto& L = action.lattice();
  const auto flags = kernels::evaluate_all(
      L.size(),
      [&](std::size_t x) {
        const auto id = static_cast<ElementId>(x);
        return in_domain(L, id, kind) && holds(action, id, kind);
      },
      exec);
  std::vector<ElementId> out;
  for (std::size_t x = 0; x < flags.size(); ++x) {
    if (flags[x]) out.push_back(static_cast<ElementId>(x));
  }
  return out;
}

Variety variety(const FiniteLattice& lattice, std::span<const ElementId> designated, ElementId base) {
  Variety v{base, {}};
  for (auto p : designated) {
    if (lattice.leq(base, p)) v.members.push_back(p);
  }
  std::sort(v.members.begin(), v.members.end());
  return v;
}

bool is_top(const FiniteLattice& lattice, std::span<const ElementId> designated) {
  const auto n = static_cast<ElementId>(lattice.size());
  std::vector<Bitset> varieties(n, Bitset(n));
  for (ElementId a = 0; a < n; ++a) {
    for (auto p : designated) {
      if (lattice.leq(a, p)) varieties[a].set(p);
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      const auto u = varieties[a] | varieties[b];
      if (std::none_of(varieties.begin(), varieties.end(), [&](const Bitset& v) { return v == u; })) return false;
    }
  }
  return true;
}

std::string label_of(const Labels& labels, ElementId x) {
  if (x < labels.size()) return labels[x];
  return std::to_string(x);
}

std::string format_set(const Labels& labels, std::span<const ElementId> ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += label_of(labels, ids[i]);
  }
  return out + "}";
}

std::string ps_hollow_reading_flag() {
  return "ps_hollow read as: x<=(s.1)vy implies x<=s.1 or x<=y, for all s,y";
}

std::string coprime_domain_flag() { return "coprime spectrum admits the bottom element when it differs from top"; }

std::string multiplication_spectra_flag() {
  return "multiplication identity checked as Spec^psi(dual)=SH=Spec^p(dual) and Spec^psi=SI";
}

Report check_duality(const PosetAction& action, DualityPart part, const Labels& labels) {
  Report report;
  const auto& L = action.lattice();
  switch (part) {
    case DualityPart::coprime_is_dual_second: {
      const auto lhs = spectrum(action, SpectrumKind::coprime);
      const auto rhs = spectrum(dual_action(action), SpectrumKind::second);
      add_equality(report, "duality.coprime-eq-dual-second", labels, lhs, rhs);
      report.flag(coprime_domain_flag());
      break;
    }
    case DualityPart::dual_coprime_is_star_second: {
      const auto lhs = spectrum(dual_action(action), SpectrumKind::coprime);
      const auto rhs = spectrum(star_action(action), SpectrumKind::second);
      add_equality(report, "duality.dual-coprime-eq-star-second", labels, lhs, rhs);
      report.flag(coprime_domain_flag());
      break;
    }
    case DualityPart::prime_quotient_first: {
      const auto primes = spectrum(action, SpectrumKind::prime);
      std::vector<std::string> witnesses{"primes=" + format_set(labels, primes)};
      bool ok = true;
      std::vector<ElementId> failing;
      for (auto x : primes) {
        if (!quotient_all_first(action, x, failing)) {
          ok = false;
          witnesses.push_back("x=" + label_of(labels, x) + ":not-first=" + format_set(labels, failing));
        }
      }
      report.add("quotient.prime-implies-all-first", ok ? Verdict::pass : Verdict::fail, std::move(witnesses));
      break;
    }
    case DualityPart::prime_quotient_equivalence: {
      if (!distributes_over_joins(action)) {
        report.add("quotient.prime-iff-all-first", Verdict::hypothesis_unmet,
                   {"action-not-join-distributive;equivalence-not-asserted"});
        break;
      }
      bool ok = true;
      std::vector<std::string> witnesses;
      std::vector<ElementId> failing;
      std::size_t checked = 0;
      for (ElementId x = 0; x < L.size(); ++x) {
        if (x == L.top()) continue;
        ++checked;
        const bool prime = holds(action, x, SpectrumKind::prime);
        const bool all_first = quotient_all_first(action, x, failing);
        if (prime != all_first) {
          ok = false;
          witnesses.push_back("x=" + label_of(labels, x) + ":prime=" + (prime ? "1" : "0") +
                              ":all-first=" + (all_first ? "1" : "0"));
        }
      }
      witnesses.insert(witnesses.begin(), "checked=" + std::to_string(checked));
      report.add("quotient.prime-iff-all-first", ok ? Verdict::pass : Verdict::fail, std::move(witnesses));
      break;
    }
  }
  return report;
}

Report check_spectral_identities(const PosetAction& action, const Labels& labels) {
  Report report;
  const auto& L = action.lattice();
  const ElementId zero = L.bottom();
  const ElementId one = L.top();

  {
    const bool ok = dual_action(dual_action(action)) == star_action(action);
    report.add("identity.double-dual-eq-star", ok ? Verdict::pass : Verdict::fail);
  }

  if (zero == one) {
    report.add("identity.zero-prime-iff-one-first", Verdict::hypothesis_unmet, {"one-element-lattice"});
  } else {
    const bool prime = holds(action, zero, SpectrumKind::prime);
    const bool first = holds(action, one, SpectrumKind::first);
    report.add("identity.zero-prime-iff-one-first", prime == first ? Verdict::pass : Verdict::fail,
               {std::string("zero-prime=") + (prime ? "1" : "0"), std::string("one-first=") + (first ? "1" : "0")});
  }

  const auto dual = dual_action(action);
  const auto sh = spectrum(action, SpectrumKind::strongly_hollow);
  const auto dual_prime = spectrum(dual, SpectrumKind::prime);
  report.add("identity.sh-subset-dual-prime", is_subset(sh, dual_prime) ? Verdict::pass : Verdict::fail,
             {"SH=" + format_set(labels, sh), "dual-prime=" + format_set(labels, dual_prime)});

  if (!is_multiplication(action)) {
    report.add("identity.multiplication-spectra", Verdict::hypothesis_unmet, {"not-multiplication"});
  } else {
    const auto dual_psi = spectrum(dual, SpectrumKind::psi);
    const auto psi = spectrum(action, SpectrumKind::psi);
    const auto si = spectrum(action, SpectrumKind::strongly_irreducible);
    const bool ok = dual_psi == sh && sh == dual_prime && psi == si;
    report.add("identity.multiplication-spectra", ok ? Verdict::pass : Verdict::fail,
               {"dual-psi=" + format_set(labels, dual_psi), "SH=" + format_set(labels, sh),
                "dual-prime=" + format_set(labels, dual_prime), "psi=" + format_set(labels, psi),
                "SI=" + format_set(labels, si)});
    report.flag(multiplication_spectra_flag());
  }

  const auto star = star_action(action);
  {
    const auto star_prime = spectrum(star, SpectrumKind::prime);
    const auto psi = spectrum(action, SpectrumKind::psi);
    add_equality(report, "identity.star-prime-eq-psi", labels, star_prime, psi);
  }
  {
    const auto coprime = spectrum(action, SpectrumKind::coprime);
    const auto star_coprime = spectrum(star, SpectrumKind::coprime);
    add_equality(report, "identity.coprime-star-invariant", labels, coprime, star_coprime);
  }

  std::vector<std::string> first_bad;
  std::vector<std::string> second_bad;
  for (ElementId x = 0; x < L.size(); ++x) {
    if (x == zero) continue;
    const auto interval = lower_interval(action, x);
    const auto& sub = interval.action;
    const ElementId sub_zero = sub.lattice().bottom();
    const bool first = holds(action, x, SpectrumKind::first);
    const bool zero_prime = holds(sub, sub_zero, SpectrumKind::prime);
    if (first != zero_prime) first_bad.push_back(label_of(labels, x));
    const bool second = holds(action, x, SpectrumKind::second);
    const bool zero_coprime = holds(sub, sub_zero, SpectrumKind::coprime);
    if (second != zero_coprime) second_bad.push_back(label_of(labels, x));
  }
  report.add("identity.first-iff-interval-zero-prime", first_bad.empty() ? Verdict::pass : Verdict::fail,
             first_bad);
  report.add("identity.second-iff-interval-zero-coprime", second_bad.empty() ? Verdict::pass : Verdict::fail,
             second_bad);
  return report;
}

Report check_top_property(const PosetAction& action, const Labels& labels) {
  Report report;
  if (!is_multiplication(action)) {
    report.add("top.multiplication-prime-top", Verdict::hypothesis_unmet, {"not-multiplication"});
    return report;
  }
  const auto primes = spectrum(action, SpectrumKind::prime);
  report.add("top.multiplication-prime-top", is_top(action.lattice(), primes) ? Verdict::pass : Verdict::fail,
             {"X=" + format_set(labels, primes)});
  return report;
}

Report check_lattice_battery(const PosetAction& action, const Labels& labels) {
  Report report;
  for (auto part : {DualityPart::coprime_is_dual_second, DualityPart::dual_coprime_is_star_second,
                    DualityPart::prime_quotient_first, DualityPart::prime_quotient_equivalence}) {
    report.merge(check_duality(action, part, labels));
  }
  report.merge(check_spectral_identities(action, labels));
  report.merge(check_top_property(action, labels));
  return report;
}

}  // namespace hollowlat
