#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hollowlat/action.hpp"
#include "hollowlat/report.hpp"

namespace hollowlat {

enum class SpectrumKind {
  irreducible,
  strongly_irreducible,
  hollow,
  strongly_hollow,
  psi,  // pseudo strongly irreducible
  prime,
  coprime,
  ps_hollow,
  second,
  first,
};

inline constexpr std::array kAllSpectrumKinds{
    SpectrumKind::irreducible, SpectrumKind::strongly_irreducible, SpectrumKind::hollow,
    SpectrumKind::strongly_hollow, SpectrumKind::psi,   SpectrumKind::prime,
    SpectrumKind::coprime,     SpectrumKind::ps_hollow, SpectrumKind::second,
    SpectrumKind::first,
};

std::string_view to_string(SpectrumKind kind);
std::optional<SpectrumKind> parse_spectrum_kind(std::string_view text);

/// Kinds defined on L ∖ {1}; the others are defined on L ∖ {0}.
bool is_primeness_kind(SpectrumKind kind);
bool in_domain(const FiniteLattice& lattice, ElementId x, SpectrumKind kind);

/// Evaluates the defining condition of `kind` at x by exhaustive
/// quantification. Throws DomainError when x is outside the kind's domain.
bool is_kind(const PosetAction& action, ElementId x, SpectrumKind kind);

/// Sorted ids of the domain elements satisfying `kind`.
std::vector<ElementId> spectrum(const PosetAction& action, SpectrumKind kind,
                                Execution exec = Execution::parallel);

struct Variety {
  ElementId base = 0;
  std::vector<ElementId> members;  // {p ∈ X : base ≤ p}, sorted
};

Variety variety(const FiniteLattice& lattice, std::span<const ElementId> designated, ElementId base);

/// True iff the varieties over `designated` are closed under binary unions.
bool is_top(const FiniteLattice& lattice, std::span<const ElementId> designated);

/// Display names for lattice elements; empty means numeric ids.
using Labels = std::vector<std::string>;

std::string label_of(const Labels& labels, ElementId x);
std::string format_set(const Labels& labels, std::span<const ElementId> ids);

/// The four statements relating spectra of a lattice, its dual, its star
/// action and its quotients.
enum class DualityPart {
  coprime_is_dual_second = 1,        // Spec^c(L) = Spec^s(L⁰)
  dual_coprime_is_star_second = 2,   // Spec^c(L⁰) = Spec^s(L*)
  prime_quotient_first = 3,          // x prime ⇒ Spec^f(L/x) = L/x ∖ {x/x}
  prime_quotient_equivalence = 4,    // under join distributivity: ⇔
};

Report check_duality(const PosetAction& action, DualityPart part, const Labels& labels = {});

/// Element-level identities: dual of dual equals star, 0 prime iff 1 first,
/// SH ⊆ Spec^p(L⁰), the multiplication case, star invariance of prime/coprime,
/// and the interval characterisations of first and second elements.
Report check_spectral_identities(const PosetAction& action, const Labels& labels = {});

/// A multiplication lattice is Spec^p-top.
Report check_top_property(const PosetAction& action, const Labels& labels = {});

/// Every lattice-level check above in one report.
Report check_lattice_battery(const PosetAction& action, const Labels& labels = {});

/// Flag text recorded whenever the ps_hollow reading is used.
std::string ps_hollow_reading_flag();
std::string coprime_domain_flag();
std::string multiplication_spectra_flag();

}  // namespace hollowlat
