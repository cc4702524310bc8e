#pragma once

// PS-hollow submodules: N ⊆ IM + L forces N ⊆ IM or N ⊆ L. Profiles,
// representations as sums of PS-hollow submodules, the minimization
// procedure, and checkers for the structure results around them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hollowlat/module.hpp"
#include "hollowlat/report.hpp"

namespace hollowlat {

/// Throws ZeroSubmodule for the zero submodule.
bool is_ps_hollow(const SubmoduleLattice& sub, std::size_t n);

/// A_N = {I : N ⊆ IM}; H_N its inclusion-minimal members; the hull
/// In(N) = ∩_{I ∈ H_N} IM (M when H_N is empty).
struct HollowProfile {
  std::size_t submodule = 0;
  std::vector<Ideal> covering;  // A_N, ascending generators
  std::vector<Ideal> minimal;   // H_N, ascending generators
  std::size_t hull = 0;
  bool ps_hollow = false;  // profiles of other submodules are diagnostic only
};

HollowProfile profile(const SubmoduleLattice& sub, std::size_t n);

/// PS-hollow submodules in canonical order.
std::vector<std::size_t> ps_hollow_submodules(const SubmoduleLattice& sub, Execution exec = Execution::parallel);

/// (d) = (a) + (b) forces (a) = (d) or (b) = (d). The zero ideal is not hollow.
bool is_hollow_ideal(const Ring& ring, Ideal ideal);

/// M = N_1 + ... + N_k with every N_i PS-hollow. Summands are kept in
/// ascending canonical order without repeats.
struct Representation {
  std::vector<std::size_t> summands;
  std::vector<HollowProfile> profiles;
};

/// Validates and profiles a representation. Throws HypothesisUnmet when the
/// summands do not sum to M or one of them is zero or not PS-hollow.
Representation make_representation(const SubmoduleLattice& sub, std::vector<std::size_t> summands);

struct MinimalityCheck {
  bool minimal = true;
  std::vector<std::string> witnesses;  // "hulls-comparable:N,K" or "redundant:N"
};

/// Pairwise incomparable hulls and no summand inside the sum of the others.
MinimalityCheck check_minimal(const SubmoduleLattice& sub, const Representation& rep);
inline bool is_minimal(const SubmoduleLattice& sub, const Representation& rep) {
  return check_minimal(sub, rep).minimal;
}

/// Repeatedly removes redundant summands, merges summands with equal H, and
/// replaces a pair with comparable hulls by the larger hull, until minimal.
/// Throws StepFailed naming the step that could not be carried out.
Representation minimize(const SubmoduleLattice& sub, const Representation& rep);

/// All minimal representations with at most `max_terms` summands, ascending
/// by summand list. `max_terms` is capped at the number of PS-hollow submodules.
std::vector<Representation> enumerate_minimal_representations(const SubmoduleLattice& sub, std::size_t max_terms);

/// Union of the H-families of the summands, sorted.
std::vector<Ideal> main_associated_hollow_ideals(const Representation& rep);

/// Every minimal ideal of A_N is hollow and N ⊆ In(N), for every PS-hollow N.
Report check_minimal_ideals_hollow(const SubmoduleLattice& sub);

/// For incomparable PS-hollow N and K: N + K is H-PS-hollow iff N and K both
/// are, for every candidate H. Throws HypothesisUnmet otherwise.
Report check_sum_of_h_ps_hollow(const SubmoduleLattice& sub, std::size_t n, std::size_t k);

/// Both representations must be minimal; compares length, H-families and hulls.
Report verify_first_uniqueness(const SubmoduleLattice& sub, const Representation& r1, const Representation& r2);
/// Aligns by H, then for H-minimal positions checks N_m = K_m or In(N_m) not
/// PS-hollow; when every hull is PS-hollow, checks all summands agree.
Report verify_second_uniqueness(const SubmoduleLattice& sub, const Representation& r1, const Representation& r2);

/// When every non-small submodule of M is JM: each K ≤ N non-small in N is
/// PS-hollow with the same H and A_K = A_N.
Report check_non_small_inheritance(const SubmoduleLattice& sub, std::size_t n);

/// Semisimple M with the annihilator separation condition on maximal second
/// submodules: multiplication, PS-hollow ⇒ simple, second ⇒ simple and
/// comultiplication are equivalent.
Report check_semisimple_equivalence(const SubmoduleLattice& sub);
/// The same equivalence for semisimple second representable M whose attached
/// primes are pairwise incomparable.
Report check_second_representable_equivalence(const SubmoduleLattice& sub);

/// Minimal second representation with incomparable attached primes and PS-hollow
/// (or zero) overlaps K_i ∩ Σ_{j≠i} K_j: direct iff pairwise intersections vanish.
Report check_direct_sum_from_intersections(const SubmoduleLattice& sub, const std::vector<std::size_t>& seconds);
/// Distributive M, minimal PS-hollow representation whose summands' nonzero
/// submodules are strongly irreducible or share the summand's H: direct.
Report check_direct_sum_distributive(const SubmoduleLattice& sub, const Representation& rep);
/// Minimal representation, all nonzero submodules of summands PS-hollow and
/// pairwise zero hull intersections: direct.
Report check_direct_sum_from_hulls(const SubmoduleLattice& sub, const Representation& rep);
/// Minimal representation whose hulls' nonzero submodules share the summand's
/// H: hulls meet trivially and the sum is direct.
Report check_direct_sum_from_hull_submodules(const SubmoduleLattice& sub, const Representation& rep);

/// Hull facts for every PS-hollow N: a PS-hollow hull keeps H; the hull is
/// PS-hollow when it lies under every L ⊇ N; existence of a minimal
/// representation when hulls stay PS-hollow; strongly hollow versus PS-hollow;
/// hollow versus PS-hollow under pseudo-distributivity and s-lifting; the
/// multiplication case.
Report check_hull_properties(const SubmoduleLattice& sub);

/// For Z_n as a module over itself: the prime-power components form a
/// minimal representation with singleton H-families.
Report check_prime_power_representation(const SubmoduleLattice& sub);

/// The full battery for a module: lattice-level checks on the bridged action,
/// module/lattice predicate agreement, and every check above, each gated by
/// its hypotheses.
Report check_module_battery(const SubmoduleLattice& sub, std::size_t max_terms = 0);


}  // namespace hollowlat
