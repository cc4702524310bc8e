#pragma once

// Module-class predicates over a submodule lattice. Each one quantifies its
// defining condition over every enumerated submodule and ideal. Submodules
// are referred to by their index in the SubmoduleLattice.

#include <cstddef>
#include <optional>
#include <vector>

#include "hollowlat/module.hpp"

namespace hollowlat {

/// IN = N or IN = 0 for every ideal I, with N ≠ 0. Computed on member sets,
/// independently of the lattice action.
bool is_second_submodule(const FiniteModule& module, const Submodule& n);
bool is_second_submodule(const SubmoduleLattice& sub, std::size_t n);

bool is_simple(const SubmoduleLattice& sub, std::size_t n);
/// Every submodule has a complement.
bool is_semisimple(const SubmoduleLattice& sub);
/// Every submodule is IM for some ideal I.
bool is_multiplication_module(const SubmoduleLattice& sub);
/// K = (0 :_M (0 :_R K)) for every submodule K.
bool is_comultiplication(const SubmoduleLattice& sub);
/// L ∩ (K + N) = (L ∩ K) + (L ∩ N) over all triples.
bool is_distributive(const SubmoduleLattice& sub, Execution exec = Execution::parallel);
/// L ∩ (IM + N) = (L ∩ IM) + (L ∩ N) over all L, N and ideals I.
bool is_pseudo_distributive(const SubmoduleLattice& sub, Execution exec = Execution::parallel);

/// N ≠ 0 and N = A + B with A, B ≤ N forces A = N or B = N.
bool is_hollow_submodule(const SubmoduleLattice& sub, std::size_t n);
/// N + L = M forces L = M.
bool is_small(const SubmoduleLattice& sub, std::size_t n);
/// K ≤ N and K + X = N forces X = N for X ≤ N.
bool is_small_in(const SubmoduleLattice& sub, std::size_t k, std::size_t n);
/// N/X is small in M/X, for X ≤ N.
bool is_small_over(const SubmoduleLattice& sub, std::size_t n, std::size_t x);
bool is_direct_summand(const SubmoduleLattice& sub, std::size_t n);
/// Every submodule N contains a direct summand X with N/X small in M/X.
bool is_lifting(const SubmoduleLattice& sub);
/// Hollow submodules not strictly contained in another hollow submodule.
std::vector<std::size_t> maximal_hollow_submodules(const SubmoduleLattice& sub);
/// Lifting, and every maximal hollow submodule is second.
bool is_s_lifting(const SubmoduleLattice& sub);

std::vector<std::size_t> second_submodules(const SubmoduleLattice& sub);
std::vector<std::size_t> maximal_second_submodules(const SubmoduleLattice& sub);

/// Index of N_1 + ... + N_k; the zero submodule for an empty list.
std::size_t sum_of(const SubmoduleLattice& sub, std::span<const std::size_t> summands);
/// Some summand lies in the sum of the others.
std::optional<std::size_t> redundant_summand(const SubmoduleLattice& sub, std::span<const std::size_t> summands);
/// K_i ∩ Σ_{j≠i} K_j = 0 for every i.
bool is_direct_sum(const SubmoduleLattice& sub, std::span<const std::size_t> summands);

/// M is a sum of second submodules.
bool is_second_representable(const SubmoduleLattice& sub);
/// A representation by second submodules without redundant summands, built
/// from the maximal second submodules by dropping redundant ones in order.
std::optional<std::vector<std::size_t>> minimal_second_representation(const SubmoduleLattice& sub);
/// Every second representation without redundant summands and with at most
/// `max_terms` summands (0 means no limit), as ascending index lists.
std::vector<std::vector<std::size_t>> minimal_second_representations(const SubmoduleLattice& sub,
                                                                     std::size_t max_terms = 0);
/// Sorted distinct annihilators of the summands.
std::vector<Ideal> attached_primes(const SubmoduleLattice& sub, std::span<const std::size_t> representation);

}  // namespace hollowlat
