#pragma once

// Seeded generators for property tests and benchmarks.

#include <cstdint>
#include <random>

#include "hollowlat/action.hpp"
#include "hollowlat/module.hpp"

namespace hollowlat {

using Rng = std::mt19937_64;

/// A lattice with 2 to max_size elements. Index order is a linear extension,
/// 0 is the bottom and size-1 the top. Rejection-samples relations on the
/// middle elements until every pair has a meet and a join.
FiniteLattice random_lattice(Rng& rng, std::size_t max_size);

/// A poset with 1 to max_size elements whose index order is a linear extension.
FinitePoset random_poset(Rng& rng, std::size_t max_size);

/// A random action. `star` restricts to s⇀x = t(s) ∧ x for a monotone t;
/// otherwise each s⇀x is drawn between the bound forced by monotonicity and x.
PosetAction random_action(Rng& rng, const FiniteLattice& lattice, const FinitePoset& poset, bool star);

/// Lattice, poset and action from one seed; star-shaped actions for odd draws.
PosetAction random_instance(std::uint64_t seed, std::size_t max_lattice = 8, std::size_t max_poset = 4);

/// A module over Z/nZ with n ≤ max_modulus, 1 to 3 factors and order ≤ max_order.
FiniteModule random_module(Rng& rng, std::uint32_t max_modulus = 36, std::size_t max_order = 256);

}  // namespace hollowlat
