#include "hollowlat/random.hpp"

#include <vector>

#include "hollowlat/error.hpp"

namespace hollowlat {
namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Uniform pick from {z : lo ≤ z ≤ hi}; lo ≤ hi must hold.
ElementId pick_between(Rng& rng, const FiniteLattice& lattice, ElementId lo, ElementId hi) {
  std::vector<ElementId> choices;
  const auto between = lattice.up_set(lo) & lattice.down_set(hi);
  for (auto z = between.find_first(); z != Bitset::npos; z = between.find_next(z)) {
    choices.push_back(static_cast<ElementId>(z));
  }
  return choices[uniform(rng, 0, choices.size() - 1)];
}

}  // namespace

FiniteLattice random_lattice(Rng& rng, std::size_t max_size) {
  if (max_size < 2) throw Error(ErrorKind::ValidationError, "random lattices need at least two elements");
  while (true) {
    const auto n = static_cast<ElementId>(uniform(rng, 2, max_size));
    const double density = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    std::vector<OrderPair> pairs;
    for (ElementId x = 1; x + 1 < n; ++x) {
      pairs.emplace_back(0, x);
      pairs.emplace_back(x, n - 1);
      for (ElementId y = x + 1; y + 1 < n; ++y) {
        if (coin(rng, density)) pairs.emplace_back(x, y);
      }
    }
    if (n == 2) pairs.emplace_back(0, 1);
    try {
      return FiniteLattice::build(n, pairs, Execution::serial);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::MeetOrJoinMissing && e.kind() != ErrorKind::Unbounded) throw;
    }
  }
}

FinitePoset random_poset(Rng& rng, std::size_t max_size) {
  const auto n = static_cast<ElementId>(uniform(rng, 1, std::max<std::size_t>(1, max_size)));
  const double density = std::uniform_real_distribution<double>(0.0, 0.8)(rng);
  std::vector<OrderPair> pairs;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (coin(rng, density)) pairs.emplace_back(a, b);
    }
  }
  return FinitePoset::from_pairs(n, pairs);
}

PosetAction random_action(Rng& rng, const FiniteLattice& lattice, const FinitePoset& poset, bool star) {
  const auto n = static_cast<ElementId>(lattice.size());
  const auto m = static_cast<ElementId>(poset.size());
  std::vector<ElementId> table(std::size_t{n} * m);
  auto at = [&](ElementId s, ElementId x) -> ElementId& { return table[std::size_t{s} * n + x]; };

  if (star) {
    std::vector<ElementId> unit(m);
    for (ElementId s = 0; s < m; ++s) {
      ElementId lo = lattice.bottom();
      for (ElementId t = 0; t < s; ++t) {
        if (poset.leq(t, s)) lo = lattice.join(lo, unit[t]);
      }
      unit[s] = pick_between(rng, lattice, lo, lattice.top());
      for (ElementId x = 0; x < n; ++x) at(s, x) = lattice.meet(unit[s], x);
    }
  } else {
    for (ElementId s = 0; s < m; ++s) {
      for (ElementId x = 0; x < n; ++x) {
        ElementId lo = lattice.bottom();
        for (ElementId y = 0; y < x; ++y) {
          if (lattice.leq(y, x)) lo = lattice.join(lo, at(s, y));
        }
        for (ElementId t = 0; t < s; ++t) {
          if (poset.leq(t, s)) lo = lattice.join(lo, at(t, x));
        }
        at(s, x) = pick_between(rng, lattice, lo, x);
      }
    }
  }
  return PosetAction(lattice, poset, std::move(table));
}

PosetAction random_instance(std::uint64_t seed, std::size_t max_lattice, std::size_t max_poset) {
  Rng rng(seed);
  auto lattice = random_lattice(rng, max_lattice);
  auto poset = random_poset(rng, max_poset);
  const bool star = coin(rng, 0.5);
  return random_action(rng, lattice, poset, star);
}

FiniteModule random_module(Rng& rng, std::uint32_t max_modulus, std::size_t max_order) {
  while (true) {
    const auto n = static_cast<std::uint32_t>(uniform(rng, 2, max_modulus));
    Ring ring(n);
    std::vector<std::uint32_t> candidates(ring.divisors().begin() + 1, ring.divisors().end());
    const auto k = uniform(rng, 1, 3);
    std::vector<std::uint32_t> factors;
    std::size_t order = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const auto d = candidates[uniform(rng, 0, candidates.size() - 1)];
      if (order * d > max_order) break;
      order *= d;
      factors.push_back(d);
    }
    if (!factors.empty()) return FiniteModule(ring, factors);
  }
}

}  // namespace hollowlat
