#include "hollowlat/module_classes.hpp"

#include <algorithm>

#include "hollowlat/kernels.hpp"

namespace hollowlat {

bool is_second_submodule(const FiniteModule& module, const Submodule& n) {
  if (n.is_zero()) return false;
  for (auto d : module.ring().divisors()) {
    const auto image = ideal_apply(module, Ideal{d}, n);
    if (image != n && !image.is_zero()) return false;
  }
  return true;
}

bool is_second_submodule(const SubmoduleLattice& sub, std::size_t n) {
  return is_second_submodule(sub.module(), sub.submodule(n));
}

bool is_simple(const SubmoduleLattice& sub, std::size_t n) {
  return n != sub.zero() && sub.lattice().down_set(static_cast<ElementId>(n)).count() == 2;
}

namespace {

bool has_complement(const SubmoduleLattice& sub, std::size_t n) {
  for (std::size_t k = 0; k < sub.size(); ++k) {
    if (sub.meet(n, k) == sub.zero() && sub.sum(n, k) == sub.whole()) return true;
  }
  return false;
}

// Distinct indices of IM over all ideals I.
std::vector<std::size_t> ideal_images(const SubmoduleLattice& sub) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < sub.ideals().size(); ++s) out.push_back(sub.ideal_image(s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool is_semisimple(const SubmoduleLattice& sub) {
  for (std::size_t n = 0; n < sub.size(); ++n) {
    if (!has_complement(sub, n)) return false;
  }
  return true;
}

bool is_multiplication_module(const SubmoduleLattice& sub) { return ideal_images(sub).size() == sub.size(); }

bool is_comultiplication(const SubmoduleLattice& sub) {
  const auto& module = sub.module();
  for (const auto& k : sub.submodules()) {
    if (annihilated_by(module, annihilator(module, k)) != k) return false;
  }
  return true;
}

bool is_distributive(const SubmoduleLattice& sub, Execution exec) {
  const std::size_t n = sub.size();
  const auto failure = kernels::first_failure(n, [&](std::size_t l) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t m = k + 1; m < n; ++m) {
        if (sub.meet(l, sub.sum(k, m)) != sub.sum(sub.meet(l, k), sub.meet(l, m))) return false;
      }
    }
    return true;
  }, exec);
  return !failure;
}

bool is_pseudo_distributive(const SubmoduleLattice& sub, Execution exec) {
  const std::size_t n = sub.size();
  const auto images = ideal_images(sub);
  const auto failure = kernels::first_failure(n, [&](std::size_t l) {
    for (auto im : images) {
      for (std::size_t k = 0; k < n; ++k) {
        if (sub.meet(l, sub.sum(im, k)) != sub.sum(sub.meet(l, im), sub.meet(l, k))) return false;
      }
    }
    return true;
  }, exec);
  return !failure;
}

bool is_hollow_submodule(const SubmoduleLattice& sub, std::size_t n) {
  if (n == sub.zero()) return false;
  const auto& below = sub.lattice().down_set(static_cast<ElementId>(n));
  for (auto a = below.find_first(); a != Bitset::npos; a = below.find_next(a)) {
    if (a == n) continue;
    for (auto b = below.find_next(a); b != Bitset::npos; b = below.find_next(b)) {
      if (b != n && sub.sum(a, b) == n) return false;
    }
  }
  return true;
}

bool is_small(const SubmoduleLattice& sub, std::size_t n) { return is_small_over(sub, n, sub.zero()); }

bool is_small_in(const SubmoduleLattice& sub, std::size_t k, std::size_t n) {
  if (!sub.leq(k, n)) return false;
  const auto& below = sub.lattice().down_set(static_cast<ElementId>(n));
  for (auto x = below.find_first(); x != Bitset::npos; x = below.find_next(x)) {
    if (x != n && sub.sum(k, x) == n) return false;
  }
  return true;
}

bool is_small_over(const SubmoduleLattice& sub, std::size_t n, std::size_t x) {
  const auto& above = sub.lattice().up_set(static_cast<ElementId>(x));
  for (auto y = above.find_first(); y != Bitset::npos; y = above.find_next(y)) {
    if (y != sub.whole() && sub.sum(n, y) == sub.whole()) return false;
  }
  return true;
}

bool is_direct_summand(const SubmoduleLattice& sub, std::size_t n) { return has_complement(sub, n); }

bool is_lifting(const SubmoduleLattice& sub) {
  for (std::size_t n = 0; n < sub.size(); ++n) {
    const auto& below = sub.lattice().down_set(static_cast<ElementId>(n));
    bool found = false;
    for (auto x = below.find_first(); x != Bitset::npos && !found; x = below.find_next(x)) {
      found = is_direct_summand(sub, x) && is_small_over(sub, n, x);
    }
    if (!found) return false;
  }
  return true;
}

std::vector<std::size_t> maximal_hollow_submodules(const SubmoduleLattice& sub) {
  std::vector<std::size_t> hollow;
  for (std::size_t n = 0; n < sub.size(); ++n) {
    if (is_hollow_submodule(sub, n)) hollow.push_back(n);
  }
  std::vector<std::size_t> out;
  for (auto n : hollow) {
    const bool maximal = std::none_of(hollow.begin(), hollow.end(),
                                      [&](std::size_t k) { return k != n && sub.leq(n, k); });
    if (maximal) out.push_back(n);
  }
  return out;
}

bool is_s_lifting(const SubmoduleLattice& sub) {
  if (!is_lifting(sub)) return false;
  const auto maximal = maximal_hollow_submodules(sub);
  return std::all_of(maximal.begin(), maximal.end(), [&](std::size_t n) { return is_second_submodule(sub, n); });
}

std::vector<std::size_t> second_submodules(const SubmoduleLattice& sub) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < sub.size(); ++n) {
    if (is_second_submodule(sub, n)) out.push_back(n);
  }
  return out;
}

std::vector<std::size_t> maximal_second_submodules(const SubmoduleLattice& sub) {
  const auto seconds = second_submodules(sub);
  std::vector<std::size_t> out;
  for (auto n : seconds) {
    const bool maximal = std::none_of(seconds.begin(), seconds.end(),
                                      [&](std::size_t k) { return k != n && sub.leq(n, k); });
    if (maximal) out.push_back(n);
  }
  return out;
}

std::size_t sum_of(const SubmoduleLattice& sub, std::span<const std::size_t> summands) {
  std::size_t total = sub.zero();
  for (auto n : summands) total = sub.sum(total, n);
  return total;
}

std::optional<std::size_t> redundant_summand(const SubmoduleLattice& sub, std::span<const std::size_t> summands) {
  for (std::size_t j = 0; j < summands.size(); ++j) {
    std::size_t rest = sub.zero();
    for (std::size_t i = 0; i < summands.size(); ++i) {
      if (i != j) rest = sub.sum(rest, summands[i]);
    }
    if (sub.leq(summands[j], rest)) return j;
  }
  return std::nullopt;
}

bool is_direct_sum(const SubmoduleLattice& sub, std::span<const std::size_t> summands) {
  for (std::size_t j = 0; j < summands.size(); ++j) {
    std::size_t rest = sub.zero();
    for (std::size_t i = 0; i < summands.size(); ++i) {
      if (i != j) rest = sub.sum(rest, summands[i]);
    }
    if (sub.meet(summands[j], rest) != sub.zero()) return false;
  }
  return true;
}

bool is_second_representable(const SubmoduleLattice& sub) {
  const auto seconds = second_submodules(sub);
  return sum_of(sub, seconds) == sub.whole();
}

std::optional<std::vector<std::size_t>> minimal_second_representation(const SubmoduleLattice& sub) {
  auto kept = maximal_second_submodules(sub);
  if (sum_of(sub, kept) != sub.whole()) return std::nullopt;
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<std::size_t> rest = kept;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (sum_of(sub, rest) == sub.whole()) {
      kept = std::move(rest);
    } else {
      ++i;
    }
  }
  return kept;
}

namespace {

void search_representations(const SubmoduleLattice& sub, const std::vector<std::size_t>& pool, std::size_t start,
                            std::size_t max_terms, std::vector<std::size_t>& chosen, std::size_t current,
                            std::vector<std::vector<std::size_t>>& out) {
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (sub.leq(pool[i], current)) continue;
    chosen.push_back(pool[i]);
    const auto next = sub.sum(current, pool[i]);
    if (next == sub.whole()) {
      if (!redundant_summand(sub, chosen)) out.push_back(chosen);
    } else if (max_terms == 0 || chosen.size() < max_terms) {
      search_representations(sub, pool, i + 1, max_terms, chosen, next, out);
    }
    chosen.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> minimal_second_representations(const SubmoduleLattice& sub,
                                                                     std::size_t max_terms) {
  const auto seconds = second_submodules(sub);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chosen;
  search_representations(sub, seconds, 0, max_terms, chosen, sub.zero(), out);
  return out;
}

std::vector<Ideal> attached_primes(const SubmoduleLattice& sub, std::span<const std::size_t> representation) {
  std::vector<Ideal> out;
  for (auto n : representation) out.push_back(sub.annihilator(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hollowlat
