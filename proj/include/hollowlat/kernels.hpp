#pragma once

// Data-parallel kernels behind the exhaustive checks. Each kernel has an
// OpenMP version and a serial reference selected by `Execution`; the serial
// versions follow the definitions literally and are kept for cross-checking.

#include <optional>
#include <span>
#include <vector>

#include "hollowlat/execution.hpp"
#include "hollowlat/lattice.hpp"

namespace hollowlat::kernels {

struct BoundTables {
  std::vector<ElementId> meet;  // row-major size*size, empty when not stored
  std::vector<ElementId> join;
  std::optional<OrderPair> missing;  // lexicographically least pair without meet or join
};

/// Meet/join tables of a partial order given by down and up sets. Stops
/// storing tables when `store` is false but still validates every pair.
BoundTables bound_tables(std::span<const Bitset> down, std::span<const Bitset> up, bool store,
                         Execution exec);

/// The element g of `set` with set ⊆ down(g), if any.
std::optional<ElementId> greatest_of(const Bitset& set, std::span<const Bitset> down);

/// Evaluates `pred(i)` for i in [0, n) and returns the flags.
template <class Pred>
std::vector<char> evaluate_all(std::size_t n, Pred&& pred, Execution exec) {
  std::vector<char> out(n, 0);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = pred(i) ? 1 : 0;
    return out;
  }
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = pred(static_cast<std::size_t>(i)) ? 1 : 0;
  return out;
}

/// Least i in [0, n) with `pred(i)` false, or nullopt when the predicate
/// holds everywhere. Deterministic under both execution modes.
template <class Pred>
std::optional<std::size_t> first_failure(std::size_t n, Pred&& pred, Execution exec) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!pred(i)) return i;
    }
    return std::nullopt;
  }
  std::size_t first = n;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(min : first)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx < first && !pred(idx)) first = idx;
  }
  if (first == n) return std::nullopt;
  return first;
}

}  // namespace hollowlat::kernels
