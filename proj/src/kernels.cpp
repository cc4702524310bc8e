#include "hollowlat/kernels.hpp"

#include <algorithm>
#include <limits>

namespace hollowlat::kernels {
namespace {

constexpr ElementId kNone = std::numeric_limits<ElementId>::max();

// Reference: the greatest lower bound is the lower bound above every other
// lower bound. Literal O(n) scan per candidate.
ElementId naive_bound(std::span<const Bitset> down, ElementId x, ElementId y, bool lower) {
  const auto n = static_cast<ElementId>(down.size());
  auto leq = [&](ElementId a, ElementId b) { return down[b].test(a); };
  std::vector<ElementId> bounds;
  for (ElementId z = 0; z < n; ++z) {
    const bool is_bound = lower ? (leq(z, x) && leq(z, y)) : (leq(x, z) && leq(y, z));
    if (is_bound) bounds.push_back(z);
  }
  for (ElementId c : bounds) {
    const bool extremal = std::all_of(bounds.begin(), bounds.end(), [&](ElementId z) {
      return lower ? leq(z, c) : leq(c, z);
    });
    if (extremal) return c;
  }
  return kNone;
}

BoundTables serial_tables(std::span<const Bitset> down, bool store) {
  const auto n = static_cast<ElementId>(down.size());
  BoundTables out;
  if (store) {
    out.meet.assign(std::size_t{n} * n, kNone);
    out.join.assign(std::size_t{n} * n, kNone);
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const ElementId m = naive_bound(down, x, y, true);
      const ElementId j = naive_bound(down, x, y, false);
      if ((m == kNone || j == kNone) && !out.missing) out.missing = OrderPair{x, y};
      if (store) {
        out.meet[std::size_t{x} * n + y] = m;
        out.join[std::size_t{x} * n + y] = j;
      }
    }
  }
  return out;
}

BoundTables parallel_tables(std::span<const Bitset> down, std::span<const Bitset> up, bool store) {
  const auto n = static_cast<ElementId>(down.size());
  BoundTables out;
  if (store) {
    out.meet.assign(std::size_t{n} * n, kNone);
    out.join.assign(std::size_t{n} * n, kNone);
  }
  // First missing column per row (y >= x only); rows are independent.
  std::vector<ElementId> row_missing(n, kNone);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t xi = 0; xi < rows; ++xi) {
    const auto x = static_cast<ElementId>(xi);
    for (ElementId y = x; y < n; ++y) {
      const auto m = greatest_of(down[x] & down[y], down);
      const auto j = greatest_of(up[x] & up[y], up);
      if (!m || !j) {
        row_missing[x] = std::min(row_missing[x], y);
        continue;
      }
      if (store) {
        out.meet[std::size_t{x} * n + y] = out.meet[std::size_t{y} * n + x] = *m;
        out.join[std::size_t{x} * n + y] = out.join[std::size_t{y} * n + x] = *j;
      }
    }
  }
  // Rows only scanned y >= x; the least missing pair (a, b) overall has a <= b
  // by symmetry, so the minimum over rows is the lexicographic minimum.
  for (ElementId x = 0; x < n; ++x) {
    if (row_missing[x] != kNone) {
      out.missing = OrderPair{x, row_missing[x]};
      break;
    }
  }
  return out;
}

}  // namespace

std::optional<ElementId> greatest_of(const Bitset& set, std::span<const Bitset> down) {
  // The greatest element has the largest down set among members.
  std::size_t best_rank = 0;
  std::optional<ElementId> best;
  for (auto i = set.find_first(); i != Bitset::npos; i = set.find_next(i)) {
    const auto rank = down[i].count();
    if (!best || rank > best_rank) {
      best = static_cast<ElementId>(i);
      best_rank = rank;
    }
  }
  if (best && set.is_subset_of(down[*best])) return best;
  return std::nullopt;
}

BoundTables bound_tables(std::span<const Bitset> down, std::span<const Bitset> up, bool store,
                         Execution exec) {
  if (exec == Execution::serial) return serial_tables(down, store);
  return parallel_tables(down, up, store);
}

}  // namespace hollowlat::kernels
