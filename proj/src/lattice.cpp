#include "hollowlat/lattice.hpp"

#include <algorithm>
#include <string>

#include "hollowlat/error.hpp"
#include "hollowlat/kernels.hpp"

namespace hollowlat {
namespace {

std::vector<Bitset> transpose(const std::vector<Bitset>& rel) {
  const std::size_t n = rel.size();
  std::vector<Bitset> out(n, Bitset(n));
  for (std::size_t b = 0; b < n; ++b) {
    for (auto a = rel[b].find_first(); a != Bitset::npos; a = rel[b].find_next(a)) out[a].set(b);
  }
  return out;
}

std::vector<OrderPair> covering_pairs(std::span<const Bitset> down) {
  const auto n = static_cast<ElementId>(down.size());
  std::vector<OrderPair> out;
  for (ElementId b = 0; b < n; ++b) {
    for (auto ai = down[b].find_first(); ai != Bitset::npos; ai = down[b].find_next(ai)) {
      const auto a = static_cast<ElementId>(ai);
      if (a == b) continue;
      bool covered = true;
      for (auto ci = down[b].find_first(); ci != Bitset::npos; ci = down[b].find_next(ci)) {
        const auto c = static_cast<ElementId>(ci);
        if (c != a && c != b && down[c].test(a)) {
          covered = false;
          break;
        }
      }
      if (covered) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Bitset> close_order(std::size_t size, std::span<const OrderPair> pairs) {
  // up[i][j] iff i <= j; Warshall closure on bit rows.
  std::vector<Bitset> up(size, Bitset(size));
  for (std::size_t i = 0; i < size; ++i) up[i].set(i);
  for (const auto& [a, b] : pairs) {
    if (a >= size || b >= size) {
      throw Error(ErrorKind::NotAPartialOrder,
                  "pair (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range");
    }
    up[a].set(b);
  }
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (auto j = up[i].find_next(i); j != Bitset::npos; j = up[i].find_next(j)) {
      if (up[j].test(i)) {
        throw Error(ErrorKind::NotAPartialOrder,
                    "elements " + std::to_string(i) + " and " + std::to_string(j) +
                        " are mutually below each other");
      }
    }
  }
  return transpose(up);
}

FinitePoset FinitePoset::from_pairs(std::size_t size, std::span<const OrderPair> pairs) {
  if (size == 0) throw Error(ErrorKind::NotAPartialOrder, "poset must be non-empty");
  return FinitePoset(close_order(size, pairs));
}

FinitePoset FinitePoset::chain(std::size_t size) {
  std::vector<OrderPair> pairs;
  for (std::size_t i = 1; i < size; ++i) pairs.emplace_back(i - 1, i);
  return from_pairs(size, pairs);
}

FinitePoset FinitePoset::antichain(std::size_t size) { return from_pairs(size, {}); }

FinitePoset FinitePoset::dual() const { return FinitePoset(transpose(down_)); }

std::vector<OrderPair> FinitePoset::covers() const { return covering_pairs(down_); }

FiniteLattice FiniteLattice::build(std::size_t size, std::span<const OrderPair> leq_pairs,
                                   Execution exec) {
  if (size == 0) throw Error(ErrorKind::NotAPartialOrder, "lattice must be non-empty");
  return from_down_sets(close_order(size, leq_pairs), exec);
}

FiniteLattice FiniteLattice::from_down_sets(std::vector<Bitset> down, Execution exec) {
  const std::size_t n = down.size();
  if (n == 0) throw Error(ErrorKind::NotAPartialOrder, "lattice must be non-empty");
  for (std::size_t b = 0; b < n; ++b) {
    if (down[b].size() != n || !down[b].test(b)) {
      throw Error(ErrorKind::NotAPartialOrder, "relation is not reflexive at " + std::to_string(b));
    }
    for (auto a = down[b].find_first(); a != Bitset::npos; a = down[b].find_next(a)) {
      if (a != b && down[a].test(b)) {
        throw Error(ErrorKind::NotAPartialOrder, "antisymmetry fails for " + std::to_string(a) +
                                                     ", " + std::to_string(b));
      }
      if (!down[a].is_subset_of(down[b])) {
        throw Error(ErrorKind::NotAPartialOrder, "transitivity fails below " + std::to_string(b));
      }
    }
  }

  FiniteLattice out;
  out.up_ = transpose(down);
  out.down_ = std::move(down);
  // A finite poset with all pairwise meets and joins is bounded, so the pair
  // check runs first and reports the more specific failure.
  const bool store = n <= kTableLimit;
  auto tables = kernels::bound_tables(out.down_, out.up_, store, exec);
  if (tables.missing) {
    throw Error(ErrorKind::MeetOrJoinMissing, "pair (" + std::to_string(tables.missing->first) + ", " +
                                                  std::to_string(tables.missing->second) +
                                                  ") lacks a unique meet or join");
  }
  bool has_bottom = false;
  bool has_top = false;
  for (std::size_t x = 0; x < n; ++x) {
    if (out.up_[x].all()) {
      out.bottom_ = static_cast<ElementId>(x);
      has_bottom = true;
    }
    if (out.down_[x].all()) {
      out.top_ = static_cast<ElementId>(x);
      has_top = true;
    }
  }
  if (!has_bottom || !has_top) {
    throw Error(ErrorKind::Unbounded, std::string("no ") + (has_bottom ? "top" : "bottom") + " element");
  }
  out.meet_ = std::move(tables.meet);
  out.join_ = std::move(tables.join);
  return out;
}

FiniteLattice FiniteLattice::chain(std::size_t size) {
  std::vector<OrderPair> pairs;
  for (std::size_t i = 1; i < size; ++i) pairs.emplace_back(i - 1, i);
  return build(size, pairs);
}

ElementId FiniteLattice::meet(ElementId a, ElementId b) const {
  if (tabulated()) return meet_[std::size_t{a} * size() + b];
  return *kernels::greatest_of(down_[a] & down_[b], down_);
}

ElementId FiniteLattice::join(ElementId a, ElementId b) const {
  if (tabulated()) return join_[std::size_t{a} * size() + b];
  return *kernels::greatest_of(up_[a] & up_[b], up_);
}

FiniteLattice FiniteLattice::dual() const {
  FiniteLattice out;
  out.down_ = up_;
  out.up_ = down_;
  out.bottom_ = top_;
  out.top_ = bottom_;
  out.meet_ = join_;
  out.join_ = meet_;
  return out;
}

std::vector<OrderPair> FiniteLattice::covers() const { return covering_pairs(down_); }

}  // namespace hollowlat
