#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hollowlat/execution.hpp"

namespace hollowlat {

/// Stable index of an element within one lattice or poset instance.
using ElementId = std::uint32_t;
using OrderPair = std::pair<ElementId, ElementId>;

/// Reflexive-transitive closure of `pairs` on `size` points, returned as down
/// sets (`down[b][a]` iff a <= b). Throws NotAPartialOrder on a cycle or an
/// out-of-range id.
std::vector<Bitset> close_order(std::size_t size, std::span<const OrderPair> pairs);

/// A finite partial order, stored as down sets.
class FinitePoset {
 public:
  static FinitePoset from_pairs(std::size_t size, std::span<const OrderPair> pairs);
  static FinitePoset chain(std::size_t size);
  static FinitePoset antichain(std::size_t size);

  std::size_t size() const noexcept { return down_.size(); }
  bool leq(ElementId a, ElementId b) const { return down_[b].test(a); }
  FinitePoset dual() const;
  /// Covering pairs (a, b) with a < b and nothing strictly between.
  std::vector<OrderPair> covers() const;

  bool operator==(const FinitePoset&) const = default;

 private:
  explicit FinitePoset(std::vector<Bitset> down) : down_(std::move(down)) {}
  std::vector<Bitset> down_;
};

/// A finite bounded lattice. Immutable after construction; meet and join are
/// tabulated up to kTableLimit elements and computed from down sets above it.
class FiniteLattice {
 public:
  static constexpr std::size_t kTableLimit = 512;

  /// Validates the closure of `leq_pairs` as a bounded lattice.
  /// Errors: NotAPartialOrder, Unbounded, MeetOrJoinMissing.
  static FiniteLattice build(std::size_t size, std::span<const OrderPair> leq_pairs,
                             Execution exec = Execution::parallel);
  /// Same checks, starting from an already closed order given as down sets.
  static FiniteLattice from_down_sets(std::vector<Bitset> down,
                                      Execution exec = Execution::parallel);
  static FiniteLattice chain(std::size_t size);

  std::size_t size() const noexcept { return down_.size(); }
  ElementId bottom() const noexcept { return bottom_; }
  ElementId top() const noexcept { return top_; }

  bool leq(ElementId a, ElementId b) const { return down_[b].test(a); }
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }
  ElementId meet(ElementId a, ElementId b) const;
  ElementId join(ElementId a, ElementId b) const;

  const Bitset& down_set(ElementId x) const { return down_[x]; }
  const Bitset& up_set(ElementId x) const { return up_[x]; }
  std::span<const Bitset> down_sets() const noexcept { return down_; }

  /// Order reversed; bottom and top swap, meets and joins exchange.
  FiniteLattice dual() const;
  std::vector<OrderPair> covers() const;
  bool tabulated() const noexcept { return !meet_.empty(); }

  /// Structural equality: same size and identical order relation.
  bool operator==(const FiniteLattice& other) const { return down_ == other.down_; }

 private:
  FiniteLattice() = default;

  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
};

}  // namespace hollowlat
