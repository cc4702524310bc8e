#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hollowlat/lattice.hpp"

namespace hollowlat {

/// A map S × L → L, written s⇀x, that is monotone in s, monotone in x and
/// deflationary (s⇀x ≤ x). The three conditions are checked on construction.
class PosetAction {
 public:
  /// `table[s * |L| + x]` is s⇀x. Throws AxiomViolation.
  PosetAction(FiniteLattice lattice, FinitePoset poset, std::vector<ElementId> table);

  /// s⇀x = x for every s.
  static PosetAction identity(FiniteLattice lattice, FinitePoset poset);

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const FinitePoset& poset() const noexcept { return *poset_; }
  std::size_t acting_size() const noexcept { return poset_->size(); }

  ElementId apply(ElementId s, ElementId x) const { return table_[std::size_t{s} * lattice_->size() + x]; }
  /// s⇀1, the element an action "generates" from the top.
  ElementId unit_image(ElementId s) const { return apply(s, lattice_->top()); }
  const std::vector<ElementId>& table() const noexcept { return table_; }

  bool operator==(const PosetAction& other) const;

 private:
  std::shared_ptr<const FiniteLattice> lattice_;
  std::shared_ptr<const FinitePoset> poset_;
  std::vector<ElementId> table_;
};

/// First violated action axiom, described, or nullopt when all three hold.
std::optional<std::string> find_axiom_violation(const FiniteLattice& lattice, const FinitePoset& poset,
                                                const std::vector<ElementId>& table);

/// Action of the dual poset on the dual lattice: s⇀⁰x = (s⇀1) ∨ x.
PosetAction dual_action(const PosetAction& action);

/// s⇀*x = (s⇀1) ∧ x on the same lattice.
PosetAction star_action(const PosetAction& action);

struct Interval {
  PosetAction action;
  std::vector<ElementId> embedding;  // interval id -> original id
};

/// The lower interval [0, x] with the inherited order and action.
Interval lower_interval(const PosetAction& action, ElementId x);

struct Quotient {
  PosetAction action;
  /// Original id -> quotient id. Elements not above x map to the class of y ∨ x.
  std::vector<ElementId> class_map;
  /// Quotient id -> least original id in the class.
  std::vector<ElementId> representatives;
};

/// Quotient lattice L/x on the classes of {y : y ≥ x} with the action
/// s⇀(y/x) = ((s⇀y) ∨ x)/x. Throws NotALattice if the classes fail to form a
/// lattice compatible with ∧ and ∨ of L.
Quotient quotient(const PosetAction& action, ElementId x);

/// Every x equals s⇀1 for some s.
bool is_multiplication(const PosetAction& action);

/// s⇀(y ∨ z) = (s⇀y) ∨ (s⇀z) for all s, y, z.
bool distributes_over_joins(const PosetAction& action);

}  // namespace hollowlat
