#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hollowlat/action.hpp"
#include "hollowlat/execution.hpp"
#include "hollowlat/spectra.hpp"

namespace hollowlat {

inline constexpr std::size_t kDefaultModuleBound = 4096;

/// Module-order bound: HOLLOWLAT_BOUND when set to a positive integer,
/// otherwise kDefaultModuleBound.
std::size_t default_module_bound();

/// The ring Z/nZ. Its ideals are (d) for the divisors d of n.
class Ring {
 public:
  explicit Ring(std::uint32_t modulus);

  std::uint32_t modulus() const noexcept { return modulus_; }
  /// Positive divisors of the modulus, ascending.
  const std::vector<std::uint32_t>& divisors() const noexcept { return divisors_; }

  bool operator==(const Ring& other) const noexcept { return modulus_ == other.modulus_; }

 private:
  std::uint32_t modulus_;
  std::vector<std::uint32_t> divisors_;
};

/// The ideal (d) of Z/nZ, identified by its positive generator d | n.
/// (n) is the zero ideal.
struct Ideal {
  std::uint32_t generator = 1;
  auto operator<=>(const Ideal&) const = default;
};

/// inner ⊆ outer, i.e. outer's generator divides inner's.
inline bool ideal_contains(Ideal outer, Ideal inner) { return inner.generator % outer.generator == 0; }
Ideal ideal_sum(Ideal a, Ideal b);
Ideal ideal_intersection(const Ring& ring, Ideal a, Ideal b);
std::string ideal_name(const Ring& ring, Ideal ideal);
/// "{(2),(3)}", in the given order.
std::string ideal_set_name(const Ring& ring, std::span<const Ideal> ideals);

/// Inclusion-minimal members of `ideals`, sorted by generator.
std::vector<Ideal> minimal_ideals(std::span<const Ideal> ideals);

using Element = std::uint32_t;

/// Z/d_1 ⊕ ... ⊕ Z/d_k over Z/nZ with every d_i | n. Elements are indexed in
/// mixed radix with the first factor most significant; 0 is the zero tuple.
class FiniteModule {
 public:
  /// Throws ValidationError when a factor is < 2 or does not divide n.
  FiniteModule(Ring ring, std::vector<std::uint32_t> factors);
  static FiniteModule cyclic(std::uint32_t n) { return FiniteModule(Ring(n), {n}); }

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<std::uint32_t>& factors() const noexcept { return factors_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t rank() const noexcept { return factors_.size(); }

  std::uint32_t coordinate(Element e, std::size_t i) const { return coords_[e * rank() + i]; }
  Element from_coordinates(std::span<const std::uint32_t> coords) const;

  Element add(Element a, Element b) const;
  Element negate(Element a) const;
  /// r·a for an integer scalar r ≥ 0.
  Element scale(std::uint64_t r, Element a) const;
  /// Additive order of a.
  std::uint32_t element_order(Element a) const;

  /// "7" for a single factor, "(1,0)" otherwise.
  std::string element_name(Element e) const;
  /// "Z/12 module 12" style subject line.
  std::string description() const;

  bool operator==(const FiniteModule& other) const { return ring_ == other.ring_ && factors_ == other.factors_; }

 private:
  Ring ring_;
  std::vector<std::uint32_t> factors_;
  std::size_t order_ = 1;
  std::vector<std::uint32_t> coords_;
};

/// A submodule stored as its member set. Over Z/nZ submodules are exactly the
/// additive subgroups, since scalars act as integer multiples.
class Submodule {
 public:
  explicit Submodule(Bitset members) : members_(std::move(members)), cardinality_(members_.count()) {}

  const Bitset& members() const noexcept { return members_; }
  std::size_t cardinality() const noexcept { return cardinality_; }
  bool contains(Element e) const { return members_.test(e); }
  bool is_subset_of(const Submodule& other) const { return members_.is_subset_of(other.members_); }
  bool is_zero() const noexcept { return cardinality_ == 1; }
  std::vector<Element> elements() const;

  bool operator==(const Submodule& other) const { return members_ == other.members_; }

 private:
  Bitset members_;
  std::size_t cardinality_;
};

/// Canonical order: by cardinality, then by sorted member list.
bool canonical_less(const Submodule& a, const Submodule& b);

Submodule zero_submodule(const FiniteModule& module);
Submodule whole_module(const FiniteModule& module);
/// Least submodule containing `generators` (additive closure).
Submodule span(const FiniteModule& module, std::span<const Element> generators);
Submodule sum(const FiniteModule& module, const Submodule& a, const Submodule& b);
Submodule intersect(const Submodule& a, const Submodule& b);
/// I·N, the span of d·x for x in N where d generates I.
Submodule ideal_apply(const FiniteModule& module, Ideal ideal, const Submodule& n);
/// (d) with d the least positive integer killing N.
Ideal annihilator(const FiniteModule& module, const Submodule& n);
/// (0 :_M I) = {m : I·m = 0}.
Submodule annihilated_by(const FiniteModule& module, Ideal ideal);

/// A short generating list built greedily from elements of largest order.
std::vector<Element> generators(const FiniteModule& module, const Submodule& n);
/// "(d)" for submodules of a single-factor module, "(0)" for zero, otherwise
/// "<g1,g2,...>".
std::string submodule_name(const FiniteModule& module, const Submodule& n);

/// All submodules, canonical order, built by closing the cyclic submodules
/// under sums. Throws BoundExceeded when the module order exceeds `bound`.
std::vector<Submodule> enumerate_submodules(const FiniteModule& module,
                                            std::size_t bound = default_module_bound());

/// M/N as a coset structure with the induced operations.
class QuotientModule {
 public:
  QuotientModule(FiniteModule module, Submodule kernel);

  std::size_t order() const noexcept { return representatives_.size(); }
  std::size_t coset_of(Element e) const { return coset_[e]; }
  Element representative(std::size_t coset) const { return representatives_[coset]; }
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t scale(std::uint64_t r, std::size_t a) const;
  std::uint32_t element_order(std::size_t coset) const;
  const Submodule& kernel() const noexcept { return kernel_; }

  /// Submodules of M/N as preimages in M, i.e. the submodules of M containing N.
  std::vector<Submodule> submodules(std::size_t bound = default_module_bound()) const;
  /// `image`/N is small in M/N. `image` must contain N.
  bool is_small(const Submodule& image, std::size_t bound = default_module_bound()) const;

 private:
  FiniteModule module_;
  Submodule kernel_;
  std::vector<std::size_t> coset_;
  std::vector<Element> representatives_;
};

/// The submodule lattice of M with the action of the ideal poset of Z/nZ.
/// Poset element s is the ideal (divisors[s]); s ≤ t iff (d_s) ⊆ (d_t).
class SubmoduleLattice {
 public:
  explicit SubmoduleLattice(FiniteModule module, std::size_t bound = default_module_bound(),
                            Execution exec = Execution::parallel);

  const FiniteModule& module() const noexcept { return module_; }
  const Ring& ring() const noexcept { return module_.ring(); }
  std::size_t size() const noexcept { return subs_.size(); }
  const Submodule& submodule(std::size_t i) const { return subs_[i]; }
  const std::vector<Submodule>& submodules() const noexcept { return subs_; }
  std::optional<std::size_t> find(const Submodule& n) const;
  std::size_t index_of(const Submodule& n) const;

  const FiniteLattice& lattice() const noexcept { return action_->lattice(); }
  const PosetAction& action() const noexcept { return *action_; }

  std::size_t zero() const noexcept { return 0; }
  std::size_t whole() const noexcept { return subs_.size() - 1; }
  bool leq(std::size_t a, std::size_t b) const { return lattice().leq(id(a), id(b)); }
  std::size_t sum(std::size_t a, std::size_t b) const { return lattice().join(id(a), id(b)); }
  std::size_t meet(std::size_t a, std::size_t b) const { return lattice().meet(id(a), id(b)); }

  const std::vector<Ideal>& ideals() const noexcept { return ideals_; }
  std::size_t ideal_position(Ideal ideal) const;
  /// Index of I·N for the ideal at poset position s.
  std::size_t apply(std::size_t s, std::size_t n) const { return action_->apply(id(s), id(n)); }
  /// Index of I·M.
  std::size_t ideal_image(std::size_t s) const { return action_->unit_image(id(s)); }
  Ideal annihilator(std::size_t n) const;

  std::string name(std::size_t i) const { return names_[i]; }
  const Labels& labels() const noexcept { return names_; }
  std::string names(std::span<const std::size_t> indices) const;

 private:
  static ElementId id(std::size_t i) { return static_cast<ElementId>(i); }

  FiniteModule module_;
  std::vector<Submodule> subs_;
  std::map<Bitset, std::size_t> index_;
  std::vector<Ideal> ideals_;
  std::optional<PosetAction> action_;
  Labels names_;
};

}  // namespace hollowlat
