#include "hollowlat/module.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "hollowlat/error.hpp"

namespace hollowlat {

std::size_t default_module_bound() {
  if (const char* env = std::getenv("HOLLOWLAT_BOUND")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultModuleBound;
}

Ring::Ring(std::uint32_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw Error(ErrorKind::ValidationError, "ring modulus must be at least 2");
  for (std::uint32_t d = 1; d <= modulus; ++d) {
    if (modulus % d == 0) divisors_.push_back(d);
  }
}

Ideal ideal_sum(Ideal a, Ideal b) { return Ideal{std::gcd(a.generator, b.generator)}; }

Ideal ideal_intersection(const Ring& ring, Ideal a, Ideal b) {
  return Ideal{std::gcd(std::lcm(a.generator, b.generator), ring.modulus())};
}

std::string ideal_name(const Ring& ring, Ideal ideal) {
  if (ideal.generator == ring.modulus()) return "(0)";
  return "(" + std::to_string(ideal.generator) + ")";
}

std::string ideal_set_name(const Ring& ring, std::span<const Ideal> ideals) {
  std::string out = "{";
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (i) out += ',';
    out += ideal_name(ring, ideals[i]);
  }
  return out + "}";
}

std::vector<Ideal> minimal_ideals(std::span<const Ideal> ideals) {
  std::vector<Ideal> out;
  for (const auto& i : ideals) {
    const bool minimal = std::none_of(ideals.begin(), ideals.end(),
                                      [&](const Ideal& j) { return j != i && ideal_contains(i, j); });
    if (minimal && std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteModule::FiniteModule(Ring ring, std::vector<std::uint32_t> factors)
    : ring_(std::move(ring)), factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorKind::ValidationError, "module needs at least one factor");
  for (auto d : factors_) {
    if (d < 2 || ring_.modulus() % d != 0) {
      throw Error(ErrorKind::ValidationError,
                  "factor " + std::to_string(d) + " does not divide " + std::to_string(ring_.modulus()));
    }
    order_ *= d;
    if (order_ > (std::size_t{1} << 26)) throw Error(ErrorKind::BoundExceeded, "module order too large");
  }
  coords_.resize(order_ * rank());
  std::vector<std::uint32_t> c(rank(), 0);
  for (std::size_t e = 0; e < order_; ++e) {
    std::copy(c.begin(), c.end(), coords_.begin() + static_cast<std::ptrdiff_t>(e * rank()));
    for (std::size_t i = rank(); i-- > 0;) {
      if (++c[i] < factors_[i]) break;
      c[i] = 0;
    }
  }
}

Element FiniteModule::from_coordinates(std::span<const std::uint32_t> coords) const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < rank(); ++i) e = e * factors_[i] + coords[i] % factors_[i];
  return static_cast<Element>(e);
}

Element FiniteModule::add(Element a, Element b) const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    e = e * factors_[i] + (coordinate(a, i) + coordinate(b, i)) % factors_[i];
  }
  return static_cast<Element>(e);
}

Element FiniteModule::negate(Element a) const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < rank(); ++i) e = e * factors_[i] + (factors_[i] - coordinate(a, i)) % factors_[i];
  return static_cast<Element>(e);
}

Element FiniteModule::scale(std::uint64_t r, Element a) const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    e = e * factors_[i] + static_cast<std::size_t>((r % factors_[i]) * coordinate(a, i) % factors_[i]);
  }
  return static_cast<Element>(e);
}

std::uint32_t FiniteModule::element_order(Element a) const {
  std::uint32_t order = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto d = factors_[i];
    order = std::lcm(order, d / std::gcd(d, coordinate(a, i)));
  }
  return order;
}

std::string FiniteModule::element_name(Element e) const {
  if (rank() == 1) return std::to_string(coordinate(e, 0));
  std::string out = "(";
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(coordinate(e, i));
  }
  return out + ")";
}

std::string FiniteModule::description() const {
  std::string out = "Z/" + std::to_string(ring_.modulus()) + " module";
  for (auto d : factors_) out += " " + std::to_string(d);
  return out;
}

std::vector<Element> Submodule::elements() const {
  std::vector<Element> out;
  out.reserve(cardinality_);
  for (auto i = members_.find_first(); i != Bitset::npos; i = members_.find_next(i)) {
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

bool canonical_less(const Submodule& a, const Submodule& b) {
  if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
  auto i = a.members().find_first();
  auto j = b.members().find_first();
  while (i != Bitset::npos && j != Bitset::npos) {
    if (i != j) return i < j;
    i = a.members().find_next(i);
    j = b.members().find_next(j);
  }
  return false;
}

Submodule zero_submodule(const FiniteModule& module) {
  Bitset bits(module.order());
  bits.set(0);
  return Submodule(std::move(bits));
}

Submodule whole_module(const FiniteModule& module) {
  Bitset bits(module.order());
  bits.set();
  return Submodule(std::move(bits));
}

namespace {

// S + <g>: union of the cosets S + k·g until k·g falls back into S.
void add_cyclic(const FiniteModule& module, Bitset& members, Element g) {
  const Bitset base = members;
  Element shift = g;
  while (!base.test(shift)) {
    for (auto a = base.find_first(); a != Bitset::npos; a = base.find_next(a)) {
      members.set(module.add(static_cast<Element>(a), shift));
    }
    shift = module.add(shift, g);
  }
}

}  // namespace

Submodule span(const FiniteModule& module, std::span<const Element> generators) {
  Bitset members(module.order());
  members.set(0);
  for (auto g : generators) {
    if (g >= module.order()) throw Error(ErrorKind::ValidationError, "generator outside the module");
    if (!members.test(g)) add_cyclic(module, members, g);
  }
  return Submodule(std::move(members));
}

Submodule sum(const FiniteModule& module, const Submodule& a, const Submodule& b) {
  Bitset members = a.members();
  for (auto g : generators(module, b)) {
    if (!members.test(g)) add_cyclic(module, members, g);
  }
  return Submodule(std::move(members));
}

Submodule intersect(const Submodule& a, const Submodule& b) { return Submodule(a.members() & b.members()); }

Submodule ideal_apply(const FiniteModule& module, Ideal ideal, const Submodule& n) {
  Bitset members(module.order());
  for (auto x = n.members().find_first(); x != Bitset::npos; x = n.members().find_next(x)) {
    members.set(module.scale(ideal.generator, static_cast<Element>(x)));
  }
  // {d·x : x ∈ N} is already closed under addition.
  return Submodule(std::move(members));
}

Ideal annihilator(const FiniteModule& module, const Submodule& n) {
  std::uint32_t exponent = 1;
  for (auto x = n.members().find_first(); x != Bitset::npos; x = n.members().find_next(x)) {
    exponent = std::lcm(exponent, module.element_order(static_cast<Element>(x)));
  }
  return Ideal{exponent};
}

Submodule annihilated_by(const FiniteModule& module, Ideal ideal) {
  Bitset members(module.order());
  for (Element m = 0; m < module.order(); ++m) {
    if (module.scale(ideal.generator, m) == 0) members.set(m);
  }
  return Submodule(std::move(members));
}

std::vector<Element> generators(const FiniteModule& module, const Submodule& n) {
  std::vector<Element> candidates = n.elements();
  std::stable_sort(candidates.begin(), candidates.end(), [&](Element a, Element b) {
    return module.element_order(a) > module.element_order(b);
  });
  std::vector<Element> gens;
  Bitset current(module.order());
  current.set(0);
  for (auto g : candidates) {
    if (current.test(g)) continue;
    gens.push_back(g);
    add_cyclic(module, current, g);
    if (current == n.members()) break;
  }
  return gens;
}

std::string submodule_name(const FiniteModule& module, const Submodule& n) {
  if (n.is_zero()) return "(0)";
  if (module.rank() == 1) {
    return "(" + std::to_string(module.factors()[0] / n.cardinality()) + ")";
  }
  std::string out = "<";
  const auto gens = generators(module, n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += module.element_name(gens[i]);
  }
  return out + ">";
}

std::vector<Submodule> enumerate_submodules(const FiniteModule& module, std::size_t bound) {
  if (module.order() > bound) {
    throw Error(ErrorKind::BoundExceeded, "module order " + std::to_string(module.order()) +
                                              " exceeds bound " + std::to_string(bound));
  }
  // Cyclic submodules, one generator each.
  std::map<Bitset, Element> cyclic;
  for (Element g = 0; g < module.order(); ++g) {
    const Element one[] = {g};
    cyclic.emplace(span(module, one).members(), g);
  }
  std::map<Bitset, bool> seen;
  std::vector<Bitset> queue;
  for (const auto& [members, g] : cyclic) {
    if (seen.emplace(members, true).second) queue.push_back(members);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& [members, g] : cyclic) {
      if (members.is_subset_of(queue[head])) continue;
      Bitset next = queue[head];
      add_cyclic(module, next, g);
      if (seen.emplace(next, true).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Submodule> out;
  out.reserve(queue.size());
  for (auto& members : queue) out.emplace_back(std::move(members));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

QuotientModule::QuotientModule(FiniteModule module, Submodule kernel)
    : module_(std::move(module)), kernel_(std::move(kernel)), coset_(module_.order(), 0) {
  std::vector<bool> assigned(module_.order(), false);
  const auto members = kernel_.elements();
  for (Element e = 0; e < module_.order(); ++e) {
    if (assigned[e]) continue;
    const std::size_t id = representatives_.size();
    representatives_.push_back(e);
    for (auto k : members) {
      const auto x = module_.add(e, k);
      coset_[x] = id;
      assigned[x] = true;
    }
  }
}

std::size_t QuotientModule::add(std::size_t a, std::size_t b) const {
  return coset_[module_.add(representatives_[a], representatives_[b])];
}

std::size_t QuotientModule::scale(std::uint64_t r, std::size_t a) const {
  return coset_[module_.scale(r, representatives_[a])];
}

std::uint32_t QuotientModule::element_order(std::size_t coset) const {
  std::uint32_t k = 1;
  Element x = representatives_[coset];
  while (!kernel_.contains(x)) {
    x = module_.add(x, representatives_[coset]);
    ++k;
  }
  return k;
}

std::vector<Submodule> QuotientModule::submodules(std::size_t bound) const {
  std::vector<Submodule> out;
  for (auto& s : enumerate_submodules(module_, bound)) {
    if (kernel_.is_subset_of(s)) out.push_back(std::move(s));
  }
  return out;
}

bool QuotientModule::is_small(const Submodule& image, std::size_t bound) const {
  if (!kernel_.is_subset_of(image)) throw Error(ErrorKind::ValidationError, "submodule does not contain the kernel");
  const auto whole = whole_module(module_);
  for (const auto& other : submodules(bound)) {
    if (other != whole && sum(module_, image, other) == whole) return false;
  }
  return true;
}

SubmoduleLattice::SubmoduleLattice(FiniteModule module, std::size_t bound, Execution exec)
    : module_(std::move(module)), subs_(enumerate_submodules(module_, bound)) {
  const std::size_t n = subs_.size();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(subs_[i].members(), i);

  std::vector<Bitset> down(n, Bitset(n));
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a <= b; ++a) {
      if (subs_[a].is_subset_of(subs_[b])) down[b].set(a);
    }
  }
  auto lattice = FiniteLattice::from_down_sets(std::move(down), exec);

  for (auto d : ring().divisors()) ideals_.push_back(Ideal{d});
  std::vector<OrderPair> ideal_order;
  for (std::size_t s = 0; s < ideals_.size(); ++s) {
    for (std::size_t t = 0; t < ideals_.size(); ++t) {
      if (s != t && ideal_contains(ideals_[t], ideals_[s])) ideal_order.emplace_back(id(s), id(t));
    }
  }
  auto poset = FinitePoset::from_pairs(ideals_.size(), ideal_order);

  std::vector<ElementId> table;
  table.reserve(ideals_.size() * n);
  for (const auto& ideal : ideals_) {
    for (const auto& sub : subs_) table.push_back(id(index_of(ideal_apply(module_, ideal, sub))));
  }
  action_.emplace(std::move(lattice), std::move(poset), std::move(table));

  names_.reserve(n);
  for (const auto& sub : subs_) names_.push_back(submodule_name(module_, sub));
}

std::optional<std::size_t> SubmoduleLattice::find(const Submodule& n) const {
  auto it = index_.find(n.members());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubmoduleLattice::index_of(const Submodule& n) const {
  if (auto i = find(n)) return *i;
  throw Error(ErrorKind::ValidationError, "not a submodule of " + module_.description());
}

std::size_t SubmoduleLattice::ideal_position(Ideal ideal) const {
  auto it = std::find(ideals_.begin(), ideals_.end(), ideal);
  if (it == ideals_.end()) throw Error(ErrorKind::ValidationError, "not an ideal of the ring");
  return static_cast<std::size_t>(it - ideals_.begin());
}

Ideal SubmoduleLattice::annihilator(std::size_t n) const { return hollowlat::annihilator(module_, subs_[n]); }

std::string SubmoduleLattice::names(std::span<const std::size_t> indices) const {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += names_[indices[i]];
  }
  return out + "}";
}

}  // namespace hollowlat
