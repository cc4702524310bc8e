#include "hollowlat/action.hpp"

#include <map>
#include <string>

#include "hollowlat/error.hpp"

namespace hollowlat {

std::optional<std::string> find_axiom_violation(const FiniteLattice& lattice, const FinitePoset& poset,
                                                const std::vector<ElementId>& table) {
  const std::size_t n = lattice.size();
  const std::size_t m = poset.size();
  if (table.size() != n * m) return "table has " + std::to_string(table.size()) + " entries";
  auto at = [&](std::size_t s, std::size_t x) { return table[s * n + x]; };
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      if (at(s, x) >= n) return "entry (" + std::to_string(s) + ", " + std::to_string(x) + ") out of range";
    }
  }
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      const auto sx = at(s, x);
      if (!lattice.leq(sx, static_cast<ElementId>(x))) {
        return "A3 fails: s=" + std::to_string(s) + " x=" + std::to_string(x);
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (lattice.leq(static_cast<ElementId>(x), static_cast<ElementId>(y)) && !lattice.leq(sx, at(s, y))) {
          return "A2 fails: s=" + std::to_string(s) + " x=" + std::to_string(x) + " y=" + std::to_string(y);
        }
      }
      for (std::size_t t = 0; t < m; ++t) {
        if (poset.leq(static_cast<ElementId>(s), static_cast<ElementId>(t)) && !lattice.leq(sx, at(t, x))) {
          return "A1 fails: s=" + std::to_string(s) + " t=" + std::to_string(t) + " x=" + std::to_string(x);
        }
      }
    }
  }
  return std::nullopt;
}

PosetAction::PosetAction(FiniteLattice lattice, FinitePoset poset, std::vector<ElementId> table)
    : lattice_(std::make_shared<const FiniteLattice>(std::move(lattice))),
      poset_(std::make_shared<const FinitePoset>(std::move(poset))),
      table_(std::move(table)) {
  if (auto violation = find_axiom_violation(*lattice_, *poset_, table_)) {
    throw Error(ErrorKind::AxiomViolation, *violation);
  }
}

PosetAction PosetAction::identity(FiniteLattice lattice, FinitePoset poset) {
  std::vector<ElementId> table;
  table.reserve(lattice.size() * poset.size());
  for (std::size_t s = 0; s < poset.size(); ++s) {
    for (std::size_t x = 0; x < lattice.size(); ++x) table.push_back(static_cast<ElementId>(x));
  }
  return PosetAction(std::move(lattice), std::move(poset), std::move(table));
}

bool PosetAction::operator==(const PosetAction& other) const {
  return *lattice_ == *other.lattice_ && *poset_ == *other.poset_ && table_ == other.table_;
}

PosetAction dual_action(const PosetAction& action) {
  const auto& lat = action.lattice();
  std::vector<ElementId> table;
  table.reserve(action.table().size());
  for (ElementId s = 0; s < action.acting_size(); ++s) {
    const auto unit = action.unit_image(s);
    for (ElementId x = 0; x < lat.size(); ++x) table.push_back(lat.join(unit, x));
  }
  return PosetAction(lat.dual(), action.poset().dual(), std::move(table));
}

PosetAction star_action(const PosetAction& action) {
  const auto& lat = action.lattice();
  std::vector<ElementId> table;
  table.reserve(action.table().size());
  for (ElementId s = 0; s < action.acting_size(); ++s) {
    const auto unit = action.unit_image(s);
    for (ElementId x = 0; x < lat.size(); ++x) table.push_back(lat.meet(unit, x));
  }
  return PosetAction(lat, action.poset(), std::move(table));
}

Interval lower_interval(const PosetAction& action, ElementId x) {
  const auto& lat = action.lattice();
  std::vector<ElementId> embedding;
  std::vector<ElementId> index_of(lat.size(), 0);
  const auto& below = lat.down_set(x);
  for (auto y = below.find_first(); y != Bitset::npos; y = below.find_next(y)) {
    index_of[y] = static_cast<ElementId>(embedding.size());
    embedding.push_back(static_cast<ElementId>(y));
  }
  const std::size_t k = embedding.size();
  std::vector<Bitset> down(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (lat.leq(embedding[j], embedding[i])) down[i].set(j);
    }
  }
  std::vector<ElementId> table;
  table.reserve(action.acting_size() * k);
  for (ElementId s = 0; s < action.acting_size(); ++s) {
    for (std::size_t i = 0; i < k; ++i) table.push_back(index_of[action.apply(s, embedding[i])]);
  }
  auto sub = FiniteLattice::from_down_sets(std::move(down));
  return Interval{PosetAction(std::move(sub), action.poset(), std::move(table)), std::move(embedding)};
}

Quotient quotient(const PosetAction& action, ElementId x) {
  const auto& lat = action.lattice();
  const std::size_t n = lat.size();

  // D(y) = {y' ∨ x : y' ≤ y}. The relation y ∼ z asks that every y' ≤ y be
  // matched by some z' ≤ z with equal join with x, and conversely; that is
  // D(y) ⊆ D(z) and D(z) ⊆ D(y). The quotient order is D(y) ⊆ D(z).
  std::vector<Bitset> reach(n);
  std::vector<ElementId> above;
  for (ElementId y = 0; y < n; ++y) {
    if (!lat.leq(x, y)) continue;
    above.push_back(y);
    Bitset d(n);
    const auto& below = lat.down_set(y);
    for (auto yp = below.find_first(); yp != Bitset::npos; yp = below.find_next(yp)) {
      d.set(lat.join(static_cast<ElementId>(yp), x));
    }
    reach[y] = std::move(d);
  }

  std::vector<ElementId> representatives;
  std::vector<ElementId> class_of(n, 0);
  for (ElementId y : above) {
    bool found = false;
    for (ElementId c = 0; c < representatives.size(); ++c) {
      if (reach[representatives[c]] == reach[y]) {
        class_of[y] = c;
        found = true;
        break;
      }
    }
    if (!found) {
      class_of[y] = static_cast<ElementId>(representatives.size());
      representatives.push_back(y);
    }
  }

  const std::size_t k = representatives.size();
  std::vector<Bitset> down(k, Bitset(k));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      if (reach[representatives[d]].is_subset_of(reach[representatives[c]])) down[c].set(d);
    }
  }
  auto internal = [](const std::string& what) { return Error(ErrorKind::NotALattice, "quotient: " + what); };

  std::optional<FiniteLattice> qlat;
  try {
    qlat = FiniteLattice::from_down_sets(std::move(down));
  } catch (const Error& e) {
    throw internal(e.what());
  }
  for (ElementId y : above) {
    for (ElementId z : above) {
      if (class_of[lat.meet(y, z)] != qlat->meet(class_of[y], class_of[z]) ||
          class_of[lat.join(y, z)] != qlat->join(class_of[y], class_of[z])) {
        throw internal("meet/join not compatible at " + std::to_string(y) + ", " + std::to_string(z));
      }
    }
  }

  std::vector<ElementId> table(action.acting_size() * k);
  for (ElementId s = 0; s < action.acting_size(); ++s) {
    std::vector<bool> seen(k, false);
    for (ElementId y : above) {
      const auto c = class_of[y];
      const auto image = class_of[lat.join(action.apply(s, y), x)];
      if (!seen[c]) {
        table[std::size_t{s} * k + c] = image;
        seen[c] = true;
      } else if (table[std::size_t{s} * k + c] != image) {
        throw internal("action not well defined on class " + std::to_string(c));
      }
    }
  }

  std::vector<ElementId> class_map(n);
  for (ElementId y = 0; y < n; ++y) class_map[y] = class_of[lat.join(y, x)];
  return Quotient{PosetAction(std::move(*qlat), action.poset(), std::move(table)), std::move(class_map),
                  std::move(representatives)};
}

bool is_multiplication(const PosetAction& action) {
  const auto& lat = action.lattice();
  Bitset hit(lat.size());
  for (ElementId s = 0; s < action.acting_size(); ++s) hit.set(action.unit_image(s));
  return hit.all();
}

bool distributes_over_joins(const PosetAction& action) {
  const auto& lat = action.lattice();
  const auto n = static_cast<ElementId>(lat.size());
  for (ElementId s = 0; s < action.acting_size(); ++s) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = y + 1; z < n; ++z) {
        if (action.apply(s, lat.join(y, z)) != lat.join(action.apply(s, y), action.apply(s, z))) return false;
      }
    }
  }
  return true;
}

}  // namespace hollowlat
