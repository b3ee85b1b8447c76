#include "itrev/conditionals.hpp"

#include <map>
#include <optional>
#include <string>

#include "itrev/errors.hpp"
#include "itrev/operators.hpp"

namespace itrev {

Requirements::Requirements(const MixedSet& delta)
    : n_atoms_(delta.n_atoms()), plain_(WorldSet::universe(delta.n_atoms())) {
  for (WorldSet s : delta.plain()) plain_ &= s;
  std::map<WorldSet, WorldSet> by_antecedent;
  const WorldSet universe = WorldSet::universe(n_atoms_);
  for (const PropConditional& c : delta.conds()) {
    const WorldSet p = c.antecedent & universe;
    if (p.empty()) continue;  // holds vacuously
    auto [it, fresh] = by_antecedent.try_emplace(p, universe);
    it->second &= c.consequent;
  }
  conds_.assign(by_antecedent.begin(), by_antecedent.end());
}

bool Requirements::satisfied_by(const Tpo& t) const {
  if (t.n_atoms() != n_atoms_) throw ScopeError("order and set over different atom counts");
  if (!t.first_cell().subset_of(plain_)) return false;
  for (const auto& [p, req] : conds_) {
    if (!min_worlds(t, p).subset_of(req)) return false;
  }
  return true;
}

bool satisfies(const Tpo& t, const MixedSet& delta) { return Requirements(delta).satisfied_by(t); }

ClosureResult rational_closure(const MixedSet& delta) {
  if (delta.n_atoms() > 3) throw ScopeError("rational closure is computed for at most 3 atoms");
  const Requirements req(delta);
  std::optional<Tpo> best;
  for_each_tpo(delta.n_atoms(), [&](const Tpo& t) {
    if (req.satisfied_by(t) && (!best || flatter_eq(t, *best))) best = t;
    return true;
  });
  if (!best) throw UnsatisfiableError("no total preorder satisfies the set");
  bool maximal = true;
  for_each_tpo(delta.n_atoms(), [&](const Tpo& t) {
    if (req.satisfied_by(t) && !flatter_eq(*best, t)) maximal = false;
    return maximal;
  });
  if (!maximal) throw NoMaximumError("the satisfying orders have no flattest element");
  return ClosureResult{*best, conditional_set(*best)};
}

Tpo rational_closure_fast(const Tpo& t, WorldSet a) {
  a &= t.universe();
  if (!t.first_cell().intersects(a)) {
    throw InconsistentInputError("input contradicts the current beliefs; the closure is unsatisfiable");
  }
  return revise(t, a, RevisionKind::Natural);
}

bool respects_lower_bound(const Tpo& base, WorldSet a, const Tpo& t) {
  if (!t.first_cell().subset_of(a)) return false;
  const int n = base.n_worlds();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const World x{static_cast<std::uint8_t>(i)};
      const World y{static_cast<std::uint8_t>(j)};
      if (base.less(x, y) && !t.less(x, y)) return false;
    }
  }
  return true;
}

namespace {

// The order a rational set would have to come from, read off the two-world
// antecedents: a rational set holds P ⇒ B exactly for B ⊇ min(P).
std::optional<Tpo> rational_candidate(const MixedSet& delta) {
  const int n_atoms = delta.n_atoms();
  if (n_atoms > 3) throw ScopeError("rationality is decided for at most 3 atoms");
  std::map<WorldSet, WorldSet> pair_min;
  for (const PropConditional& c : delta.conds()) {
    if (c.antecedent.size() != 2) continue;
    auto [it, fresh] = pair_min.try_emplace(c.antecedent, c.antecedent);
    it->second &= c.consequent;
  }
  auto leq = [&](World x, World y) {
    if (x == y) return true;
    const WorldSet pair = WorldSet::of({x, y});
    auto it = pair_min.find(pair);
    return (it == pair_min.end() ? pair : it->second).contains(x);
  };

  TpoBuilder b(n_atoms);
  WorldSet remaining = WorldSet::universe(n_atoms);
  while (!remaining.empty()) {
    WorldSet cell;
    for (World x : remaining) {
      bool lowest = true;
      for (World y : remaining) lowest = lowest && leq(x, y);
      if (lowest) cell.insert(x);
    }
    if (cell.empty()) return std::nullopt;
    b.push(cell);
    remaining -= cell;
  }
  return b.finish();
}

}  // namespace

bool is_rational(const MixedSet& delta) {
  const auto t = rational_candidate(delta);
  return t && conditional_set(*t) == delta;
}

std::optional<Tpo> rational_base(const MixedSet& delta) {
  auto t = rational_candidate(delta);
  if (!t || conditional_set(*t).conds() != delta.conds()) return std::nullopt;
  return t;
}

std::optional<Tpo> closure_fast_path(const MixedSet& delta) {
  const auto base = rational_base(delta);
  if (!base) return std::nullopt;
  WorldSet plain = base->universe();
  for (WorldSet s : delta.plain()) plain &= s;
  if (!base->first_cell().intersects(plain)) return std::nullopt;
  return rational_closure_fast(*base, plain);
}

MixedSet parse_mixed_set(std::string_view text, const Signature& sig) {
  MixedSet out(sig.size());
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        if (line.find("=>") != std::string_view::npos) {
          out.add(parse_conditional(line, sig), sig);
        } else {
          out.add(parse_formula(line, sig), sig);
        }
      } catch (const UnknownAtomError& e) {
        throw UnknownAtomError(e.atom(), start + e.offset());
      } catch (const ParseError& e) {
        throw ParseError(e.reason(), start + e.offset());
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace itrev
