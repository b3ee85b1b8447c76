#include "itrev/tpo.hpp"

#include <algorithm>
#include <sstream>

#include "itrev/errors.hpp"

namespace itrev {

Tpo Tpo::build(std::span<const WorldSet> cells, int n_atoms) {
  Tpo t;
  t.n_atoms_ = n_atoms;
  t.n_cells_ = static_cast<int>(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    t.cells_[i] = cells[i];
    for (World w : cells[i]) t.rank_[w.index] = static_cast<std::uint8_t>(i + 1);
  }
  return t;
}

Tpo Tpo::from_partition(std::span<const WorldSet> cells, int n_atoms) {
  if (n_atoms < 1 || n_atoms > kMaxAtoms) throw ScopeError("atom count out of range");
  const WorldSet universe = WorldSet::universe(n_atoms);
  WorldSet seen;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const WorldSet c = cells[i];
    if (c.empty()) throw InvalidPartitionError("cell " + std::to_string(i + 1) + " is empty");
    if (!c.subset_of(universe)) {
      throw InvalidPartitionError("cell " + std::to_string(i + 1) + " contains an unknown world");
    }
    if (c.intersects(seen)) {
      throw InvalidPartitionError("cell " + std::to_string(i + 1) + " overlaps an earlier cell");
    }
    seen |= c;
  }
  if (seen != universe) {
    std::string missing;
    for (World w : universe - seen) missing += (missing.empty() ? "" : " ") + to_string(w, n_atoms);
    throw InvalidPartitionError("cells do not cover W; missing " + missing);
  }
  return build(cells, n_atoms);
}

Tpo Tpo::flat(int n_atoms) {
  const WorldSet all = WorldSet::universe(n_atoms);
  return from_partition(std::span<const WorldSet>(&all, 1), n_atoms);
}

std::uint64_t Tpo::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < n_worlds(); ++i) {
    k |= std::uint64_t{rank_[static_cast<std::size_t>(i)] - 1u} << (4 * i);
  }
  return k;
}

Tpo TpoBuilder::finish() const {
  return Tpo::from_partition(std::span<const WorldSet>(cells_.data(), static_cast<std::size_t>(n_cells_)),
                             n_atoms_);
}

Tpo TpoBuilder::finish_unchecked() const {
  return Tpo::build(std::span<const WorldSet>(cells_.data(), static_cast<std::size_t>(n_cells_)), n_atoms_);
}

std::string to_string(const Tpo& t) {
  std::string out;
  for (int i = 0; i < t.cell_count(); ++i) {
    if (i > 0) out += " | ";
    bool first = true;
    for (World w : t.cell(i)) {
      if (!first) out += ' ';
      out += to_string(w, t.n_atoms());
      first = false;
    }
  }
  return out;
}

namespace {

int infer_width(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = i;
  while (j < text.size() && (text[j] == '0' || text[j] == '1')) ++j;
  if (j == i) throw ParseError("expected a world bit-string", i);
  return static_cast<int>(j - i);
}

}  // namespace

Tpo parse_tpo(std::string_view text) { return parse_tpo(text, infer_width(text)); }

Tpo parse_tpo(std::string_view text, int n_atoms) {
  if (n_atoms < 1 || n_atoms > kMaxAtoms) throw ScopeError("atom count out of range");
  std::vector<WorldSet> cells;
  WorldSet current;
  bool cell_has_world = false;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size() || text[i] == '|') {
      if (!cell_has_world) throw ParseError("empty cell", i);
      cells.push_back(current);
      current = WorldSet();
      cell_has_world = false;
      if (i == text.size()) break;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '|') ++j;
    World w;
    try {
      w = parse_world(text.substr(i, j - i), n_atoms);
    } catch (const ParseError& e) {
      throw ParseError(e.reason(), i + e.offset());
    }
    if (current.contains(w)) throw InvalidPartitionError("world " + to_string(w, n_atoms) + " repeated");
    current.insert(w);
    cell_has_world = true;
    i = j;
  }
  return Tpo::from_partition(cells, n_atoms);
}

std::string to_string(const State& s) {
  if (is_absurd(s)) return "absurd";
  return to_string(std::get<Tpo>(s));
}

State parse_state(std::string_view text, int n_atoms) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  std::size_t e = text.find_last_not_of(" \t\r\n");
  if (b != std::string_view::npos && text.substr(b, e - b + 1) == "absurd") return AbsurdState{};
  return parse_tpo(text, n_atoms);
}

WorldSet min_worlds(const Tpo& t, WorldSet s) {
  s &= t.universe();
  if (s.empty()) throw EmptySetError("cannot minimise over the empty set of worlds");
  for (WorldSet c : t.cells()) {
    if (WorldSet m = c & s; !m.empty()) return m;
  }
  return {};  // unreachable: the cells cover W
}

bool agrees_on(const Tpo& t1, const Tpo& t2, World x, World y) {
  return t1.leq(x, y) == t2.leq(x, y) && t1.leq(y, x) == t2.leq(y, x);
}

InputRelation input_cmp(WorldSet a, World x, World y) {
  const bool xy = input_leq(a, x, y);
  const bool yx = input_leq(a, y, x);
  if (xy && yx) return InputRelation::Tied;
  return xy ? InputRelation::StrictlyBelow : InputRelation::StrictlyAbove;
}

bool inputs_agree_on(WorldSet a, WorldSet b, World x, World y) {
  return input_cmp(a, x, y) == input_cmp(b, x, y);
}

bool flatter_eq(const Tpo& t1, const Tpo& t2) {
  const int m = std::max(t1.cell_count(), t2.cell_count());
  for (int i = 0; i < m; ++i) {
    const WorldSet s = i < t1.cell_count() ? t1.cell(i) : WorldSet();
    const WorldSet u = i < t2.cell_count() ? t2.cell(i) : WorldSet();
    if (s == u) continue;
    return u.subset_of(s);  // s ≠ u, so containment is strict
  }
  return true;
}

Permutation Permutation::identity(int n_worlds) {
  Permutation p;
  p.n_worlds = n_worlds;
  for (int i = 0; i < n_worlds; ++i) p.image[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

WorldSet Permutation::operator()(WorldSet s) const {
  WorldSet out;
  for (World w : s) out.insert((*this)(w));
  return out;
}

Tpo permute(const Tpo& t, const Permutation& pi) {
  TpoBuilder b(t.n_atoms());
  for (WorldSet c : t.cells()) b.push(pi(c));
  return b.finish();
}

bool is_a_preserving_iso(const Tpo& t1, const Tpo& t2, WorldSet a, const Permutation& pi) {
  const int n = t1.n_worlds();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const World x{static_cast<std::uint8_t>(i)};
      const World y{static_cast<std::uint8_t>(j)};
      if (t1.leq(x, y) != t2.leq(pi(x), pi(y))) return false;
      if (input_leq(a, x, y) != input_leq(a, pi(x), pi(y))) return false;
    }
  }
  return true;
}

namespace {

// Extends `partial` with every bijection from the worlds in `from` onto the
// worlds in `to`, recursing over (from, to) block pairs starting at `block`.
void biject_blocks(const std::vector<std::pair<std::vector<World>, std::vector<World>>>& blocks,
                   std::size_t block, Permutation& partial, std::vector<Permutation>& out) {
  if (block == blocks.size()) {
    out.push_back(partial);
    return;
  }
  const auto& [from, to_sorted] = blocks[block];
  std::vector<World> to = to_sorted;
  do {
    for (std::size_t k = 0; k < from.size(); ++k) partial.image[from[k].index] = to[k].index;
    biject_blocks(blocks, block + 1, partial, out);
  } while (std::next_permutation(to.begin(), to.end()));
}

}  // namespace

std::vector<Permutation> enumerate_a_preserving_isos(const Tpo& t1, const Tpo& t2, WorldSet a) {
  if (t1.n_atoms() != t2.n_atoms() || t1.cell_count() != t2.cell_count()) return {};
  const WorldSet universe = t1.universe();
  a &= universe;
  // With both A and ¬A nonempty, ⪯^A has two classes and π must keep them;
  // otherwise ⪯^A is total indifference and imposes nothing.
  const bool split = !a.empty() && a != universe;

  std::vector<std::pair<std::vector<World>, std::vector<World>>> blocks;
  auto add_block = [&](WorldSet from, WorldSet to) {
    if (from.size() != to.size()) return false;
    if (from.empty()) return true;
    blocks.emplace_back(std::vector<World>(from.begin(), from.end()), std::vector<World>(to.begin(), to.end()));
    return true;
  };
  for (int i = 0; i < t1.cell_count(); ++i) {
    const WorldSet c1 = t1.cell(i);
    const WorldSet c2 = t2.cell(i);
    if (split) {
      if (!add_block(c1 & a, c2 & a) || !add_block(c1 - a, c2 - a)) return {};
    } else if (!add_block(c1, c2)) {
      return {};
    }
  }
  std::vector<Permutation> out;
  Permutation partial = Permutation::identity(t1.n_worlds());
  biject_blocks(blocks, 0, partial, out);
  std::sort(out.begin(), out.end(), [](const Permutation& x, const Permutation& y) {
    return x.image < y.image;
  });
  return out;
}

WorldSet beliefs(const Tpo& t) { return t.first_cell(); }

WorldSet beliefs(const State& s) {
  if (is_absurd(s)) return {};
  return beliefs(std::get<Tpo>(s));
}

bool conditional_holds(const Tpo& t, PropConditional c) {
  if ((c.antecedent & t.universe()).empty()) return true;
  return min_worlds(t, c.antecedent).subset_of(c.consequent);
}

bool conditional_holds(const Tpo& t, const Conditional& c, const Signature& sig) {
  return conditional_holds(t, semantics(c, sig));
}

std::vector<WorldSet> minimal_map(const Tpo& t) {
  const std::uint32_t full = t.universe().bits();
  std::vector<WorldSet> out(static_cast<std::size_t>(full) + 1);
  for (std::uint32_t p = 1; p <= full; ++p) out[p] = min_worlds(t, WorldSet(p));
  return out;
}

namespace {

// Calls f(superset) for every superset of `base` within `full`.
template <typename F>
void for_each_superset(std::uint32_t base, std::uint32_t full, F&& f) {
  const std::uint32_t free_bits = full & ~base;
  std::uint32_t extra = 0;
  do {
    f(WorldSet(base | extra));
    extra = (extra - free_bits) & free_bits;
  } while (extra != 0);
}

}  // namespace

MixedSet conditional_set(const Tpo& t) {
  if (t.n_atoms() > 3) throw ScopeError("conditional sets are materialised for at most 3 atoms");
  const std::uint32_t full = t.universe().bits();
  MixedSet out(t.n_atoms());
  for_each_superset(t.first_cell().bits(), full, [&](WorldSet b) { out.add_plain(b); });
  const auto mins = minimal_map(t);
  for (std::uint32_t p = 1; p <= full; ++p) {
    for_each_superset(mins[p].bits(), full, [&](WorldSet b) {
      out.add_conditional(PropConditional{WorldSet(p), b});
    });
  }
  return out;
}

}  // namespace itrev
