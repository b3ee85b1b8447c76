#pragma once

// Test-only reference implementations, written from the relation definitions
// rather than from the library's partition code.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "itrev/tpo.hpp"

namespace oracle {

using itrev::Tpo;
using itrev::World;
using itrev::WorldSet;

using Leq = std::function<bool(World, World)>;

inline World w(int i) { return World{static_cast<std::uint8_t>(i)}; }

inline std::vector<World> worlds(int n_atoms) {
  std::vector<World> out;
  for (int i = 0; i < itrev::world_count(n_atoms); ++i) out.push_back(w(i));
  return out;
}

// Cells of a total preorder given as a relation: repeatedly peel off the
// worlds below every remaining world.
inline Tpo from_leq(int n_atoms, const Leq& leq) {
  std::vector<World> rest = worlds(n_atoms);
  std::vector<WorldSet> cells;
  while (!rest.empty()) {
    WorldSet cell;
    for (World x : rest) {
      if (std::all_of(rest.begin(), rest.end(), [&](World y) { return leq(x, y); })) cell.insert(x);
    }
    if (cell.empty()) throw std::logic_error("relation is not a total preorder");
    cells.push_back(cell);
    std::erase_if(rest, [&](World x) { return cell.contains(x); });
  }
  return Tpo::from_partition(cells, n_atoms);
}

inline WorldSet min_of(const Tpo& t, WorldSet s) {
  WorldSet out;
  for (World x : s) {
    bool lowest = true;
    for (World y : s) lowest = lowest && t.leq(x, y);
    if (lowest) out.insert(x);
  }
  return out;
}

inline Tpo natural(const Tpo& t, WorldSet a) {
  const WorldSet m = min_of(t, a);
  return from_leq(t.n_atoms(), [&](World x, World y) {
    return m.contains(x) || (!m.contains(y) && t.leq(x, y));
  });
}

inline Tpo restrained(const Tpo& t, WorldSet a) {
  const WorldSet m = min_of(t, a);
  return from_leq(t.n_atoms(), [&](World x, World y) {
    if (m.contains(x)) return true;
    if (m.contains(y)) return false;
    return t.less(x, y) || (t.tied(x, y) && (a.contains(x) || !a.contains(y)));
  });
}

inline Tpo lexicographic(const Tpo& t, WorldSet a) {
  return from_leq(t.n_atoms(), [&](World x, World y) {
    return (a.contains(x) && !a.contains(y)) || (a.contains(x) == a.contains(y) && t.leq(x, y));
  });
}

// Every ordered partition of W, from rank functions onto an initial segment.
inline std::vector<Tpo> all_orders(int n_atoms) {
  const int nw = itrev::world_count(n_atoms);
  std::vector<Tpo> out;
  std::vector<int> rank(static_cast<std::size_t>(nw), 0);
  std::function<void(int)> go = [&](int i) {
    if (i == nw) {
      const int top = *std::max_element(rank.begin(), rank.end());
      std::vector<WorldSet> cells(static_cast<std::size_t>(top + 1));
      for (int j = 0; j < nw; ++j) cells[static_cast<std::size_t>(rank[static_cast<std::size_t>(j)])].insert(w(j));
      if (std::none_of(cells.begin(), cells.end(), [](WorldSet c) { return c.empty(); })) {
        out.push_back(Tpo::from_partition(cells, n_atoms));
      }
      return;
    }
    for (int r = 0; r < nw; ++r) {
      rank[static_cast<std::size_t>(i)] = r;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

// Ordered Bell numbers: a(m) = sum_k C(m, k) a(m - k).
inline std::uint64_t fubini(int m) {
  std::vector<std::uint64_t> a(static_cast<std::size_t>(m + 1), 0);
  a[0] = 1;
  for (int j = 1; j <= m; ++j) {
    std::uint64_t binom = 1;
    for (int k = 1; k <= j; ++k) {
      binom = binom * static_cast<std::uint64_t>(j - k + 1) / static_cast<std::uint64_t>(k);
      a[static_cast<std::size_t>(j)] += binom * a[static_cast<std::size_t>(j - k)];
    }
  }
  return a[static_cast<std::size_t>(m)];
}

// t1 ⊒ t2 read directly: at the first index where the cells differ, t1's cell
// is a strict superset of t2's.
inline bool flatter_eq(const Tpo& t1, const Tpo& t2) {
  for (int i = 0;; ++i) {
    if (i >= t1.cell_count() || i >= t2.cell_count()) return t1 == t2;
    if (t1.cell(i) == t2.cell(i)) continue;
    return t2.cell(i).subset_of(t1.cell(i)) && t1.cell(i) != t2.cell(i);
  }
}

// A ⇒ B holds in t iff min(t, A) ⊆ B.
inline bool ramsey(const Tpo& t, WorldSet a, WorldSet b) {
  return a.empty() || min_of(t, a).subset_of(b);
}

}  // namespace oracle
