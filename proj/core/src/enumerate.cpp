#include <array>

#include "itrev/errors.hpp"
#include "itrev/tpo.hpp"

namespace itrev {
namespace {

// Ordered Bell (Fubini) numbers for 0..16 elements.
const std::array<std::uint64_t, kMaxWorlds + 1>& fubini_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxWorlds + 1>, kMaxWorlds + 1> binom{};
    for (int n = 0; n <= kMaxWorlds; ++n) {
      binom[n][0] = 1;
      for (int k = 1; k <= n; ++k) binom[n][k] = binom[n - 1][k - 1] + (k < n ? binom[n - 1][k] : 0);
    }
    std::array<std::uint64_t, kMaxWorlds + 1> f{};
    f[0] = 1;
    for (int n = 1; n <= kMaxWorlds; ++n) {
      for (int k = 1; k <= n; ++k) f[n] += binom[n][k] * f[n - k];
    }
    return f;
  }();
  return table;
}

std::uint64_t fubini(int k) { return fubini_table()[static_cast<std::size_t>(k)]; }

// Next nonempty submask of `set` after `sub` in increasing order; 0 when done.
constexpr std::uint32_t next_submask(std::uint32_t sub, std::uint32_t set) { return (sub - set) & set; }

void check_atoms(int n_atoms) {
  if (n_atoms < 1 || n_atoms > kMaxAtoms) throw ScopeError("atom count out of range");
}

bool visit_rest(TpoBuilder builder, std::uint32_t remaining,
                const std::function<bool(const Tpo&)>& visit) {
  for (std::uint32_t s = next_submask(0, remaining); s != 0; s = next_submask(s, remaining)) {
    TpoBuilder next = builder;
    next.push(WorldSet(s));
    const std::uint32_t rest = remaining & ~s;
    if (rest == 0) {
      if (!visit(next.finish_unchecked())) return false;
    } else if (!visit_rest(next, rest, visit)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::uint64_t tpo_count(int n_atoms) {
  check_atoms(n_atoms);
  return fubini(world_count(n_atoms));
}

void for_each_tpo(int n_atoms, const std::function<bool(const Tpo&)>& visit) {
  check_atoms(n_atoms);
  visit_rest(TpoBuilder(n_atoms), WorldSet::universe(n_atoms).bits(), visit);
}

std::vector<Tpo> all_tpos(int n_atoms) {
  check_atoms(n_atoms);
  if (n_atoms > 3) throw ScopeError("materialised enumeration is limited to 3 atoms");
  std::vector<Tpo> out;
  out.reserve(static_cast<std::size_t>(tpo_count(n_atoms)));
  for_each_tpo(n_atoms, [&](const Tpo& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

Tpo tpo_at(int n_atoms, std::uint64_t index) {
  check_atoms(n_atoms);
  if (index >= tpo_count(n_atoms)) throw ScopeError("Tpo index out of range");
  TpoBuilder builder(n_atoms);
  std::uint32_t remaining = WorldSet::universe(n_atoms).bits();
  while (remaining != 0) {
    const int k = std::popcount(remaining);
    for (std::uint32_t s = next_submask(0, remaining);; s = next_submask(s, remaining)) {
      const std::uint64_t completions = fubini(k - std::popcount(s));
      if (index < completions) {
        builder.push(WorldSet(s));
        remaining &= ~s;
        break;
      }
      index -= completions;
    }
  }
  return builder.finish_unchecked();
}

std::uint64_t tpo_index(const Tpo& t) {
  std::uint64_t index = 0;
  std::uint32_t remaining = t.universe().bits();
  for (WorldSet cell : t.cells()) {
    const int k = std::popcount(remaining);
    for (std::uint32_t s = next_submask(0, remaining); s != cell.bits(); s = next_submask(s, remaining)) {
      index += fubini(k - std::popcount(s));
    }
    remaining &= ~cell.bits();
  }
  return index;
}

}  // namespace itrev
