#include "itrev/operators.hpp"

#include <random>

#include "itrev/errors.hpp"

namespace itrev {

TabularRevision::TabularRevision(int n_atoms, std::vector<Tpo> posteriors, std::string label)
    : n_atoms_(n_atoms), posteriors_(std::move(posteriors)), label_(std::move(label)) {
  if (n_atoms < 1 || n_atoms > 2) throw ScopeError("tabular operators support at most 2 atoms");
  const std::uint64_t expected = tpo_count(n_atoms) * (std::uint64_t{WorldSet::universe(n_atoms).bits()} + 1);
  if (posteriors_.size() != expected) throw ScopeError("tabular operator is not total");
}

const Tpo& TabularRevision::lookup(const Tpo& prior, WorldSet input) const {
  if (prior.n_atoms() != n_atoms_) throw ScopeError("tabular operator applied at the wrong atom count");
  const std::uint64_t width = std::uint64_t{WorldSet::universe(n_atoms_).bits()} + 1;
  return posteriors_[static_cast<std::size_t>(tpo_index(prior) * width + input.bits())];
}

std::optional<RevisionKind> RevisionMethod::kind() const {
  if (const auto* k = std::get_if<RevisionKind>(&impl_)) return *k;
  return std::nullopt;
}

const TabularRevision* RevisionMethod::table() const {
  if (const auto* t = std::get_if<std::shared_ptr<const TabularRevision>>(&impl_)) return t->get();
  return nullptr;
}

std::string RevisionMethod::name() const {
  if (auto k = kind()) return std::string(to_string(*k));
  return table()->label();
}

RevisionKind base(ContractionMethod m) {
  switch (m) {
    case ContractionMethod::Natural: return RevisionKind::Natural;
    case ContractionMethod::StqRestrained: return RevisionKind::Restrained;
    case ContractionMethod::StqLex: return RevisionKind::Lexicographic;
  }
  return RevisionKind::Natural;
}

std::string_view to_string(RevisionKind k) {
  switch (k) {
    case RevisionKind::Natural: return "natural";
    case RevisionKind::Restrained: return "restrained";
    case RevisionKind::Lexicographic: return "lexicographic";
  }
  return {};
}

std::string_view to_string(ContractionMethod m) {
  switch (m) {
    case ContractionMethod::Natural: return "contract-natural";
    case ContractionMethod::StqRestrained: return "contract-stq-restrained";
    case ContractionMethod::StqLex: return "contract-stq-lex";
  }
  return {};
}

std::optional<RevisionKind> parse_revision_kind(std::string_view name) {
  for (RevisionKind k : kRevisionKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<ContractionMethod> parse_contraction_method(std::string_view name) {
  for (ContractionMethod m : kContractionMethods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

namespace {

WorldSet consistent_input(const Tpo& t, WorldSet input) {
  input &= t.universe();
  if (input.empty()) throw InconsistentInputError("cannot revise by an inconsistent input");
  return input;
}

Tpo revise_natural(const Tpo& t, WorldSet a) {
  const WorldSet best = min_worlds(t, a);
  TpoBuilder b(t.n_atoms());
  b.push(best);
  for (WorldSet c : t.cells()) b.push(c - best);
  return b.finish_unchecked();
}

Tpo revise_restrained(const Tpo& t, WorldSet a) {
  const WorldSet best = min_worlds(t, a);
  TpoBuilder b(t.n_atoms());
  b.push(best);
  for (WorldSet c : t.cells()) {
    const WorldSet rest = c - best;
    b.push(rest & a);
    b.push(rest - a);
  }
  return b.finish_unchecked();
}

Tpo revise_lexicographic(const Tpo& t, WorldSet a) {
  TpoBuilder b(t.n_atoms());
  for (WorldSet c : t.cells()) b.push(c & a);
  for (WorldSet c : t.cells()) b.push(c - a);
  return b.finish_unchecked();
}

}  // namespace

Tpo revise(const Tpo& t, WorldSet input, const RevisionMethod& m) {
  const WorldSet a = consistent_input(t, input);
  if (const TabularRevision* table = m.table()) return table->lookup(t, a);
  switch (*m.kind()) {
    case RevisionKind::Natural: return revise_natural(t, a);
    case RevisionKind::Restrained: return revise_restrained(t, a);
    case RevisionKind::Lexicographic: return revise_lexicographic(t, a);
  }
  return t;
}

Tpo revise(const Tpo& t, const Formula& input, const RevisionMethod& m) {
  return revise(t, models(input, t.n_atoms()), m);
}

Tpo stq_merge(const Tpo& t1, const Tpo& t2) {
  if (t1.n_atoms() != t2.n_atoms()) throw ScopeError("merging orders over different atom counts");
  TpoBuilder b(t1.n_atoms());
  WorldSet remaining = t1.universe();
  while (!remaining.empty()) {
    const WorldSet next = min_worlds(t1, remaining) | min_worlds(t2, remaining);
    b.push(next);
    remaining -= next;
  }
  return b.finish_unchecked();
}

Tpo contract(const Tpo& t, WorldSet input, ContractionMethod m) {
  input &= t.universe();
  if (input == t.universe()) return t;
  // ¬input is consistent here, so the revision below is always defined
  return stq_merge(t, revise(t, t.universe() - input, base(m)));
}

Tpo contract(const Tpo& t, const Formula& input, ContractionMethod m) {
  return contract(t, models(input, t.n_atoms()), m);
}

State contract(const State& s, WorldSet input, ContractionMethod m, int n_atoms) {
  if (const Tpo* t = std::get_if<Tpo>(&s)) return contract(*t, input, m);
  return Tpo::flat(n_atoms);
}

State expand(const State& s, WorldSet input, const RevisionMethod& m) {
  const Tpo* t = std::get_if<Tpo>(&s);
  if (t == nullptr) throw AbsurdStateError("expansion of the absurd state is undefined");
  const WorldSet a = consistent_input(*t, input);
  if (!t->first_cell().intersects(a)) return AbsurdState{};
  return revise(*t, a, m);
}

State expand(const State& s, const Formula& input, const RevisionMethod& m) {
  const Tpo* t = std::get_if<Tpo>(&s);
  if (t == nullptr) throw AbsurdStateError("expansion of the absurd state is undefined");
  return expand(s, models(input, t->n_atoms()), m);
}

Tpo nli_revise(const Tpo& t, WorldSet input, ContractionMethod c, const RevisionMethod& r) {
  const WorldSet a = consistent_input(t, input);
  return revise(contract(t, t.universe() - a, c), a, r);
}

Tpo nli_revise(const Tpo& t, const Formula& input, ContractionMethod c, const RevisionMethod& r) {
  return nli_revise(t, models(input, t.n_atoms()), c, r);
}

bool dp_admissible(const Tpo& prior, WorldSet input, const Tpo& posterior) {
  if (posterior.first_cell() != min_worlds(prior, input)) return false;
  const int n = prior.n_worlds();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const World x{static_cast<std::uint8_t>(i)};
      const World y{static_cast<std::uint8_t>(j)};
      const bool xa = input.contains(x);
      const bool ya = input.contains(y);
      if (xa == ya) {
        if (prior.leq(x, y) != posterior.leq(x, y)) return false;
      } else if (xa) {
        if (prior.less(x, y) && !posterior.less(x, y)) return false;
        if (prior.leq(x, y) && !posterior.leq(x, y)) return false;
      }
    }
  }
  return true;
}

namespace {

void check_tabular_scope(int n_atoms) {
  if (n_atoms < 1 || n_atoms > 2) throw ScopeError("random operators support 1 or 2 atoms");
}

std::vector<std::vector<std::uint32_t>> build_admissible(int n_atoms) {
  const auto tpos = all_tpos(n_atoms);
  const std::uint32_t full = WorldSet::universe(n_atoms).bits();
  std::vector<std::vector<std::uint32_t>> table(tpos.size() * (full + 1));
  for (std::size_t i = 0; i < tpos.size(); ++i) {
    for (std::uint32_t a = 1; a <= full; ++a) {
      auto& slot = table[i * (full + 1) + a];
      for (std::size_t j = 0; j < tpos.size(); ++j) {
        if (dp_admissible(tpos[i], WorldSet(a), tpos[j])) slot.push_back(static_cast<std::uint32_t>(j));
      }
    }
  }
  return table;
}

}  // namespace

const std::vector<std::vector<std::uint32_t>>& dp_admissible_table(int n_atoms) {
  check_tabular_scope(n_atoms);
  static const auto one = build_admissible(1);
  if (n_atoms == 1) return one;
  static const auto two = build_admissible(2);
  return two;
}

RevisionMethod make_random_dp_operator(std::uint64_t seed, int n_atoms) {
  check_tabular_scope(n_atoms);
  const auto tpos = all_tpos(n_atoms);
  const auto& admissible = dp_admissible_table(n_atoms);
  const std::uint32_t full = WorldSet::universe(n_atoms).bits();
  std::mt19937_64 rng(seed);
  std::vector<Tpo> posteriors;
  posteriors.reserve(admissible.size());
  for (std::size_t i = 0; i < tpos.size(); ++i) {
    posteriors.push_back(tpos[i]);  // unused slot for the empty input
    for (std::uint32_t a = 1; a <= full; ++a) {
      const auto& choices = admissible[i * (full + 1) + a];
      std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
      posteriors.push_back(tpos[choices[pick(rng)]]);
    }
  }
  return RevisionMethod(std::make_shared<const TabularRevision>(
      n_atoms, std::move(posteriors), "random-dp:" + std::to_string(seed)));
}

RevisionMethod make_random_per_state_operator(std::uint64_t seed, int n_atoms) {
  check_tabular_scope(n_atoms);
  const auto tpos = all_tpos(n_atoms);
  const std::uint32_t full = WorldSet::universe(n_atoms).bits();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<Tpo> posteriors;
  posteriors.reserve(tpos.size() * (full + 1));
  for (const Tpo& t : tpos) {
    const RevisionKind k = kRevisionKinds[pick(rng)];
    posteriors.push_back(t);
    for (std::uint32_t a = 1; a <= full; ++a) posteriors.push_back(revise(t, WorldSet(a), k));
  }
  return RevisionMethod(std::make_shared<const TabularRevision>(
      n_atoms, std::move(posteriors), "random-per-state:" + std::to_string(seed)));
}

}  // namespace itrev
