#pragma once

// Iterated revision, TeamQueue contraction, iterated expansion and the
// contract-then-revise composition.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "itrev/lang.hpp"
#include "itrev/tpo.hpp"

namespace itrev {

enum class RevisionKind { Natural, Restrained, Lexicographic };

/// A revision operator given extensionally: one posterior per (prior Tpo,
/// consistent input proposition). Keyed by the prior's enumeration index, so
/// equal priors always get equal posteriors.
class TabularRevision {
 public:
  /// `posteriors[tpo_index(prior) * 2^(2^n) + input.bits()]`; entries for the
  /// empty input are ignored.
  TabularRevision(int n_atoms, std::vector<Tpo> posteriors, std::string label);

  int n_atoms() const { return n_atoms_; }
  const std::string& label() const { return label_; }
  const Tpo& lookup(const Tpo& prior, WorldSet input) const;

 private:
  int n_atoms_;
  std::vector<Tpo> posteriors_;
  std::string label_;
};

class RevisionMethod {
 public:
  RevisionMethod(RevisionKind kind) : impl_(kind) {}  // NOLINT(google-explicit-constructor)
  explicit RevisionMethod(std::shared_ptr<const TabularRevision> table) : impl_(std::move(table)) {}

  static RevisionMethod natural() { return RevisionKind::Natural; }
  static RevisionMethod restrained() { return RevisionKind::Restrained; }
  static RevisionMethod lexicographic() { return RevisionKind::Lexicographic; }

  bool is_tabular() const { return std::holds_alternative<std::shared_ptr<const TabularRevision>>(impl_); }
  std::optional<RevisionKind> kind() const;
  const TabularRevision* table() const;

  /// `natural`, `restrained`, `lexicographic`, or the table's label.
  std::string name() const;

 private:
  std::variant<RevisionKind, std::shared_ptr<const TabularRevision>> impl_;
};

/// Each contraction is the TeamQueue merge of the prior with the prior revised
/// by the negated input under base(method).
enum class ContractionMethod { Natural, StqRestrained, StqLex };

RevisionKind base(ContractionMethod m);

std::string_view to_string(RevisionKind k);
std::string_view to_string(ContractionMethod m);
/// `natural`, `restrained`, `lexicographic`.
std::optional<RevisionKind> parse_revision_kind(std::string_view name);
/// `contract-natural`, `contract-stq-restrained`, `contract-stq-lex`.
std::optional<ContractionMethod> parse_contraction_method(std::string_view name);

inline constexpr RevisionKind kRevisionKinds[] = {RevisionKind::Natural, RevisionKind::Restrained,
                                                  RevisionKind::Lexicographic};
inline constexpr ContractionMethod kContractionMethods[] = {
    ContractionMethod::Natural, ContractionMethod::StqRestrained, ContractionMethod::StqLex};

/// Revision by a consistent input. Throws InconsistentInputError for ∅.
Tpo revise(const Tpo& t, WorldSet input, const RevisionMethod& m);
Tpo revise(const Tpo& t, const Formula& input, const RevisionMethod& m);

/// TeamQueue merge: each next cell is the union of the two orders' minimal
/// remaining worlds.
Tpo stq_merge(const Tpo& t1, const Tpo& t2);

/// Contraction by `input`. Contraction by a tautology returns `t`.
Tpo contract(const Tpo& t, WorldSet input, ContractionMethod m);
Tpo contract(const Tpo& t, const Formula& input, ContractionMethod m);
/// As above; from the absurd state every contraction yields the flat order
/// over `n_atoms` atoms.
State contract(const State& s, WorldSet input, ContractionMethod m, int n_atoms);

/// Iterated expansion: revision when the input is consistent with the current
/// beliefs, the absurd state otherwise. Throws AbsurdStateError when `s` is
/// absurd and InconsistentInputError for ∅.
State expand(const State& s, WorldSet input, const RevisionMethod& m);
State expand(const State& s, const Formula& input, const RevisionMethod& m);

/// (t − ¬A) ∗ A.
Tpo nli_revise(const Tpo& t, WorldSet input, ContractionMethod c, const RevisionMethod& r);
Tpo nli_revise(const Tpo& t, const Formula& input, ContractionMethod c, const RevisionMethod& r);

/// Whether `posterior` is an admissible result of revising `prior` by
/// `input` under Success and the four semantic Darwiche-Pearl postulates.
bool dp_admissible(const Tpo& prior, WorldSet input, const Tpo& posterior);

/// Every admissible posterior for each (prior, input), shared per atom count.
/// Index as TabularRevision; n_atoms at most 2.
const std::vector<std::vector<std::uint32_t>>& dp_admissible_table(int n_atoms);

/// For each (prior, consistent input), a posterior drawn uniformly (seeded)
/// from the dp_admissible ones. n_atoms at most 2.
RevisionMethod make_random_dp_operator(std::uint64_t seed, int n_atoms);

/// For each prior, one of natural/restrained/lexicographic drawn at random
/// (seeded) and used for every input. n_atoms at most 2.
RevisionMethod make_random_per_state_operator(std::uint64_t seed, int n_atoms);

}  // namespace itrev
