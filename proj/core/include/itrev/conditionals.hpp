#pragma once

// Satisfaction of mixed sets by total preorders, and rational closure.

#include <optional>
#include <string_view>
#include <vector>

#include "itrev/lang.hpp"
#include "itrev/tpo.hpp"

namespace itrev {

/// What a mixed set demands of a Tpo, precomputed: for each antecedent the
/// intersection of its consequents, and the intersection of the plain part.
class Requirements {
 public:
  explicit Requirements(const MixedSet& delta);

  bool satisfied_by(const Tpo& t) const;

 private:
  int n_atoms_;
  WorldSet plain_;
  std::vector<std::pair<WorldSet, WorldSet>> conds_;  // antecedent, required superset of its minimum
};

/// t ⊨ Δ: every plain sentence is believed and every conditional passes the
/// Ramsey test.
bool satisfies(const Tpo& t, const MixedSet& delta);

struct ClosureResult {
  Tpo tpo;
  MixedSet conditional_set;
};

/// The ⊒-greatest Tpo satisfying Δ, by enumerating every Tpo. n_atoms at most
/// 3. Throws UnsatisfiableError when nothing satisfies Δ and NoMaximumError
/// when the satisfiers have no ⊒-greatest element.
ClosureResult rational_closure(const MixedSet& delta);

/// Closed form for Δ = conditional_set(t) ∪ {A}: the natural revision of t by
/// A. Requires A to be consistent with the beliefs of t (otherwise that Δ is
/// unsatisfiable); throws InconsistentInputError.
Tpo rational_closure_fast(const Tpo& t, WorldSet a);

/// Whether t respects the lower bound set by `base` and the input `a`: t
/// believes `a` and keeps every strict preference of `base`. For consistent
/// base beliefs and input this is satisfaction of conditional_set(base) ∪ {a}.
bool respects_lower_bound(const Tpo& base, WorldSet a, const Tpo& t);

/// Whether Δ is the conditional set of some Tpo. n_atoms at most 3.
bool is_rational(const MixedSet& delta);

/// The Tpo whose conditional set has exactly the conditionals of Δ, if any.
/// The plain part of Δ is ignored. n_atoms at most 3.
std::optional<Tpo> rational_base(const MixedSet& delta);

/// When Δ has the conditionals of some Tpo t and its plain part is
/// consistent with the beliefs of t, Δ is satisfied by the same orders as
/// conditional_set(t) ∪ {A} for A the conjunction of the plain part, and its
/// closure is rational_closure_fast(t, A). Otherwise nullopt.
std::optional<Tpo> closure_fast_path(const MixedSet& delta);

/// One entry per line; `#` starts a comment, blank lines are skipped. Lines
/// containing `=>` are conditionals, the others plain formulas. Parse errors
/// carry the offset within the whole text.
MixedSet parse_mixed_set(std::string_view text, const Signature& sig);

}  // namespace itrev
