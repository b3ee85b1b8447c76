#pragma once

// Total preorders over W as ordered partitions (lowest cell = most plausible),
// plus the relations and enumerations the belief-change operators are
// defined and checked against.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "itrev/lang.hpp"

namespace itrev {

class Tpo {
 public:
  /// Validates that `cells` are nonempty, pairwise disjoint and cover the
  /// 2^n_atoms worlds. Throws InvalidPartitionError.
  static Tpo from_partition(std::span<const WorldSet> cells, int n_atoms);
  static Tpo from_partition(std::initializer_list<WorldSet> cells, int n_atoms) {
    return from_partition(std::span<const WorldSet>(cells.begin(), cells.size()), n_atoms);
  }
  /// The single-cell order in which all worlds are tied.
  static Tpo flat(int n_atoms);

  int n_atoms() const { return n_atoms_; }
  int n_worlds() const { return world_count(n_atoms_); }
  WorldSet universe() const { return WorldSet::universe(n_atoms_); }

  int cell_count() const { return n_cells_; }
  std::span<const WorldSet> cells() const { return {cells_.data(), static_cast<std::size_t>(n_cells_)}; }
  WorldSet cell(int i) const { return cells_[static_cast<std::size_t>(i)]; }
  WorldSet first_cell() const { return cells_[0]; }

  /// 1-based index of the cell containing `w`.
  int rank(World w) const { return rank_[w.index]; }

  bool leq(World x, World y) const { return rank_[x.index] <= rank_[y.index]; }
  bool less(World x, World y) const { return rank_[x.index] < rank_[y.index]; }
  bool tied(World x, World y) const { return rank_[x.index] == rank_[y.index]; }

  /// Packs the rank vector, 4 bits per world; equal keys iff equal orders.
  std::uint64_t key() const;

  friend bool operator==(const Tpo& a, const Tpo& b) {
    return a.n_atoms_ == b.n_atoms_ && a.n_cells_ == b.n_cells_ && a.cells_ == b.cells_;
  }

 private:
  Tpo() = default;
  // Unchecked; callers guarantee a valid partition.
  static Tpo build(std::span<const WorldSet> cells, int n_atoms);
  friend class TpoBuilder;

  int n_atoms_ = 0;
  int n_cells_ = 0;
  std::array<WorldSet, kMaxWorlds> cells_{};
  std::array<std::uint8_t, kMaxWorlds> rank_{};
};

/// Assembles a Tpo cell by cell, skipping empty cells. Used by the operators,
/// which construct partitions that are valid by construction.
class TpoBuilder {
 public:
  explicit TpoBuilder(int n_atoms) : n_atoms_(n_atoms) {}

  TpoBuilder& push(WorldSet cell) {
    if (!cell.empty()) cells_[static_cast<std::size_t>(n_cells_++)] = cell;
    return *this;
  }
  /// Throws InvalidPartitionError if the pushed cells do not form a partition.
  Tpo finish() const;
  /// Skips validation.
  Tpo finish_unchecked() const;

 private:
  int n_atoms_;
  int n_cells_ = 0;
  std::array<WorldSet, kMaxWorlds> cells_{};
};

/// `00 | 11 | 01 10`: cells lowest first, worlds ascending within a cell.
std::string to_string(const Tpo& t);
/// Inverse of to_string; the atom count is read off the world width.
Tpo parse_tpo(std::string_view text);
Tpo parse_tpo(std::string_view text, int n_atoms);

struct AbsurdState {
  bool operator==(const AbsurdState&) const = default;
};

/// An epistemic state: an ordered state identified with its Tpo, or the
/// absurd state whose belief set is the whole language.
using State = std::variant<Tpo, AbsurdState>;

inline bool is_absurd(const State& s) { return std::holds_alternative<AbsurdState>(s); }

std::string to_string(const State& s);
/// Accepts `absurd` or the Tpo text form.
State parse_state(std::string_view text, int n_atoms);

/// The rank-minimal members of `s`. Throws EmptySetError for empty `s`.
WorldSet min_worlds(const Tpo& t, WorldSet s);

/// Whether t1 and t2 induce the same relation on {x, y}.
bool agrees_on(const Tpo& t1, const Tpo& t2, World x, World y);

enum class InputRelation { StrictlyBelow, Tied, StrictlyAbove };

/// x ⪯^A y iff x ∈ A or y ∉ A.
constexpr bool input_leq(WorldSet a, World x, World y) { return a.contains(x) || !a.contains(y); }
InputRelation input_cmp(WorldSet a, World x, World y);
/// Whether the input orders of `a` and `b` agree on {x, y}.
bool inputs_agree_on(WorldSet a, WorldSet b, World x, World y);

/// Flatness order: t1 ⊒ t2 iff the cell lists are identical or, at the first
/// index where they differ, t1's cell strictly contains t2's (missing cells
/// read as empty).
bool flatter_eq(const Tpo& t1, const Tpo& t2);

// ---------------------------------------------------------------------------
// Enumeration. Order: the first cell runs over nonempty subsets of the
// remaining worlds in increasing bit-mask order, recursively.

/// Number of ordered partitions of the 2^n_atoms worlds (a Fubini number).
std::uint64_t tpo_count(int n_atoms);

/// Calls `visit` for every Tpo exactly once, in enumeration order. Stops early
/// if `visit` returns false.
void for_each_tpo(int n_atoms, const std::function<bool(const Tpo&)>& visit);

/// Materialised enumeration; n_atoms must be at most 3.
std::vector<Tpo> all_tpos(int n_atoms);

/// The Tpo at position `index` of the enumeration (unranking).
Tpo tpo_at(int n_atoms, std::uint64_t index);
/// Position of `t` in the enumeration (ranking).
std::uint64_t tpo_index(const Tpo& t);

/// A permutation of W.
struct Permutation {
  int n_worlds = 0;
  std::array<std::uint8_t, kMaxWorlds> image{};

  static Permutation identity(int n_worlds);
  World operator()(World w) const { return World{image[w.index]}; }
  WorldSet operator()(WorldSet s) const;
  bool operator==(const Permutation&) const = default;
};

/// The image order: x ⪯ y iff π⁻¹(x) ⪯_t π⁻¹(y).
Tpo permute(const Tpo& t, const Permutation& pi);

/// Whether π is an A-preserving order isomorphism from t1 to t2.
bool is_a_preserving_iso(const Tpo& t1, const Tpo& t2, WorldSet a, const Permutation& pi);

/// All A-preserving order isomorphisms from ⟨W, t1, ⪯^A⟩ to ⟨W, t2, ⪯^A⟩,
/// identity-first lexicographic order of images. Empty when none exist.
std::vector<Permutation> enumerate_a_preserving_isos(const Tpo& t1, const Tpo& t2, WorldSet a);

// ---------------------------------------------------------------------------
// Belief and conditional-belief semantics.

/// Model set of the belief set: first cell, or ∅ for the absurd state.
WorldSet beliefs(const State& s);
WorldSet beliefs(const Tpo& t);

/// Ramsey test. An inconsistent antecedent holds vacuously.
bool conditional_holds(const Tpo& t, PropConditional c);
bool conditional_holds(const Tpo& t, const Conditional& c, const Signature& sig);

/// For every nonempty antecedent proposition P (indexed by P's bit mask), the
/// minimal P-worlds. Entry 0 is unused. This map determines the Tpo.
std::vector<WorldSet> minimal_map(const Tpo& t);

/// The conditional belief set, materialised: every A ⇒ B with
/// min(t, A) ⊆ B and every believed sentence. n_atoms must be at most 3.
MixedSet conditional_set(const Tpo& t);

}  // namespace itrev
