#pragma once

// Propositional core: worlds, world sets, formulas, classical consequence and
// the extended consequence over mixed sets of formulas and conditionals.

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace itrev {

inline constexpr int kMaxAtoms = 4;
inline constexpr int kMaxWorlds = 1 << kMaxAtoms;

constexpr int world_count(int n_atoms) { return 1 << n_atoms; }

/// A valuation of the declared atoms. The first declared atom is the most
/// significant bit of `index`, so numeric order coincides with the order of
/// the bit-string form ("01" < "10").
struct World {
  std::uint8_t index = 0;

  constexpr auto operator<=>(const World&) const = default;
};

constexpr bool atom_true(World w, int atom, int n_atoms) {
  return ((w.index >> (n_atoms - 1 - atom)) & 1u) != 0;
}

std::string to_string(World w, int n_atoms);

/// Parses a bit-string such as "10" of exactly `n_atoms` characters.
World parse_world(std::string_view text, int n_atoms);

/// A set of worlds over at most kMaxWorlds worlds; the semantic stand-in for
/// a sentence (its model set).
class WorldSet {
 public:
  class iterator {
   public:
    using value_type = World;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}

    constexpr World operator*() const {
      return World{static_cast<std::uint8_t>(std::countr_zero(rest_))};
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint32_t rest_ = 0;
  };

  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr WorldSet universe(int n_atoms) {
    return WorldSet((1u << world_count(n_atoms)) - 1u);
  }
  static constexpr WorldSet of(World w) { return WorldSet(1u << w.index); }
  static WorldSet of(std::initializer_list<World> worlds) {
    WorldSet s;
    for (World w : worlds) s.insert(w);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(World w) const { return ((bits_ >> w.index) & 1u) != 0; }
  constexpr void insert(World w) { bits_ |= 1u << w.index; }
  constexpr void erase(World w) { bits_ &= ~(1u << w.index); }
  constexpr bool subset_of(WorldSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(WorldSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr WorldSet operator|(WorldSet a, WorldSet b) { return WorldSet(a.bits_ | b.bits_); }
  friend constexpr WorldSet operator&(WorldSet a, WorldSet b) { return WorldSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr WorldSet operator-(WorldSet a, WorldSet b) { return WorldSet(a.bits_ & ~b.bits_); }
  constexpr WorldSet& operator|=(WorldSet o) { bits_ |= o.bits_; return *this; }
  constexpr WorldSet& operator&=(WorldSet o) { bits_ &= o.bits_; return *this; }
  constexpr WorldSet& operator-=(WorldSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr auto operator<=>(const WorldSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// The declared, ordered atom list of a session (1 to kMaxAtoms identifiers).
class Signature {
 public:
  explicit Signature(std::vector<std::string> atoms);

  /// p, q, r, s truncated to `n_atoms`.
  static Signature standard(int n_atoms);

  int size() const { return static_cast<int>(atoms_.size()); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& atom(int i) const { return atoms_.at(static_cast<std::size_t>(i)); }
  std::optional<int> find(std::string_view name) const;
  WorldSet universe() const { return WorldSet::universe(size()); }

  bool operator==(const Signature&) const = default;

 private:
  std::vector<std::string> atoms_;
};

/// Immutable propositional formula. Copies share structure.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or, Implies, Iff };

  static Formula top();
  static Formula bottom();
  static Formula atom(int index);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);

  Kind kind() const;
  /// Only meaningful for Kind::Atom.
  int atom_index() const;
  /// Operand of Not, left operand of binary connectives.
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool evaluate(World w, int n_atoms) const;
  /// Largest atom index used, or -1 for a constant formula.
  int max_atom() const;

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Fully parenthesised rendering over the signature's atom names.
std::string to_string(const Formula& f, const Signature& sig);

/// Grammar: atoms [a-zA-Z][a-zA-Z0-9_]*, constants `true`/`false`, unary `~`,
/// binary `&`, `|`, `->` (right-associative), `<->`, tightest first, with
/// parentheses. Throws ParseError / UnknownAtomError.
Formula parse_formula(std::string_view text, const Signature& sig);

/// Exact model set, by evaluation over all 2^n worlds.
WorldSet models(const Formula& f, const Signature& sig);
WorldSet models(const Formula& f, int n_atoms);

/// Membership of `f` in Cn(gamma).
bool entails(std::span<const Formula> gamma, const Formula& f, const Signature& sig);
bool entails(std::span<const WorldSet> gamma, WorldSet f, int n_atoms);

bool equivalent(const Formula& a, const Formula& b, const Signature& sig);

/// Canonical DNF of a world set: one minterm per world in ascending
/// bit-string order; `false` for the empty set.
Formula dnf(WorldSet worlds, int n_atoms);
std::string render_dnf(WorldSet worlds, const Signature& sig);

/// A ⇒ B. Never nested: both sides are plain formulas.
struct Conditional {
  Formula antecedent;
  Formula consequent;
};

/// Parses `A => B`.
Conditional parse_conditional(std::string_view text, const Signature& sig);
std::string to_string(const Conditional& c, const Signature& sig);

/// A conditional with both sides canonicalised to model sets.
struct PropConditional {
  WorldSet antecedent;
  WorldSet consequent;

  constexpr auto operator<=>(const PropConditional&) const = default;
};

PropConditional semantics(const Conditional& c, const Signature& sig);

/// A subset of the conditional language: plain sentences plus conditionals,
/// each stored by its model-set canonical form.
class MixedSet {
 public:
  explicit MixedSet(int n_atoms) : n_atoms_(n_atoms) {}

  int n_atoms() const { return n_atoms_; }
  const std::set<WorldSet>& plain() const { return plain_; }
  const std::set<PropConditional>& conds() const { return conds_; }

  void add_plain(WorldSet sentence) { plain_.insert(sentence); }
  void add_conditional(PropConditional c) { conds_.insert(c); }
  void add(const Formula& f, const Signature& sig);
  void add(const Conditional& c, const Signature& sig);

  bool operator==(const MixedSet&) const = default;

 private:
  int n_atoms_;
  std::set<WorldSet> plain_;
  std::set<PropConditional> conds_;
};

/// Extended consequence Cn(Δ) = Δ ∪ Cn(Δ ∩ L): a plain sentence is a member
/// iff classically entailed by the plain part; a conditional only if it is
/// literally present.
bool cn_extended_member(const MixedSet& delta, WorldSet sentence);
bool cn_extended_member(const MixedSet& delta, PropConditional c);
bool cn_extended_member(const MixedSet& delta, const Formula& f, const Signature& sig);
bool cn_extended_member(const MixedSet& delta, const Conditional& c, const Signature& sig);

/// Materialises Cn(Δ) over the finite language: the plain part becomes every
/// proposition entailed by Δ ∩ L, the conditionals are kept as they are.
MixedSet cn_extended_closure(const MixedSet& delta);

}  // namespace itrev
