#include "itrev/lang.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "itrev/errors.hpp"

namespace itrev {

std::string to_string(World w, int n_atoms) {
  std::string out(static_cast<std::size_t>(n_atoms), '0');
  for (int i = 0; i < n_atoms; ++i) {
    if (atom_true(w, i, n_atoms)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

World parse_world(std::string_view text, int n_atoms) {
  if (static_cast<int>(text.size()) != n_atoms) {
    throw ParseError("world '" + std::string(text) + "' must have " +
                         std::to_string(n_atoms) + " bits",
                     0);
  }
  std::uint8_t index = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw ParseError("world '" + std::string(text) + "' is not a bit-string", i);
    }
    index = static_cast<std::uint8_t>((index << 1) | (text[i] == '1' ? 1 : 0));
  }
  return World{index};
}

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Signature::Signature(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty() || atoms_.size() > static_cast<std::size_t>(kMaxAtoms)) {
    throw ScopeError("signature needs between 1 and " + std::to_string(kMaxAtoms) + " atoms");
  }
  std::unordered_set<std::string> seen;
  for (const auto& a : atoms_) {
    if (!is_identifier(a) || a == "true" || a == "false") {
      throw ParseError("'" + a + "' is not a valid atom name", 0);
    }
    if (!seen.insert(a).second) throw ParseError("duplicate atom '" + a + "'", 0);
  }
}

Signature Signature::standard(int n_atoms) {
  static const char* names[] = {"p", "q", "r", "s"};
  if (n_atoms < 1 || n_atoms > kMaxAtoms) {
    throw ScopeError("atom count must be between 1 and " + std::to_string(kMaxAtoms));
  }
  return Signature(std::vector<std::string>(names, names + n_atoms));
}

std::optional<int> Signature::find(std::string_view name) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end()) return std::nullopt;
  return static_cast<int>(it - atoms_.begin());
}

struct Formula::Node {
  Kind kind;
  int atom = -1;
  Formula lhs{nullptr};
  Formula rhs{nullptr};
};

Formula Formula::top() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::True}));
  return f;
}

Formula Formula::bottom() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::False}));
  return f;
}

Formula Formula::atom(int index) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, index}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, -1, std::move(f)}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, -1, std::move(lhs), std::move(rhs)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Or, -1, std::move(lhs), std::move(rhs)}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Implies, -1, std::move(lhs), std::move(rhs)}));
}

Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Iff, -1, std::move(lhs), std::move(rhs)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
int Formula::atom_index() const { return node_->atom; }
const Formula& Formula::lhs() const { return node_->lhs; }
const Formula& Formula::rhs() const { return node_->rhs; }

bool Formula::evaluate(World w, int n_atoms) const {
  switch (node_->kind) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return atom_true(w, node_->atom, n_atoms);
    case Kind::Not: return !lhs().evaluate(w, n_atoms);
    case Kind::And: return lhs().evaluate(w, n_atoms) && rhs().evaluate(w, n_atoms);
    case Kind::Or: return lhs().evaluate(w, n_atoms) || rhs().evaluate(w, n_atoms);
    case Kind::Implies: return !lhs().evaluate(w, n_atoms) || rhs().evaluate(w, n_atoms);
    case Kind::Iff: return lhs().evaluate(w, n_atoms) == rhs().evaluate(w, n_atoms);
  }
  return false;
}

int Formula::max_atom() const {
  switch (node_->kind) {
    case Kind::True:
    case Kind::False: return -1;
    case Kind::Atom: return node_->atom;
    case Kind::Not: return lhs().max_atom();
    default: return std::max(lhs().max_atom(), rhs().max_atom());
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False: return true;
    case Formula::Kind::Atom: return a.atom_index() == b.atom_index();
    case Formula::Kind::Not: return a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

std::string to_string(const Formula& f, const Signature& sig) {
  using K = Formula::Kind;
  auto binary = [&](const char* op) {
    return "(" + to_string(f.lhs(), sig) + " " + op + " " + to_string(f.rhs(), sig) + ")";
  };
  switch (f.kind()) {
    case K::True: return "true";
    case K::False: return "false";
    case K::Atom: return sig.atom(f.atom_index());
    case K::Not: return "~" + to_string(f.lhs(), sig);
    case K::And: return binary("&");
    case K::Or: return binary("|");
    case K::Implies: return binary("->");
    case K::Iff: return binary("<->");
  }
  return {};
}

WorldSet models(const Formula& f, int n_atoms) {
  if (n_atoms < 1 || n_atoms > kMaxAtoms) throw ScopeError("atom count out of range");
  if (f.max_atom() >= n_atoms) throw ScopeError("formula mentions an undeclared atom");
  WorldSet out;
  for (int i = 0; i < world_count(n_atoms); ++i) {
    World w{static_cast<std::uint8_t>(i)};
    if (f.evaluate(w, n_atoms)) out.insert(w);
  }
  return out;
}

WorldSet models(const Formula& f, const Signature& sig) { return models(f, sig.size()); }

bool entails(std::span<const WorldSet> gamma, WorldSet f, int n_atoms) {
  WorldSet common = WorldSet::universe(n_atoms);
  for (WorldSet g : gamma) common &= g;
  return common.subset_of(f);
}

bool entails(std::span<const Formula> gamma, const Formula& f, const Signature& sig) {
  std::vector<WorldSet> sets;
  sets.reserve(gamma.size());
  for (const auto& g : gamma) sets.push_back(models(g, sig));
  return entails(sets, models(f, sig), sig.size());
}

bool equivalent(const Formula& a, const Formula& b, const Signature& sig) {
  return models(a, sig) == models(b, sig);
}

Formula dnf(WorldSet worlds, int n_atoms) {
  std::optional<Formula> out;
  for (World w : worlds) {
    std::optional<Formula> term;
    for (int i = 0; i < n_atoms; ++i) {
      Formula lit = atom_true(w, i, n_atoms) ? Formula::atom(i) : Formula::negation(Formula::atom(i));
      term = term ? Formula::conjunction(*term, lit) : lit;
    }
    out = out ? Formula::disjunction(*out, *term) : *term;
  }
  return out ? *out : Formula::bottom();
}

std::string render_dnf(WorldSet worlds, const Signature& sig) {
  if (worlds.empty()) return "false";
  const int n = sig.size();
  const bool many_terms = worlds.size() > 1;
  std::string out;
  for (World w : worlds) {
    if (!out.empty()) out += " | ";
    std::string term;
    for (int i = 0; i < n; ++i) {
      if (i > 0) term += " & ";
      if (!atom_true(w, i, n)) term += "~";
      term += sig.atom(i);
    }
    out += (many_terms && n > 1) ? "(" + term + ")" : term;
  }
  return out;
}

namespace {

Formula parse_part(std::string_view text, std::size_t base, const Signature& sig) {
  try {
    return parse_formula(text, sig);
  } catch (const UnknownAtomError& e) {
    throw UnknownAtomError(e.atom(), e.offset() + base);
  } catch (const ParseError& e) {
    throw ParseError(e.reason(), e.offset() + base);
  }
}

}  // namespace

Conditional parse_conditional(std::string_view text, const Signature& sig) {
  auto pos = text.find("=>");
  if (pos == std::string_view::npos) throw ParseError("expected '=>' in conditional", text.size());
  if (pos > 0 && (text[pos - 1] == '<' || text[pos - 1] == '-')) {
    throw ParseError("malformed '=>'", pos - 1);
  }
  if (auto again = text.find("=>", pos + 2); again != std::string_view::npos) {
    throw ParseError("conditionals cannot be nested", again);
  }
  return Conditional{parse_part(text.substr(0, pos), 0, sig),
                     parse_part(text.substr(pos + 2), pos + 2, sig)};
}

std::string to_string(const Conditional& c, const Signature& sig) {
  return to_string(c.antecedent, sig) + " => " + to_string(c.consequent, sig);
}

PropConditional semantics(const Conditional& c, const Signature& sig) {
  return PropConditional{models(c.antecedent, sig), models(c.consequent, sig)};
}

void MixedSet::add(const Formula& f, const Signature& sig) {
  if (sig.size() != n_atoms_) throw ScopeError("signature does not match the set's atom count");
  add_plain(models(f, sig));
}

void MixedSet::add(const Conditional& c, const Signature& sig) {
  if (sig.size() != n_atoms_) throw ScopeError("signature does not match the set's atom count");
  add_conditional(semantics(c, sig));
}

bool cn_extended_member(const MixedSet& delta, WorldSet sentence) {
  std::vector<WorldSet> plain(delta.plain().begin(), delta.plain().end());
  return entails(plain, sentence, delta.n_atoms());
}

bool cn_extended_member(const MixedSet& delta, PropConditional c) {
  return delta.conds().contains(c);
}

bool cn_extended_member(const MixedSet& delta, const Formula& f, const Signature& sig) {
  return cn_extended_member(delta, models(f, sig));
}

bool cn_extended_member(const MixedSet& delta, const Conditional& c, const Signature& sig) {
  return cn_extended_member(delta, semantics(c, sig));
}

MixedSet cn_extended_closure(const MixedSet& delta) {
  const int n = delta.n_atoms();
  if (n > 3) throw ScopeError("materialising Cn is limited to 3 atoms");
  WorldSet common = WorldSet::universe(n);
  for (WorldSet g : delta.plain()) common &= g;
  MixedSet out(n);
  const std::uint32_t full = WorldSet::universe(n).bits();
  // every superset of the common models
  const std::uint32_t free_bits = full & ~common.bits();
  std::uint32_t extra = 0;
  do {
    out.add_plain(WorldSet(common.bits() | extra));
    extra = (extra - free_bits) & free_bits;
  } while (extra != 0);
  for (const auto& c : delta.conds()) out.add_conditional(c);
  return out;
}

}  // namespace itrev
