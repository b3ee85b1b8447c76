#include "itrev/postulates.hpp"

#include <algorithm>

#include "check_common.hpp"
#include "itrev/conditionals.hpp"
#include "itrev/errors.hpp"

namespace itrev {

namespace {

struct PostulateName {
  PostulateId id;
  std::string_view name;
};

constexpr PostulateName kPostulateNames[] = {
    {PostulateId::Success, "Success"}, {PostulateId::DP1, "DP1"},     {PostulateId::DP2, "DP2"},
    {PostulateId::DP3, "DP3"},         {PostulateId::DP4, "DP4"},     {PostulateId::CC1, "CC1"},
    {PostulateId::CC2, "CC2"},         {PostulateId::CC3, "CC3"},     {PostulateId::CC4, "CC4"},
    {PostulateId::CR1, "CR1"},         {PostulateId::CR2, "CR2"},     {PostulateId::CR3, "CR3"},
    {PostulateId::CR4, "CR4"},         {PostulateId::SPU, "SPU"},     {PostulateId::WPU, "WPU"},
    {PostulateId::IIAP, "IIAP"},       {PostulateId::IIAI, "IIAI"},   {PostulateId::Beta1, "Beta1"},
    {PostulateId::Beta2, "Beta2"},     {PostulateId::Neut, "Neut"},   {PostulateId::Red, "Red"},
    {PostulateId::HI_beliefs, "HI_beliefs"}, {PostulateId::LI_beliefs, "LI_beliefs"},
    {PostulateId::NLI, "NLI"},         {PostulateId::iLIRC, "iLIRC"},
};

struct ClaimName {
  ClaimId id;
  std::string_view name;
};

constexpr ClaimName kClaimNames[] = {
    {ClaimId::T1, "T1"}, {ClaimId::T2, "T2"}, {ClaimId::T3, "T3"}, {ClaimId::Cor1, "Cor1"},
    {ClaimId::T4, "T4"}, {ClaimId::P1, "P1"}, {ClaimId::P2, "P2"}, {ClaimId::P3, "P3"},
    {ClaimId::P5, "P5"}, {ClaimId::L_flattest, "L_flattest"},
};

}  // namespace

std::string_view to_string(PostulateId p) {
  for (const auto& [id, name] : kPostulateNames) {
    if (id == p) return name;
  }
  return {};
}

std::optional<PostulateId> parse_postulate(std::string_view name) {
  for (const auto& [id, n] : kPostulateNames) {
    if (n == name) return id;
  }
  return std::nullopt;
}

bool needs_contraction(PostulateId p) {
  switch (p) {
    case PostulateId::CC1: case PostulateId::CC2: case PostulateId::CC3: case PostulateId::CC4:
    case PostulateId::CR1: case PostulateId::CR2: case PostulateId::CR3: case PostulateId::CR4:
    case PostulateId::SPU: case PostulateId::WPU:
    case PostulateId::HI_beliefs: case PostulateId::LI_beliefs:
    case PostulateId::NLI: case PostulateId::iLIRC:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(ClaimId c) {
  for (const auto& [id, name] : kClaimNames) {
    if (id == c) return name;
  }
  return {};
}

std::optional<ClaimId> parse_claim(std::string_view name) {
  for (const auto& [id, n] : kClaimNames) {
    if (n == name) return id;
  }
  return std::nullopt;
}

std::string_view to_string(CheckMode m) { return m == CheckMode::Exhaustive ? "exhaustive" : "sampled"; }

std::optional<CheckMode> parse_check_mode(std::string_view name) {
  if (name == "exhaustive") return CheckMode::Exhaustive;
  if (name == "sampled") return CheckMode::Sampled;
  return std::nullopt;
}

namespace internal {

std::string relation_text(const Tpo& t, World x, World y) {
  const std::string xs = to_string(x, t.n_atoms());
  const std::string ys = to_string(y, t.n_atoms());
  if (t.less(x, y)) return xs + " < " + ys;
  if (t.less(y, x)) return ys + " < " + xs;
  return xs + " ~ " + ys;
}

}  // namespace internal

namespace {

using internal::relation_text;
using internal::Sink;
using internal::world;

enum class Family { Whole, Pair, PriorPair, InputPair, Neut };

Family family(PostulateId p) {
  switch (p) {
    case PostulateId::Success: case PostulateId::Red: case PostulateId::HI_beliefs:
    case PostulateId::LI_beliefs: case PostulateId::NLI: case PostulateId::iLIRC:
      return Family::Whole;
    case PostulateId::IIAP: return Family::PriorPair;
    case PostulateId::IIAI: case PostulateId::Beta1: case PostulateId::Beta2: return Family::InputPair;
    case PostulateId::Neut: return Family::Neut;
    default: return Family::Pair;
  }
}

struct Ctx {
  PostulateId p;
  const RevisionMethod& rev;
  std::optional<ContractionMethod> con;
};

std::string set_text(WorldSet s, int n) {
  std::string out = "{";
  for (World w : s) out += (out.size() > 1 ? " " : "") + to_string(w, n);
  return out + "}";
}

// ---------------------------------------------------------------------------
// Single order, single input, world pair: DP*, CC*, CR*, SPU, WPU.

struct PairOrders {
  std::optional<Tpo> revised;              // t ∗ A
  std::optional<Tpo> contracted;           // t − A
  std::optional<Tpo> contracted_negation;  // t − ¬A
};

bool is_dp(PostulateId p) { return p >= PostulateId::DP1 && p <= PostulateId::DP4; }
bool is_cc(PostulateId p) { return p >= PostulateId::CC1 && p <= PostulateId::CC4; }

PairOrders pair_orders(const Ctx& ctx, const Tpo& t, WorldSet a) {
  PairOrders o;
  if (is_cc(ctx.p)) {
    o.contracted = contract(t, a, *ctx.con);
    return o;
  }
  o.revised = revise(t, a, ctx.rev);
  if (!is_dp(ctx.p)) o.contracted_negation = contract(t, t.universe() - a, *ctx.con);
  return o;
}

bool pair_ok(PostulateId p, const Tpo& t, const PairOrders& o, WorldSet a, World x, World y) {
  const bool xa = a.contains(x);
  const bool ya = a.contains(y);
  switch (p) {
    case PostulateId::DP1: return !(xa && ya) || o.revised->leq(x, y) == t.leq(x, y);
    case PostulateId::DP2: return xa || ya || o.revised->leq(x, y) == t.leq(x, y);
    case PostulateId::DP3: return !(xa && !ya && t.less(x, y)) || o.revised->less(x, y);
    case PostulateId::DP4: return !(xa && !ya && t.leq(x, y)) || o.revised->leq(x, y);
    case PostulateId::CC1: return xa || ya || o.contracted->leq(x, y) == t.leq(x, y);
    case PostulateId::CC2: return !(xa && ya) || o.contracted->leq(x, y) == t.leq(x, y);
    case PostulateId::CC3: return !(!xa && ya && t.less(x, y)) || o.contracted->less(x, y);
    case PostulateId::CC4: return !(!xa && ya && t.leq(x, y)) || o.contracted->leq(x, y);
    case PostulateId::CR1:
      return !(xa && ya) || o.contracted_negation->leq(x, y) == o.revised->leq(x, y);
    case PostulateId::CR2:
      return xa || ya || o.contracted_negation->leq(x, y) == o.revised->leq(x, y);
    case PostulateId::CR3:
      return !(xa && !ya && o.contracted_negation->less(x, y)) || o.revised->less(x, y);
    case PostulateId::CR4:
      return !(xa && !ya && o.contracted_negation->leq(x, y)) || o.revised->leq(x, y);
    case PostulateId::SPU:
      return !(t.less(x, y) && o.revised->less(x, y)) || o.contracted_negation->less(x, y);
    case PostulateId::WPU:
      return !(t.leq(x, y) && o.revised->leq(x, y)) || o.contracted_negation->leq(x, y);
    default: return true;
  }
}

std::string pair_detail(const Tpo& t, const PairOrders& o, World x, World y) {
  std::string out = "t: " + relation_text(t, x, y);
  if (o.revised) out += "; t*A: " + relation_text(*o.revised, x, y);
  if (o.contracted) out += "; t-A: " + relation_text(*o.contracted, x, y);
  if (o.contracted_negation) out += "; t-~A: " + relation_text(*o.contracted_negation, x, y);
  return out;
}

// ---------------------------------------------------------------------------
// Whole-order predicates: Success, Red, HI_beliefs, LI_beliefs, NLI, iLIRC.

bool whole_ok(const Ctx& ctx, const Tpo& t, WorldSet a, std::string* detail) {
  const int n = t.n_atoms();
  const WorldSet universe = t.universe();
  auto say = [&](std::string s) {
    if (detail) *detail = std::move(s);
  };
  switch (ctx.p) {
    case PostulateId::Success: {
      const Tpo r = revise(t, a, ctx.rev);
      say("beliefs of t*A: " + set_text(r.first_cell(), n));
      return r.first_cell().subset_of(a);
    }
    case PostulateId::Red: {
      const Tpo copy = parse_tpo(to_string(t), n);
      const Tpo r1 = revise(t, a, ctx.rev);
      const Tpo r2 = revise(copy, a, ctx.rev);
      say("t*A: " + to_string(r1) + "; copy*A: " + to_string(r2));
      return r1 == r2;
    }
    case PostulateId::HI_beliefs: {
      if (a == universe) return true;
      const Tpo c = contract(t, a, *ctx.con);
      const WorldSet expected = t.first_cell() | revise(t, universe - a, ctx.rev).first_cell();
      say("beliefs of t-A: " + set_text(c.first_cell(), n) + "; beliefs of t and t*~A: " + set_text(expected, n));
      return c.first_cell() == expected;
    }
    case PostulateId::LI_beliefs: {
      const Tpo r = revise(t, a, ctx.rev);
      const WorldSet expected = contract(t, universe - a, *ctx.con).first_cell() & a;
      say("beliefs of t*A: " + set_text(r.first_cell(), n) + "; beliefs of t-~A plus A: " + set_text(expected, n));
      return r.first_cell() == expected;
    }
    case PostulateId::NLI: {
      const Tpo r = revise(t, a, ctx.rev);
      const State e = expand(contract(t, universe - a, *ctx.con), a, ctx.rev);
      say("t*A: " + to_string(r) + "; (t-~A)+A: " + to_string(e));
      return !is_absurd(e) && std::get<Tpo>(e) == r;
    }
    case PostulateId::iLIRC: {
      const Tpo r = revise(t, a, ctx.rev);
      MixedSet delta = conditional_set(contract(t, universe - a, *ctx.con));
      delta.add_plain(a);
      try {
        const ClosureResult closure = rational_closure(delta);
        say("t*A: " + to_string(r) + "; closure: " + to_string(closure.tpo));
        return closure.tpo == r;
      } catch (const Error& e) {
        say("t*A: " + to_string(r) + "; closure failed: " + e.what());
        return false;
      }
    }
    default: return true;
  }
}

// ---------------------------------------------------------------------------
// Two-order, two-input and isomorphism predicates.

bool iiap_ok(const Tpo& t, const Tpo& t2, const Tpo& r, const Tpo& r2, WorldSet a, World x, World y) {
  const WorldSet excluded = min_worlds(t, a) | min_worlds(t2, a);
  if (excluded.contains(x) || excluded.contains(y)) return true;
  if (!agrees_on(t, t2, x, y)) return true;
  return agrees_on(r, r2, x, y);
}

bool iiai_ok(const Tpo& t, const Tpo& ra, const Tpo& rb, WorldSet a, WorldSet b, World x, World y) {
  const WorldSet excluded = min_worlds(t, a) | min_worlds(t, b);
  if (excluded.contains(x) || excluded.contains(y)) return true;
  if (!inputs_agree_on(a, b, x, y)) return true;
  return agrees_on(ra, rb, x, y);
}

bool beta_ok(PostulateId p, const Tpo& t, const Tpo& ra, const Tpo& rc, WorldSet a, WorldSet c, World x, World y) {
  if (min_worlds(t, c).contains(x)) return true;
  if (input_cmp(a, x, y) != InputRelation::StrictlyBelow) return true;
  if (p == PostulateId::Beta1) return !ra.leq(y, x) || rc.leq(y, x);
  return !ra.less(y, x) || rc.less(y, x);
}

bool neut_ok(const Tpo& r, const Tpo& r2, const Permutation& pi, World x, World y) {
  return r.leq(x, y) == r2.leq(pi(x), pi(y));
}

std::string permutation_text(const Permutation& pi, int n_atoms) {
  std::string out;
  for (int i = 0; i < pi.n_worlds; ++i) {
    if (!out.empty()) out += ", ";
    out += to_string(world(i), n_atoms) + "->" + to_string(pi(world(i)), n_atoms);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Outer loop.

struct Plan {
  int n_atoms;
  CheckMode mode;
  std::uint64_t seed;
  std::vector<Tpo> tpos;            // exhaustive only
  std::vector<WorldSet> inputs;     // every nonempty proposition
};

// Random permutation that maps A onto A and ¬A onto ¬A.
Permutation random_a_preserving(WorldSet a, int n_atoms, std::mt19937_64& rng) {
  Permutation pi = Permutation::identity(world_count(n_atoms));
  for (WorldSet side : {a, WorldSet::universe(n_atoms) - a}) {
    std::vector<World> from(side.begin(), side.end());
    std::vector<World> to = from;
    std::shuffle(to.begin(), to.end(), rng);
    for (std::size_t k = 0; k < from.size(); ++k) pi.image[from[k].index] = to[k].index;
  }
  return pi;
}

void check_outer(const Ctx& ctx, const Plan& plan, std::uint64_t i, Sink& sink) {
  const int n = plan.n_atoms;
  const int nw = world_count(n);
  const WorldSet universe = WorldSet::universe(n);
  const bool exhaustive = plan.mode == CheckMode::Exhaustive;

  // Per-index draws in sampled mode; the full ranges in exhaustive mode.
  std::optional<Tpo> drawn;
  std::vector<WorldSet> inputs;
  std::vector<WorldSet> inputs2;
  std::vector<Tpo> partners;
  if (exhaustive) {
    inputs = plan.inputs;
    inputs2 = plan.inputs;
  } else {
    auto rng = internal::sample_rng(plan.seed, i);
    std::uniform_int_distribution<std::uint64_t> pick_tpo(0, tpo_count(n) - 1);
    std::uniform_int_distribution<std::uint32_t> pick_input(1, universe.bits());
    drawn = tpo_at(n, pick_tpo(rng));
    inputs = {WorldSet(pick_input(rng))};
    inputs2 = {WorldSet(pick_input(rng))};
    if (ctx.p == PostulateId::IIAP) partners = {tpo_at(n, pick_tpo(rng))};
    if (ctx.p == PostulateId::Neut) partners = {permute(*drawn, random_a_preserving(inputs[0], n, rng))};
  }
  const Tpo& t = exhaustive ? plan.tpos[static_cast<std::size_t>(i)] : *drawn;
  const std::vector<Tpo>& others = exhaustive ? plan.tpos : partners;

  switch (family(ctx.p)) {
    case Family::Whole:
      for (WorldSet a : inputs) {
        if (ctx.p == PostulateId::HI_beliefs && a == universe) continue;
        sink.instance();
        std::string detail;
        if (!whole_ok(ctx, t, a, &detail)) {
          sink.violation([&] { return Witness{{t}, {a}, {}, std::nullopt, detail}; });
        }
      }
      return;

    case Family::Pair:
      for (WorldSet a : inputs) {
        const PairOrders o = pair_orders(ctx, t, a);
        for (int xi = 0; xi < nw; ++xi) {
          for (int yi = 0; yi < nw; ++yi) {
            if (xi == yi) continue;
            sink.instance();
            if (!pair_ok(ctx.p, t, o, a, world(xi), world(yi))) {
              sink.violation([&] {
                return Witness{{t}, {a}, {world(xi), world(yi)}, std::nullopt, pair_detail(t, o, world(xi), world(yi))};
              });
            }
          }
        }
      }
      return;

    case Family::PriorPair: {
      std::vector<Tpo> revised;
      for (WorldSet a : inputs) revised.push_back(revise(t, a, ctx.rev));
      for (const Tpo& t2 : others) {
        for (std::size_t k = 0; k < inputs.size(); ++k) {
          const WorldSet a = inputs[k];
          const Tpo r2 = revise(t2, a, ctx.rev);
          for (int xi = 0; xi < nw; ++xi) {
            for (int yi = xi + 1; yi < nw; ++yi) {
              sink.instance();
              if (!iiap_ok(t, t2, revised[k], r2, a, world(xi), world(yi))) {
                sink.violation([&] {
                  return Witness{{t, t2}, {a}, {world(xi), world(yi)}, std::nullopt,
                                 "t*A: " + relation_text(revised[k], world(xi), world(yi)) +
                                     "; t'*A: " + relation_text(r2, world(xi), world(yi))};
                });
              }
            }
          }
        }
      }
      return;
    }

    case Family::InputPair: {
      std::vector<Tpo> revised;
      std::vector<Tpo> revised2;
      for (WorldSet a : inputs) revised.push_back(revise(t, a, ctx.rev));
      for (WorldSet b : inputs2) revised2.push_back(revise(t, b, ctx.rev));
      const bool iiai = ctx.p == PostulateId::IIAI;
      for (std::size_t ka = 0; ka < inputs.size(); ++ka) {
        for (std::size_t kb = 0; kb < inputs2.size(); ++kb) {
          if (iiai && exhaustive && kb <= ka) continue;
          const WorldSet a = inputs[ka];
          const WorldSet b = inputs2[kb];
          for (int xi = 0; xi < nw; ++xi) {
            for (int yi = iiai ? xi + 1 : 0; yi < nw; ++yi) {
              if (xi == yi) continue;
              const World x = world(xi);
              const World y = world(yi);
              sink.instance();
              const bool ok = iiai ? iiai_ok(t, revised[ka], revised2[kb], a, b, x, y)
                                   : beta_ok(ctx.p, t, revised[ka], revised2[kb], a, b, x, y);
              if (!ok) {
                sink.violation([&] {
                  return Witness{{t}, {a, b}, {x, y}, std::nullopt,
                                 "t*A: " + relation_text(revised[ka], x, y) +
                                     "; t*B: " + relation_text(revised2[kb], x, y)};
                });
              }
            }
          }
        }
      }
      return;
    }

    case Family::Neut:
      for (const Tpo& t2 : others) {
        for (WorldSet a : inputs) {
          const auto isos = enumerate_a_preserving_isos(t, t2, a);
          if (isos.empty()) continue;
          const Tpo r = revise(t, a, ctx.rev);
          const Tpo r2 = revise(t2, a, ctx.rev);
          for (const Permutation& pi : isos) {
            sink.instance();
            for (int xi = 0; xi < nw; ++xi) {
              bool failed = false;
              for (int yi = 0; yi < nw; ++yi) {
                if (neut_ok(r, r2, pi, world(xi), world(yi))) continue;
                sink.violation([&] {
                  return Witness{{t, t2}, {a}, {world(xi), world(yi)}, pi,
                                 "t*A: " + relation_text(r, world(xi), world(yi)) + "; t'*A: " +
                                     relation_text(r2, pi(world(xi)), pi(world(yi))) + "; pi: " +
                                     permutation_text(pi, n)};
                });
                failed = true;
                break;
              }
              if (failed) break;
            }
          }
        }
      }
      return;
  }
}

void validate(PostulateId p, const RevisionMethod& rev, std::optional<ContractionMethod> con,
              const CheckScope& scope) {
  if (needs_contraction(p) && !con) {
    throw MissingContractionError(std::string(to_string(p)) + " needs a contraction method");
  }
  const int max_atoms = scope.mode == CheckMode::Exhaustive ? 2 : 3;
  if (scope.n_atoms < 1 || scope.n_atoms > max_atoms) {
    throw ScopeError(std::string(to_string(scope.mode)) + " checks support 1 to " + std::to_string(max_atoms) +
                     " atoms");
  }
  if (p == PostulateId::iLIRC && scope.n_atoms > 2) throw ScopeError("iLIRC is checked for at most 2 atoms");
  if (scope.mode == CheckMode::Sampled && scope.sample == 0) throw ScopeError("sample size must be positive");
  if (const TabularRevision* table = rev.table(); table && table->n_atoms() != scope.n_atoms) {
    throw ScopeError("operator " + rev.name() + " is defined for " + std::to_string(table->n_atoms()) + " atoms");
  }
}

}  // namespace

CheckReport check_postulate(PostulateId p, const RevisionMethod& rev, std::optional<ContractionMethod> con,
                            const CheckScope& scope, const CheckOptions& options) {
  validate(p, rev, con, scope);
  CheckReport report;
  report.subject = std::string(to_string(p));
  report.operators.push_back(rev.name());
  if (needs_contraction(p)) report.operators.emplace_back(to_string(*con));
  report.scope = scope;

  Plan plan{scope.n_atoms, scope.mode, scope.seed, {}, {}};
  for (std::uint32_t a = 1; a <= WorldSet::universe(scope.n_atoms).bits(); ++a) plan.inputs.emplace_back(a);
  std::uint64_t count = scope.sample;
  if (scope.mode == CheckMode::Exhaustive) {
    plan.tpos = all_tpos(scope.n_atoms);
    count = plan.tpos.size();
  }
  const Ctx ctx{p, rev, con};
  Sink sink = internal::run_indexed(count, internal::resolve_workers(options),
                                    [&](std::uint64_t i, Sink& s) { check_outer(ctx, plan, i, s); });
  internal::finish(report, std::move(sink));
  return report;
}

bool holds(PostulateId p, const RevisionMethod& rev, std::optional<ContractionMethod> con, const Witness& w) {
  if (needs_contraction(p) && !con) {
    throw MissingContractionError(std::string(to_string(p)) + " needs a contraction method");
  }
  const Ctx ctx{p, rev, con};
  auto need = [&](std::size_t tpos, std::size_t inputs, std::size_t worlds) {
    if (w.tpos.size() < tpos || w.inputs.size() < inputs || w.worlds.size() < worlds) {
      throw ScopeError("witness does not fit the shape of " + std::string(to_string(p)));
    }
  };
  switch (family(p)) {
    case Family::Whole:
      need(1, 1, 0);
      return whole_ok(ctx, w.tpos[0], w.inputs[0], nullptr);
    case Family::Pair: {
      need(1, 1, 2);
      const PairOrders o = pair_orders(ctx, w.tpos[0], w.inputs[0]);
      return pair_ok(p, w.tpos[0], o, w.inputs[0], w.worlds[0], w.worlds[1]);
    }
    case Family::PriorPair:
      need(2, 1, 2);
      return iiap_ok(w.tpos[0], w.tpos[1], revise(w.tpos[0], w.inputs[0], rev), revise(w.tpos[1], w.inputs[0], rev),
                     w.inputs[0], w.worlds[0], w.worlds[1]);
    case Family::InputPair: {
      need(1, 2, 2);
      const Tpo ra = revise(w.tpos[0], w.inputs[0], rev);
      const Tpo rb = revise(w.tpos[0], w.inputs[1], rev);
      if (p == PostulateId::IIAI) return iiai_ok(w.tpos[0], ra, rb, w.inputs[0], w.inputs[1], w.worlds[0], w.worlds[1]);
      return beta_ok(p, w.tpos[0], ra, rb, w.inputs[0], w.inputs[1], w.worlds[0], w.worlds[1]);
    }
    case Family::Neut: {
      need(2, 1, 2);
      if (!w.permutation) throw ScopeError("Neut witnesses carry a permutation");
      const Permutation& pi = *w.permutation;
      if (!is_a_preserving_iso(w.tpos[0], w.tpos[1], w.inputs[0], pi)) return true;
      const Tpo r = revise(w.tpos[0], w.inputs[0], rev);
      const Tpo r2 = revise(w.tpos[1], w.inputs[0], rev);
      return neut_ok(r, r2, pi, w.worlds[0], w.worlds[1]) && neut_ok(r, r2, pi, w.worlds[1], w.worlds[0]);
    }
  }
  return true;
}

}  // namespace itrev
