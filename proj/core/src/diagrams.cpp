#include "check_common.hpp"
#include "itrev/errors.hpp"
#include "itrev/postulates.hpp"

namespace itrev {

std::string_view to_string(PairRelation r) {
  switch (r) {
    case PairRelation::XBelow: return "x<y";
    case PairRelation::Tied: return "x~y";
    case PairRelation::YBelow: return "y<x";
  }
  return {};
}

Diagram diagram(char label) {
  using R = PairRelation;
  switch (label) {
    case 'a': return {"(a)", {R::XBelow, R::XBelow, R::YBelow}};
    case 'b': return {"(b)", {R::XBelow, R::XBelow, R::XBelow}};
    case 'c': return {"(c)", {R::XBelow, R::Tied, R::YBelow}};
    case 'd': return {"(d)", {R::XBelow, R::Tied, R::Tied}};
    case 'e': return {"(e)", {R::XBelow, R::XBelow, R::Tied}};
    case 'f': return {"(f)", {R::XBelow, R::Tied, R::XBelow}};
    default: throw MalformedDiagramError(std::string("no diagram labelled '") + label + "'");
  }
}

namespace {

using internal::world;

PairRelation prior_relation(const Tpo& t, World x, World y) {
  if (t.less(x, y)) return PairRelation::XBelow;
  if (t.less(y, x)) return PairRelation::YBelow;
  return PairRelation::Tied;
}

void validate(const Diagram& d) {
  for (int i = 0; i < 3; ++i) {
    if (static_cast<int>(d.image[static_cast<std::size_t>(i)]) > i) {
      throw MalformedDiagramError("diagram " + d.name + " moves x downwards from " +
                                  std::string(to_string(static_cast<PairRelation>(i))));
    }
  }
}

// The operator whose cross-pair behaviour the diagram encodes, if any.
std::optional<RevisionKind> matching_operator(const Diagram& d) {
  for (auto [label, kind] : {std::pair{'a', RevisionKind::Restrained}, std::pair{'b', RevisionKind::Lexicographic},
                             std::pair{'c', RevisionKind::Natural}}) {
    if (diagram(label).image == d.image) return kind;
  }
  return std::nullopt;
}

// Posterior u ⪯ v as forced by Success (minimal A-worlds first), DP1/DP2
// (same-side pairs keep their order) and the diagram (cross pairs).
class Forced {
 public:
  Forced(const Diagram& d, const Tpo& t, WorldSet a) : d_(d), t_(t), a_(a), min_(min_worlds(t, a)) {}

  bool leq(World u, World v) const {
    if (min_.contains(u)) return true;
    if (min_.contains(v)) return false;
    if (a_.contains(u) == a_.contains(v)) return t_.leq(u, v);
    if (a_.contains(u)) return image(u, v) != PairRelation::YBelow;
    return image(v, u) != PairRelation::XBelow;
  }

  bool minimal(World w) const { return min_.contains(w); }

 private:
  PairRelation image(World x, World y) const {
    return d_.image[static_cast<std::size_t>(prior_relation(t_, x, y))];
  }

  const Diagram& d_;
  const Tpo& t_;
  WorldSet a_;
  WorldSet min_;
};

// x on one side; y, z on the other with z ≺ y before, yet forced y ⪯ x ⪯ z.
bool triple_violates(const Tpo& t, WorldSet a, const Forced& r, World x, World y, World z) {
  if (a.contains(y) != a.contains(z) || a.contains(x) == a.contains(y)) return false;
  if (r.minimal(x) || r.minimal(y) || r.minimal(z)) return false;
  return t.less(z, y) && r.leq(y, x) && r.leq(x, z);
}

void search(const Diagram& d, const Tpo& t, WorldSet a, internal::Sink& sink) {
  const int nw = t.n_worlds();
  const Forced r(d, t, a);
  auto witness = [&](std::vector<World> worlds, std::string detail) {
    return Witness{{t}, {a}, std::move(worlds), std::nullopt, std::move(detail)};
  };
  // DP2 configurations (y, z ∉ A) before DP1 ones, so that the first
  // witnesses follow the z ≺ y ≺ x construction.
  for (bool pair_in_a : {false, true}) {
    for (int xi = 0; xi < nw; ++xi) {
      const World x = world(xi);
      if (a.contains(x) == pair_in_a) continue;
      for (int yi = 0; yi < nw; ++yi) {
        for (int zi = 0; zi < nw; ++zi) {
          const World y = world(yi);
          const World z = world(zi);
          if (yi == zi || a.contains(y) != pair_in_a || a.contains(z) != pair_in_a) continue;
          if (r.minimal(x) || r.minimal(y) || r.minimal(z)) continue;
          sink.instance();
          if (!triple_violates(t, a, r, x, y, z)) continue;
          sink.violation([&] {
            return witness({x, y, z}, "before: " + internal::relation_text(t, z, y) + ", " +
                                          internal::relation_text(t, y, x) + ", " + internal::relation_text(t, x, z) +
                                          "; forced after: y <= x <= z, against " + (pair_in_a ? "DP1" : "DP2"));
          });
        }
      }
    }
  }
  if (auto kind = matching_operator(d)) {
    const Tpo op = revise(t, a, *kind);
    for (int ui = 0; ui < nw; ++ui) {
      for (int vi = 0; vi < nw; ++vi) {
        sink.instance();
        if (r.leq(world(ui), world(vi)) == op.leq(world(ui), world(vi))) continue;
        sink.violation([&] {
          return witness({world(ui), world(vi)}, "forced relation differs from " + std::string(to_string(*kind)) +
                                                     " revision: " + internal::relation_text(op, world(ui), world(vi)));
        });
      }
    }
  }
}

}  // namespace

CheckReport check_diagram(const Diagram& d, int n_atoms, const CheckOptions& options) {
  validate(d);
  if (n_atoms < 1 || n_atoms > 2) throw ScopeError("diagrams are checked for 1 or 2 atoms");
  CheckReport report;
  report.subject = "diagram " + d.name;
  report.scope = CheckScope{n_atoms, CheckMode::Exhaustive, 0, 0};
  const auto tpos = all_tpos(n_atoms);
  const std::uint32_t full = WorldSet::universe(n_atoms).bits();
  internal::Sink sink =
      internal::run_indexed(tpos.size(), internal::resolve_workers(options), [&](std::uint64_t i, internal::Sink& s) {
        for (std::uint32_t a = 1; a <= full; ++a) search(d, tpos[static_cast<std::size_t>(i)], WorldSet(a), s);
      });
  internal::finish(report, std::move(sink));
  report.notes.push_back("x<y -> " + std::string(to_string(d.image[0])) + ", x~y -> " +
                         std::string(to_string(d.image[1])) + ", y<x -> " + std::string(to_string(d.image[2])));
  return report;
}

bool diagram_holds(const Diagram& d, const Witness& w) {
  validate(d);
  if (w.tpos.empty() || w.inputs.empty()) throw ScopeError("diagram witnesses carry an order and an input");
  const Tpo& t = w.tpos[0];
  const WorldSet a = w.inputs[0];
  const Forced r(d, t, a);
  if (w.worlds.size() == 3) return !triple_violates(t, a, r, w.worlds[0], w.worlds[1], w.worlds[2]);
  if (w.worlds.size() == 2) {
    auto kind = matching_operator(d);
    if (!kind) return true;
    return r.leq(w.worlds[0], w.worlds[1]) == revise(t, a, *kind).leq(w.worlds[0], w.worlds[1]);
  }
  throw ScopeError("diagram witnesses carry two or three worlds");
}

}  // namespace itrev
