#include <algorithm>
#include <functional>

#include "check_common.hpp"
#include "itrev/conditionals.hpp"
#include "itrev/errors.hpp"
#include "itrev/postulates.hpp"

namespace itrev {

namespace {

using internal::Sink;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pair_name(RevisionKind r, ContractionMethod c) {
  return std::string(to_string(r)) + " + " + std::string(to_string(c));
}

std::string witness_summary(const Witness& w, int n) {
  std::string out;
  const char* tpo_labels[] = {"t", "t'"};
  const char* input_labels[] = {"A", "B"};
  const char* world_labels[] = {"x", "y", "z"};
  for (std::size_t i = 0; i < w.tpos.size() && i < 2; ++i) {
    out += std::string(out.empty() ? "" : ", ") + tpo_labels[i] + " = " + to_string(w.tpos[i]);
  }
  for (std::size_t i = 0; i < w.inputs.size() && i < 2; ++i) {
    out += std::string(", ") + input_labels[i] + " = " + render_proposition(w.inputs[i], n);
  }
  for (std::size_t i = 0; i < w.worlds.size() && i < 3; ++i) {
    out += std::string(", ") + world_labels[i] + " = " + to_string(w.worlds[i], n);
  }
  return out;
}

struct Accumulator {
  CheckReport& report;
  CheckScope scope;
  const CheckOptions& options;

  CheckReport check(PostulateId p, const RevisionMethod& rev, std::optional<ContractionMethod> con = {}) {
    CheckReport r = check_postulate(p, rev, con, scope, options);
    report.instances += r.instances;
    return r;
  }

  void fail(std::string detail) {
    ++report.violations;
    if (report.witnesses.size() < kWitnessCap) report.witnesses.push_back(Witness{{}, {}, {}, std::nullopt, std::move(detail)});
  }
};

CheckReport base_report(ClaimId claim, int n_atoms) {
  CheckReport report;
  report.subject = std::string(to_string(claim));
  report.scope = CheckScope{n_atoms, CheckMode::Exhaustive, 0, 0};
  return report;
}

// ---------------------------------------------------------------------------

void verify_t1(CheckReport& report, const CheckOptions& options) {
  Accumulator acc{report, report.scope, options};
  const PostulateId elementary[] = {PostulateId::Success, PostulateId::DP1,   PostulateId::DP2,
                                    PostulateId::DP3,     PostulateId::DP4,   PostulateId::IIAP,
                                    PostulateId::IIAI,    PostulateId::Beta1, PostulateId::Beta2,
                                    PostulateId::Neut};
  for (PostulateId p : elementary) report.table_columns.emplace_back(to_string(p));
  for (RevisionKind k : kRevisionKinds) {
    TableRow row{std::string(to_string(k)), {}};
    for (PostulateId p : elementary) {
      const CheckReport r = acc.check(p, k);
      row.values.push_back(r.passed ? "pass" : "FAIL");
      if (!r.passed) {
        acc.fail(std::string(to_string(k)) + " fails " + std::string(to_string(p)) + " at " +
                 witness_summary(r.witnesses.front(), report.scope.n_atoms));
      }
    }
    report.table.push_back(std::move(row));
  }
  // Refuting a diagram takes three worlds, so the search never runs below n = 2.
  const int diagram_n = std::max(report.scope.n_atoms, 2);
  if (diagram_n != report.scope.n_atoms) report.notes.emplace_back("diagrams are searched at n = 2");
  for (char label : kDiagramLabels) {
    const Diagram d = diagram(label);
    const CheckReport r = check_diagram(d, diagram_n, options);
    report.instances += r.instances;
    const bool expected = label == 'a' || label == 'b' || label == 'c';
    std::string note = "diagram " + d.name + ": " + (r.passed ? "consistent" : "inconsistent");
    if (!r.passed) note += " (" + witness_summary(r.witnesses.front(), diagram_n) + ")";
    report.notes.push_back(note);
    if (r.passed != expected) {
      acc.fail("diagram " + d.name + (expected ? " should be consistent" : " should be refuted"));
    }
  }
  report.notes.emplace_back(
      "covers the built-in operators and the six-diagram exclusion; the space of all operators is not enumerated");
  report.notes.emplace_back("operators are taken to be defined on every order over W; restricted domains are not examined");
}

struct PairRow {
  RevisionKind rev = RevisionKind::Natural;
  ContractionMethod con = ContractionMethod::Natural;
  bool cc = true;
  bool nli = true;
  std::array<bool, 4> cr{true, true, true, true};
  bool spu = true;
  bool wpu = true;
  std::optional<Witness> cr_witness;

  bool cr_all() const { return cr[0] && cr[1] && cr[2] && cr[3]; }
  bool pu() const { return spu && wpu; }
};

std::vector<PairRow> pair_table(Accumulator& acc) {
  std::vector<PairRow> rows;
  const PostulateId crs[] = {PostulateId::CR1, PostulateId::CR2, PostulateId::CR3, PostulateId::CR4};
  for (RevisionKind r : kRevisionKinds) {
    for (ContractionMethod c : kContractionMethods) {
      PairRow row;
      row.rev = r;
      row.con = c;
      for (PostulateId p : {PostulateId::CC1, PostulateId::CC2, PostulateId::CC3, PostulateId::CC4}) {
        row.cc = acc.check(p, r, c).passed && row.cc;
      }
      row.nli = acc.check(PostulateId::NLI, r, c).passed;
      for (std::size_t i = 0; i < 4; ++i) {
        CheckReport rep = acc.check(crs[i], r, c);
        row.cr[i] = rep.passed;
        if (!rep.passed && !row.cr_witness) row.cr_witness = rep.witnesses.front();
      }
      row.spu = acc.check(PostulateId::SPU, r, c).passed;
      row.wpu = acc.check(PostulateId::WPU, r, c).passed;
      rows.push_back(row);
    }
  }
  return rows;
}

void verify_pairs(ClaimId claim, CheckReport& report, const CheckOptions& options) {
  Accumulator acc{report, report.scope, options};
  const auto rows = pair_table(acc);
  report.table_columns = {"CC1-4", "NLI", "CR1", "CR2", "CR3", "CR4", "SPU", "WPU"};
  for (const PairRow& row : rows) {
    const std::string name = pair_name(row.rev, row.con);
    report.table.push_back(TableRow{name,
                                    {yes_no(row.cc), yes_no(row.nli), yes_no(row.cr[0]), yes_no(row.cr[1]),
                                     yes_no(row.cr[2]), yes_no(row.cr[3]), yes_no(row.spu), yes_no(row.wpu)}});
    if (row.cr_witness) {
      const char* which = !row.cr[0] ? "CR1" : !row.cr[1] ? "CR2" : !row.cr[2] ? "CR3" : "CR4";
      report.notes.push_back(name + ": " + which + " fails at " +
                             witness_summary(*row.cr_witness, report.scope.n_atoms));
    }
    if (!row.cc) {
      report.notes.push_back(name + ": contraction fails CC1-4, equivalence not asserted");
      continue;
    }
    bool lhs = false;
    bool rhs = false;
    std::string lhs_name;
    std::string rhs_name;
    switch (claim) {
      case ClaimId::T2: lhs = row.nli, rhs = row.cr_all(), lhs_name = "NLI", rhs_name = "CR1-4"; break;
      case ClaimId::T3: lhs = row.cr_all(), rhs = row.pu(), lhs_name = "CR1-4", rhs_name = "SPU+WPU"; break;
      default: lhs = row.nli, rhs = row.pu(), lhs_name = "NLI", rhs_name = "SPU+WPU"; break;
    }
    if (lhs != rhs) {
      acc.fail(name + ": " + lhs_name + " " + (lhs ? "holds" : "fails") + " but " + rhs_name + " " +
               (rhs ? "holds" : "fails"));
    }
  }
}

void verify_t4(CheckReport& report, const CheckOptions& options) {
  const int n = report.scope.n_atoms;
  const auto tpos = all_tpos(n);
  const WorldSet universe = WorldSet::universe(n);
  report.table_columns = {"instances", "agreements"};
  for (ContractionMethod c : kContractionMethods) {
    Sink sink = internal::run_indexed(tpos.size(), internal::resolve_workers(options), [&](std::uint64_t i, Sink& s) {
      const Tpo& t = tpos[static_cast<std::size_t>(i)];
      for (std::uint32_t bits = 1; bits <= universe.bits(); ++bits) {
        const WorldSet a(bits);
        const Tpo contracted = contract(t, universe - a, c);
        MixedSet delta = conditional_set(contracted);
        delta.add_plain(a);
        s.instance();
        std::string detail;
        bool ok = false;
        try {
          const Tpo brute = rational_closure(delta).tpo;
          const Tpo fast = rational_closure_fast(contracted, a);
          ok = brute == fast;
          detail = "brute force: " + to_string(brute) + "; natural revision: " + to_string(fast);
        } catch (const Error& e) {
          detail = e.what();
        }
        if (!ok) {
          s.violation([&] {
            return Witness{{t, contracted}, {a}, {}, std::nullopt, std::string(to_string(c)) + ": " + detail};
          });
        }
      }
    });
    report.table.push_back(TableRow{std::string(to_string(c)), {std::to_string(sink.instances),
                                                                std::to_string(sink.instances - sink.violations)}});
    internal::finish(report, std::move(sink));
  }
}

void verify_flattest(CheckReport& report, const CheckOptions& options) {
  const int n = report.scope.n_atoms;
  const auto tpos = all_tpos(n);
  const WorldSet universe = WorldSet::universe(n);
  Sink sink = internal::run_indexed(tpos.size(), internal::resolve_workers(options), [&](std::uint64_t i, Sink& s) {
    const Tpo& base = tpos[static_cast<std::size_t>(i)];
    for (std::uint32_t bits = 1; bits <= universe.bits(); ++bits) {
      const WorldSet a(bits);
      if (!base.first_cell().intersects(a)) continue;
      const Tpo natural = revise(base, a, RevisionKind::Natural);
      MixedSet delta = conditional_set(base);
      delta.add_plain(a);
      const Requirements req(delta);
      s.instance();
      if (!respects_lower_bound(base, a, natural)) {
        s.violation([&] {
          return Witness{{base, natural}, {a}, {}, std::nullopt, "natural revision breaks the lower bound"};
        });
      }
      for (const Tpo& other : tpos) {
        s.instance();
        const bool bounded = respects_lower_bound(base, a, other);
        if (bounded != req.satisfied_by(other)) {
          s.violation([&] {
            return Witness{{base, other}, {a}, {}, std::nullopt,
                           "lower bound and satisfaction of the conditional set disagree"};
          });
        } else if (bounded && !flatter_eq(natural, other)) {
          s.violation([&] {
            return Witness{{base, other}, {a}, {}, std::nullopt,
                           "natural revision " + to_string(natural) + " is not flatter than this bounded order"};
          });
        }
      }
    }
  });
  internal::finish(report, std::move(sink));
}

void verify_p1(CheckReport& report, const CheckOptions& options) {
  const int n = report.scope.n_atoms;
  Accumulator acc{report, report.scope, options};
  constexpr int kRandomDp = 100;
  constexpr int kRandomPerState = 20;
  report.table_columns = {"operators", "IIAI", "Beta1+Beta2", "disagreements"};

  auto sweep = [&](const std::string& label, const std::vector<RevisionMethod>& ops) {
    int iiai = 0;
    int betas = 0;
    int disagreements = 0;
    for (const RevisionMethod& op : ops) {
      const bool a = acc.check(PostulateId::IIAI, op).passed;
      const bool b = acc.check(PostulateId::Beta1, op).passed && acc.check(PostulateId::Beta2, op).passed;
      iiai += a;
      betas += b;
      if (a != b) {
        ++disagreements;
        acc.fail(op.name() + ": IIAI " + (a ? "holds" : "fails") + " but Beta1+Beta2 " + (b ? "hold" : "fail"));
      }
    }
    const std::string total = std::to_string(ops.size());
    report.table.push_back(TableRow{label, {total, std::to_string(iiai) + "/" + total,
                                            std::to_string(betas) + "/" + total, std::to_string(disagreements)}});
  };

  sweep("built-in", {RevisionKind::Natural, RevisionKind::Restrained, RevisionKind::Lexicographic});
  std::vector<RevisionMethod> random_dp;
  for (int seed = 1; seed <= kRandomDp; ++seed) random_dp.push_back(make_random_dp_operator(seed, n));
  sweep("random-dp", random_dp);
  std::vector<RevisionMethod> per_state;
  for (int seed = 1; seed <= kRandomPerState; ++seed) per_state.push_back(make_random_per_state_operator(seed, n));
  sweep("random-per-state", per_state);
  report.notes.push_back("random-dp operators use seeds 1-" + std::to_string(kRandomDp) +
                         ", random-per-state operators seeds 1-" + std::to_string(kRandomPerState));
}

void verify_p2(CheckReport& report, const CheckOptions& options) {
  const int n = report.scope.n_atoms;
  const auto tpos = all_tpos(n);
  const WorldSet universe = WorldSet::universe(n);
  report.table_columns = {"applicable", "identity fails"};
  for (RevisionKind r : kRevisionKinds) {
    for (ContractionMethod c : kContractionMethods) {
      Sink sink = internal::run_indexed(tpos.size(), internal::resolve_workers(options), [&](std::uint64_t i, Sink& s) {
        const Tpo& t = tpos[static_cast<std::size_t>(i)];
        for (std::uint32_t bits = 1; bits <= universe.bits(); ++bits) {
          const WorldSet a(bits);
          const Tpo contracted = contract(t, universe - a, c);
          if (contracted.first_cell().subset_of(a)) continue;
          s.instance();
          MixedSet naive = conditional_set(contracted);
          naive.add_plain(a);
          naive = cn_extended_closure(naive);
          const MixedSet revised = conditional_set(revise(t, a, r));
          const PropConditional top_a{universe, a};
          const bool fails = !cn_extended_member(naive, top_a) && cn_extended_member(revised, top_a) &&
                             !(naive == revised) && !is_rational(naive);
          if (!fails) {
            s.violation([&] {
              return Witness{{t, contracted}, {a}, {}, std::nullopt,
                             pair_name(r, c) + ": extended consequence of the contraction plus A matches the revision"};
            });
          }
        }
      });
      report.table.push_back(TableRow{pair_name(r, c), {std::to_string(sink.instances),
                                                        std::to_string(sink.instances - sink.violations)}});
      internal::finish(report, std::move(sink));
    }
  }
}

RevisionMethod composite(RevisionKind r, ContractionMethod c, int n) {
  const auto tpos = all_tpos(n);
  const std::uint32_t full = WorldSet::universe(n).bits();
  std::vector<Tpo> posteriors;
  for (const Tpo& t : tpos) {
    posteriors.push_back(t);
    for (std::uint32_t a = 1; a <= full; ++a) posteriors.push_back(nli_revise(t, WorldSet(a), c, r));
  }
  return RevisionMethod(std::make_shared<const TabularRevision>(n, std::move(posteriors),
                                                                "nli(" + pair_name(r, c) + ")"));
}

void verify_p3(CheckReport& report, const CheckOptions& options) {
  const int n = report.scope.n_atoms;
  Accumulator acc{report, report.scope, options};
  const PostulateId dp[] = {PostulateId::DP1, PostulateId::DP2, PostulateId::DP3, PostulateId::DP4};
  const PostulateId cc[] = {PostulateId::CC1, PostulateId::CC2, PostulateId::CC3, PostulateId::CC4};
  report.table_columns = {"DP1", "DP2", "DP3", "DP4"};
  for (RevisionKind r : kRevisionKinds) {
    for (ContractionMethod c : kContractionMethods) {
      const RevisionMethod comp = composite(r, c, n);
      TableRow row{pair_name(r, c), {}};
      for (std::size_t i = 0; i < 4; ++i) {
        const bool premise = acc.check(cc[i], r, c).passed && acc.check(dp[i], r).passed;
        const CheckReport result = acc.check(dp[i], comp);
        row.values.push_back(!premise ? "n/a" : result.passed ? "yes" : "no");
        if (premise && !result.passed) {
          acc.fail(row.label + ": composite fails " + std::string(to_string(dp[i])) + " at " +
                   witness_summary(result.witnesses.front(), n));
        }
      }
      report.table.push_back(std::move(row));
    }
  }
}

void verify_p5(CheckReport& report) {
  const Tpo t = parse_tpo("11 | 10 01 | 00", 2);
  const WorldSet a = WorldSet::of({World{2}, World{3}});  // p
  const Tpo expected = parse_tpo("11 | 10 | 01 | 00", 2);
  const Tpo contracted = contract(t, t.universe() - a, ContractionMethod::StqLex);
  Accumulator acc{report, report.scope, CheckOptions{}};
  report.table_columns = {"value", "expected", "ok"};

  auto row = [&](std::string label, std::string value, std::string want) {
    const bool ok = value == want;
    report.instances += 1;
    if (!ok) acc.fail(label + ": got " + value + ", expected " + want);
    report.table.push_back(TableRow{std::move(label), {value, want, ok ? "yes" : "no"}});
  };

  row("t", to_string(t), to_string(t));
  row("A believed in t", yes_no(t.first_cell().subset_of(a)), "yes");
  row("t -~A (contract-stq-lex)", to_string(contracted), to_string(t));
  for (RevisionKind r : {RevisionKind::Restrained, RevisionKind::Lexicographic}) {
    row("t *A (" + std::string(to_string(r)) + ")", to_string(revise(t, a, r)), to_string(expected));
  }
  MixedSet delta = conditional_set(contracted);
  MixedSet with_a = delta;
  with_a.add_plain(a);
  row("conditional set of t -~A, plus A, unchanged and rational", yes_no(with_a == delta && is_rational(with_a)),
      "yes");
  row("conditional sets of t -~A and t *A differ", yes_no(!(delta == conditional_set(expected))), "yes");
}

}  // namespace

CheckReport verify_claim(ClaimId claim, int n_atoms, const CheckOptions& options) {
  if (n_atoms < 1 || n_atoms > 2) throw ScopeError("claims are verified for 1 or 2 atoms");
  if (claim == ClaimId::P5 && n_atoms != 2) throw ScopeError("P5 replays a 2-atom example");
  CheckReport report = base_report(claim, n_atoms);
  switch (claim) {
    case ClaimId::T1: verify_t1(report, options); break;
    case ClaimId::T2: case ClaimId::T3: case ClaimId::Cor1: verify_pairs(claim, report, options); break;
    case ClaimId::T4: verify_t4(report, options); break;
    case ClaimId::P1: verify_p1(report, options); break;
    case ClaimId::P2: verify_p2(report, options); break;
    case ClaimId::P3: verify_p3(report, options); break;
    case ClaimId::P5: verify_p5(report); break;
    case ClaimId::L_flattest: verify_flattest(report, options); break;
  }
  report.passed = report.violations == 0;
  return report;
}

}  // namespace itrev
