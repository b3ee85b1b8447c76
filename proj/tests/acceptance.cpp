// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "itrev/conditionals.hpp"
#include "itrev/operators.hpp"
#include "itrev/postulates.hpp"

using namespace itrev;

namespace {

using Clock = std::chrono::steady_clock;

const CheckOptions kOne{1};
const CheckScope kN2{};
const WorldSet kP(0b1100);

struct Outcome {
  bool ok = true;
  std::string why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) why = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= limit_s) {
    std::ostringstream s;
    s << "took " << secs << " s, limit " << limit_s << " s";
    o.require(false, s.str());
  }
  std::ostringstream line;
  line << (o.ok ? "PASS" : "FAIL") << " " << id << ": " << title << " (" << secs << " s)";
  if (!o.ok) line << ": " << o.why;
  std::cout << line.str() << std::endl;
  failures += !o.ok;
}

bool passes(PostulateId p, const RevisionMethod& r, std::optional<ContractionMethod> c = std::nullopt) {
  return check_postulate(p, r, c, kN2, kOne).passed;
}

}  // namespace

int main() {
  criterion(1, "worked revision example", 1e-3, [](Outcome& o) {
    const Tpo t = parse_tpo("00 | 11 | 01 10");
    const Tpo lex = revise(t, kP, RevisionKind::Lexicographic);
    const Tpo nat = revise(t, kP, RevisionKind::Natural);
    const Tpo res = revise(t, kP, RevisionKind::Restrained);
    o.require(lex == parse_tpo("11 | 10 | 00 | 01"), "lexicographic gave " + to_string(lex));
    o.require(nat == parse_tpo("11 | 00 | 01 10"), "natural gave " + to_string(nat));
    o.require(res == parse_tpo("11 | 00 | 10 | 01"), "restrained gave " + to_string(res));
  });

  criterion(2, "elementarity suite at n = 2, single worker", 60, [](Outcome& o) {
    for (RevisionKind k : kRevisionKinds) {
      for (PostulateId p : {PostulateId::Success, PostulateId::DP1, PostulateId::DP2, PostulateId::DP3, PostulateId::DP4,
                            PostulateId::IIAP, PostulateId::IIAI, PostulateId::Beta1, PostulateId::Beta2,
                            PostulateId::Neut}) {
        const CheckReport r = check_postulate(p, k, std::nullopt, kN2, kOne);
        o.require(r.passed && r.violations == 0,
                  std::string(to_string(k)) + " violates " + std::string(to_string(p)));
      }
    }
  });

  criterion(3, "diagram exclusion", 1, [](Outcome& o) {
    for (char label : kDiagramLabels) {
      const Diagram d = diagram(label);
      const CheckReport r = check_diagram(d, 2, kOne);
      const bool expect = label == 'a' || label == 'b' || label == 'c';
      o.require(r.passed == expect, "diagram " + d.name + (expect ? " refuted" : " not refuted"));
      for (const Witness& w : r.witnesses) o.require(!diagram_holds(d, w), "witness of " + d.name + " does not replay");
      if (label != 'd' && label != 'e') continue;
      o.require(!r.witnesses.empty(), "no witness for " + d.name);
      if (r.witnesses.empty()) continue;
      const Witness& w = r.witnesses.front();
      const Tpo& t = w.tpos[0];
      const World x = w.worlds[0], y = w.worlds[1], z = w.worlds[2];
      const WorldSet a = w.inputs[0];
      o.require(t.less(z, y) && t.less(y, x) && a.contains(x) && !a.contains(y) && !a.contains(z),
                "witness of " + d.name + " is not of the z < y < x shape");
    }
  });

  criterion(4, "NLI, CR1-4 and SPU+WPU agree on all nine pairs", 120, [](Outcome& o) {
    for (ClaimId c : {ClaimId::T2, ClaimId::T3, ClaimId::Cor1}) {
      o.require(verify_claim(c, 2, kOne).passed, std::string(to_string(c)) + " report fails");
    }
    bool some_all = false, some_none = false;
    for (RevisionKind k : kRevisionKinds) {
      for (ContractionMethod c : kContractionMethods) {
        const bool nli = passes(PostulateId::NLI, k, c);
        const bool cr = passes(PostulateId::CR1, k, c) && passes(PostulateId::CR2, k, c) &&
                        passes(PostulateId::CR3, k, c) && passes(PostulateId::CR4, k, c);
        const bool pu = passes(PostulateId::SPU, k, c) && passes(PostulateId::WPU, k, c);
        const std::string pair = std::string(to_string(k)) + " + " + std::string(to_string(c));
        o.require(nli == cr && cr == pu, "properties disagree for " + pair);
        some_all = some_all || (nli && cr && pu);
        some_none = some_none || (!nli && !cr && !pu);
      }
    }
    o.require(some_all && some_none, "no pair separates the properties");
    o.require(passes(PostulateId::NLI, RevisionKind::Lexicographic, ContractionMethod::StqLex),
              "lexicographic + contract-stq-lex fails NLI");
    o.require(!passes(PostulateId::NLI, RevisionKind::Natural, ContractionMethod::StqLex),
              "natural + contract-stq-lex passes NLI");
    const CheckReport cr4 =
        check_postulate(PostulateId::CR4, RevisionKind::Natural, ContractionMethod::StqLex, kN2, kOne);
    const Tpo t = parse_tpo("00 | 01 | 10 | 11");
    bool listed = false;
    for (const Witness& w : cr4.witnesses) {
      listed = listed || (w.tpos[0] == t && w.inputs[0] == kP && w.worlds[0] == World{3} && w.worlds[1] == World{1});
    }
    o.require(listed, "CR4 witness t = 00 | 01 | 10 | 11, A = p, x = 11, y = 01 not reported");
  });

  criterion(5, "iLIRC: brute-force closure equals the natural second step", 600, [](Outcome& o) {
    const auto tpos = all_tpos(2);
    for (ContractionMethod c : kContractionMethods) {
      for (const Tpo& t : tpos) {
        for (std::uint32_t bits = 1; bits < 16; ++bits) {
          const WorldSet a(bits);
          const Tpo contracted = contract(t, t.universe() - a, c);
          MixedSet delta = conditional_set(contracted);
          delta.add_plain(a);
          const Tpo brute = rational_closure(delta).tpo;
          const Tpo fast = rational_closure_fast(contracted, a);
          o.require(brute == fast, "closure differs at " + to_string(t));
          for (const Tpo& u : tpos) {
            if (satisfies(u, delta)) o.require(flatter_eq(fast, u), "not flattest at " + to_string(t));
          }
        }
      }
    }
    o.require(verify_claim(ClaimId::T4, 2, kOne).passed, "T4 report fails");
    o.require(verify_claim(ClaimId::L_flattest, 2, kOne).passed, "L_flattest report fails");
  });

  criterion(6, "naive Levi identity fails whenever A is not believed after contraction", 30, [](Outcome& o) {
    std::uint64_t applicable = 0, failing = 0;
    for (RevisionKind k : kRevisionKinds) {
      for (ContractionMethod c : kContractionMethods) {
        for (const Tpo& t : all_tpos(2)) {
          for (std::uint32_t bits = 1; bits < 16; ++bits) {
            const WorldSet a(bits);
            const Tpo contracted = contract(t, t.universe() - a, c);
            if (contracted.first_cell().subset_of(a)) continue;
            ++applicable;
            MixedSet naive = conditional_set(contracted);
            naive.add_plain(a);
            const PropConditional top_a{t.universe(), a};
            const bool omitted = !cn_extended_member(naive, top_a);
            const bool present = conditional_set(revise(t, a, k)).conds().contains(top_a);
            failing += omitted && present;
          }
        }
      }
    }
    o.require(applicable > 0 && failing == applicable,
              std::to_string(failing) + " of " + std::to_string(applicable) + " instances break the identity");
    o.require(verify_claim(ClaimId::P2, 2, kOne).passed, "P2 report fails");
  });

  criterion(7, "NLI composition inherits DP_i from CC_i", 60, [](Outcome& o) {
    const CheckReport r = verify_claim(ClaimId::P3, 2, kOne);
    o.require(r.passed && r.violations == 0, "P3 report fails");
  });

  criterion(8, "contraction fixed point regression", 1e-3, [](Outcome& o) {
    const Tpo t = parse_tpo("11 | 10 01 | 00");
    const Tpo c = contract(t, t.universe() - kP, ContractionMethod::StqLex);
    const Tpo expect = parse_tpo("11 | 10 | 01 | 00");
    const Tpo r = revise(t, kP, RevisionKind::Restrained);
    const Tpo l = revise(t, kP, RevisionKind::Lexicographic);
    o.require(c == t, "contraction moved to " + to_string(c));
    o.require(r == expect, "restrained gave " + to_string(r));
    o.require(l == expect, "lexicographic gave " + to_string(l));
    o.require(r.first_cell().subset_of(kP), "A not believed");
    o.require(!(conditional_set(c) == conditional_set(r)), "conditional sets coincide");
  });

  criterion(9, "Beta1 and Beta2 iff IIAI on 100 random DP operators", 300, [](Outcome& o) {
    int disagreements = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const RevisionMethod m = make_random_dp_operator(seed, 2);
      const bool iiai = passes(PostulateId::IIAI, m);
      const bool beta = passes(PostulateId::Beta1, m) && passes(PostulateId::Beta2, m);
      disagreements += iiai != beta;
    }
    o.require(disagreements == 0, std::to_string(disagreements) + " operators disagree");
    o.require(verify_claim(ClaimId::P1, 2, kOne).passed, "P1 report fails");
  });

  criterion(10, "reports are byte-identical across runs and worker counts", 600, [](Outcome& o) {
    auto both = [](const CheckReport& r) { return render_text(r) + render_json(r); };
    const CheckOptions many{4};
    for (PostulateId p : kAllPostulates) {
      for (RevisionKind k : kRevisionKinds) {
        const auto con = needs_contraction(p) ? std::optional{ContractionMethod::StqLex} : std::nullopt;
        const std::string a = both(check_postulate(p, k, con, kN2, kOne));
        const std::string b = both(check_postulate(p, k, con, kN2, kOne));
        const std::string c = both(check_postulate(p, k, con, kN2, many));
        o.require(a == b && b == c, std::string(to_string(p)) + " report varies");
      }
    }
    const RevisionMethod random = make_random_dp_operator(7, 2);
    for (PostulateId p : {PostulateId::IIAP, PostulateId::IIAI, PostulateId::Beta1, PostulateId::Neut}) {
      o.require(both(check_postulate(p, random, std::nullopt, kN2, kOne)) ==
                    both(check_postulate(p, random, std::nullopt, kN2, many)),
                std::string(to_string(p)) + " report on a random operator varies");
    }
    for (ClaimId c : kAllClaims) {
      const std::string a = both(verify_claim(c, 2, kOne));
      o.require(a == both(verify_claim(c, 2, kOne)) && a == both(verify_claim(c, 2, many)),
                std::string(to_string(c)) + " report varies");
    }
    for (char label : kDiagramLabels) {
      o.require(both(check_diagram(diagram(label), 2, kOne)) == both(check_diagram(diagram(label), 2, many)),
                std::string("diagram ") + label + " report varies");
    }
  });

  return failures == 0 ? 0 : 1;
}
