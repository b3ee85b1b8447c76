#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "itrev/conditionals.hpp"
#include "itrev/errors.hpp"
#include "itrev/postulates.hpp"
#include "scenario.hpp"

namespace itrev::cli {

namespace {

using nlohmann::ordered_json;

struct Usage : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Built-in names, plus `random-dp:<seed>` and `random-per-state:<seed>`.
RevisionMethod revision_method(const std::string& name, int n_atoms) {
  if (auto k = parse_revision_kind(name)) return *k;
  for (auto [prefix, make] : {std::pair{std::string_view("random-dp:"), &make_random_dp_operator},
                              std::pair{std::string_view("random-per-state:"), &make_random_per_state_operator}}) {
    if (!name.starts_with(prefix)) continue;
    std::uint64_t seed = 0;
    const char* first = name.data() + prefix.size();
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, seed);
    if (ec != std::errc() || ptr != last || first == last) break;
    return make(seed, n_atoms);
  }
  throw Usage("unknown revision method '" + name + "'");
}

struct Globals {
  std::string format = "text";
  bool machine() const { return format == "machine"; }
};

// run

struct RunArgs {
  std::string file;
};

ordered_json entry_json(const TranscriptEntry& e, const Signature& sig) {
  ordered_json j;
  j["index"] = e.index;
  j["step"] = e.index == 0 ? "initial" : e.step;
  j["state"] = to_string(e.state);
  j["beliefs"] = render_dnf(e.beliefs, sig);
  j["queries"] = ordered_json::array();
  for (const QueryAnswer& a : e.answers) j["queries"].push_back(ordered_json{{"query", a.query}, {"answer", a.answer}});
  return j;
}

int cmd_run(const Globals& g, const RunArgs& a, std::ostream& out, std::ostream& err) {
  Scenario scenario = [&] {
    try {
      return parse_scenario(read_file(a.file));
    } catch (const ParseError& e) {
      throw Usage(a.file + ": " + e.what());
    }
  }();
  const Transcript t = run_scenario(scenario);
  if (g.machine()) {
    ordered_json doc;
    doc["atoms"] = ordered_json::array();
    for (int i = 0; i < scenario.atoms.size(); ++i) doc["atoms"].push_back(scenario.atoms.atom(i));
    doc["steps"] = ordered_json::array();
    for (const TranscriptEntry& e : t.entries) doc["steps"].push_back(entry_json(e, scenario.atoms));
    if (t.failure) doc["error"] = ordered_json{{"step", t.failure->index}, {"message", t.failure->message}};
    out << doc.dump(2) << "\n";
  } else {
    for (const TranscriptEntry& e : t.entries) {
      out << "step " << e.index << ": " << (e.index == 0 ? "initial" : e.step) << "\n";
      out << "  state: " << to_string(e.state) << "\n";
      out << "  beliefs: " << render_dnf(e.beliefs, scenario.atoms) << "\n";
      for (const QueryAnswer& q : e.answers) out << "  query " << q.query << ": " << (q.answer ? "yes" : "no") << "\n";
    }
  }
  if (t.failure) {
    err << "error: step " << t.failure->index << " (" << scenario.steps[static_cast<std::size_t>(t.failure->index - 1)].text
        << "): " << t.failure->message << "\n";
    return kExitSemantic;
  }
  return kExitOk;
}

// check / verify / diagram

struct CheckArgs {
  std::string postulate;
  std::string revision;
  std::string contraction;
  int n_atoms = 2;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::uint64_t sample = 10000;
  unsigned workers = 0;
};

int report(const Globals& g, const CheckReport& r, std::ostream& out) {
  out << (g.machine() ? render_json(r) : render_text(r));
  return r.passed ? kExitOk : kExitFail;
}

int cmd_check(const Globals& g, const CheckArgs& a, std::ostream& out) {
  auto p = parse_postulate(a.postulate);
  if (!p) throw Usage("unknown postulate '" + a.postulate + "'");
  auto mode = parse_check_mode(a.mode);
  if (!mode) throw Usage("unknown mode '" + a.mode + "'");
  std::optional<ContractionMethod> con;
  if (!a.contraction.empty()) {
    con = parse_contraction_method(a.contraction);
    if (!con) throw Usage("unknown contraction method '" + a.contraction + "'");
  }
  if (a.n_atoms < 1) throw Usage("--n must be positive");
  const RevisionMethod rev = revision_method(a.revision, a.n_atoms);
  const CheckScope scope{a.n_atoms, *mode, a.sample, a.seed};
  try {
    return report(g, check_postulate(*p, rev, con, scope, CheckOptions{a.workers}), out);
  } catch (const ScopeError& e) {
    throw Usage(e.what());
  } catch (const MissingContractionError& e) {
    throw Usage(e.what());
  }
}

struct VerifyArgs {
  std::string claim;
  int n_atoms = 2;
  unsigned workers = 0;
};

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  auto c = parse_claim(a.claim);
  if (!c) throw Usage("unknown claim '" + a.claim + "'");
  try {
    return report(g, verify_claim(*c, a.n_atoms, CheckOptions{a.workers}), out);
  } catch (const ScopeError& e) {
    throw Usage(e.what());
  }
}

int cmd_diagram(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  if (a.claim.size() != 1) throw Usage("diagrams are labelled a to f");
  try {
    return report(g, check_diagram(diagram(a.claim[0]), a.n_atoms, CheckOptions{a.workers}), out);
  } catch (const MalformedDiagramError& e) {
    throw Usage(e.what());
  } catch (const ScopeError& e) {
    throw Usage(e.what());
  }
}

// closure / condset

struct ClosureArgs {
  std::string file;
  int n_atoms = 0;
  std::vector<std::string> atoms;
  std::vector<std::string> plus;
};

Signature signature(const ClosureArgs& a) {
  if (a.atoms.empty()) {
    const int n = a.n_atoms == 0 ? 2 : a.n_atoms;
    if (n < 1 || n > 3) throw Usage("--n must be between 1 and 3");
    return Signature::standard(n);
  }
  if (a.n_atoms != 0 && a.n_atoms != static_cast<int>(a.atoms.size())) throw Usage("--n does not match --atoms");
  if (a.atoms.size() > 3) throw Usage("at most 3 atoms");
  try {
    return Signature(a.atoms);
  } catch (const Error& e) {
    throw Usage(e.what());
  }
}

int cmd_closure(const Globals& g, const ClosureArgs& a, std::ostream& out, std::ostream& err) {
  const Signature sig = signature(a);
  const MixedSet delta = [&] {
    try {
      return parse_mixed_set(read_file(a.file), sig);
    } catch (const ParseError& e) {
      throw Usage(a.file + ": " + e.what());
    }
  }();
  std::optional<Tpo> result = closure_fast_path(delta);
  const bool fast = result.has_value();
  std::string failure;
  int code = kExitOk;
  if (!result) {
    try {
      result = rational_closure(delta).tpo;
    } catch (const UnsatisfiableError& e) {
      failure = "unsatisfiable";
      code = kExitFail;
    } catch (const NoMaximumError& e) {
      failure = "no-maximum";
      code = kExitNoMaximum;
    }
  }
  if (g.machine()) {
    ordered_json doc;
    doc["outcome"] = result ? "closed" : failure;
    if (result) doc["tpo"] = to_string(*result);
    doc["fast_path"] = fast;
    out << doc.dump(2) << "\n";
  } else if (result) {
    out << to_string(*result) << "\n" << "fast path: " << (fast ? "yes" : "no") << "\n";
  }
  if (!result) err << "error: " << (code == kExitFail ? "no order satisfies the set" : "the satisfying orders have no flattest element") << "\n";
  return code;
}

int cmd_condset(const Globals& g, const ClosureArgs& a, std::ostream& out) {
  Tpo t = [&] {
    try {
      return parse_tpo(a.file);
    } catch (const Error& e) {
      throw Usage(e.what());
    }
  }();
  ClosureArgs with_n = a;
  if (with_n.n_atoms == 0) with_n.n_atoms = t.n_atoms();
  const Signature sig = signature(with_n);
  if (sig.size() != t.n_atoms()) throw Usage("the order has " + std::to_string(t.n_atoms()) + " atoms");
  MixedSet delta = conditional_set(t);
  for (const std::string& f : a.plus) {
    try {
      delta.add(parse_formula(f, sig), sig);
    } catch (const ParseError& e) {
      throw Usage(f + ": " + e.what());
    }
  }
  if (g.machine()) {
    ordered_json doc;
    doc["plain"] = ordered_json::array();
    for (WorldSet s : delta.plain()) doc["plain"].push_back(render_dnf(s, sig));
    doc["conditionals"] = ordered_json::array();
    for (const PropConditional& c : delta.conds()) {
      doc["conditionals"].push_back(render_dnf(c.antecedent, sig) + " => " + render_dnf(c.consequent, sig));
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  for (WorldSet s : delta.plain()) out << render_dnf(s, sig) << "\n";
  for (const PropConditional& c : delta.conds()) {
    out << render_dnf(c.antecedent, sig) << " => " << render_dnf(c.consequent, sig) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iterated belief revision toolkit", "itrev"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "machine"}));

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "Execute a scenario file");
  run->add_option("file", run_args.file)->required();

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "Check a postulate against operators");
  check->add_option("postulate", check_args.postulate)->required();
  check->add_option("revision", check_args.revision)->required();
  check->add_option("contraction", check_args.contraction);
  check->add_option("--n", check_args.n_atoms, "Number of atoms")->capture_default_str();
  check->add_option("--mode", check_args.mode, "exhaustive or sampled")->capture_default_str();
  check->add_option("--seed", check_args.seed)->capture_default_str();
  check->add_option("--sample", check_args.sample, "Draws in sampled mode")->capture_default_str();
  check->add_option("--workers", check_args.workers, "0 = all cores")->capture_default_str();

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Verify one of the built-in claims");
  verify->add_option("claim", verify_args.claim)->required();
  verify->add_option("--n", verify_args.n_atoms)->capture_default_str();
  verify->add_option("--workers", verify_args.workers, "0 = all cores")->capture_default_str();

  VerifyArgs diagram_args;
  CLI::App* diag = app.add_subcommand("diagram", "Search a state diagram for DP violations");
  diag->add_option("label", diagram_args.claim, "a to f")->required();
  diag->add_option("--n", diagram_args.n_atoms)->capture_default_str();
  diag->add_option("--workers", diagram_args.workers, "0 = all cores")->capture_default_str();

  ClosureArgs closure_args;
  CLI::App* closure = app.add_subcommand("closure", "Rational closure of a conditional set file");
  closure->add_option("file", closure_args.file)->required();
  closure->add_option("--n", closure_args.n_atoms, "Number of atoms (default 2, or the --atoms count)");
  closure->add_option("--atoms", closure_args.atoms, "Atom names (default p q r ...)");

  ClosureArgs condset_args;
  CLI::App* condset = app.add_subcommand("condset", "Print the conditional set of an order, in closure file syntax");
  condset->add_option("tpo", condset_args.file, "e.g. '00 11 | 01 10'")->required();
  condset->add_option("--atoms", condset_args.atoms);
  condset->add_option("--plus", condset_args.plus, "Extra plain formulas");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(g, run_args, out, err);
    if (check->parsed()) return cmd_check(g, check_args, out);
    if (verify->parsed()) return cmd_verify(g, verify_args, out);
    if (diag->parsed()) return cmd_diagram(g, diagram_args, out);
    if (closure->parsed()) return cmd_closure(g, closure_args, out, err);
    if (condset->parsed()) return cmd_condset(g, condset_args, out);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitUsage;
}

}  // namespace itrev::cli
