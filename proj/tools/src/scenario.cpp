#include "scenario.hpp"

#include <sstream>

namespace itrev::cli {

namespace {

constexpr std::string_view kSpace = " \t\r";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(kSpace) - b + 1);
}

// Splits off the first whitespace-delimited word of `rest`, advancing `rest`
// and `offset` past it.
std::string_view take_word(std::string_view& rest, std::size_t& offset) {
  const auto b = rest.find_first_not_of(kSpace);
  if (b == std::string_view::npos) {
    offset += rest.size();
    rest = {};
    return {};
  }
  const auto e = std::min(rest.find_first_of(kSpace, b), rest.size());
  const std::string_view word = rest.substr(b, e - b);
  offset += e;
  rest.remove_prefix(e);
  return word;
}

class LineParser {
 public:
  LineParser(int line, std::string_view text, std::size_t body_offset)
      : line_(line), rest_(text), offset_(body_offset) {}

  [[noreturn]] void fail(const std::string& reason, std::size_t at) const {
    throw ScenarioParseError(line_, reason, at);
  }
  [[noreturn]] void fail(const std::string& reason) const { fail(reason, offset_); }

  std::string_view word(const char* what) {
    const std::size_t before = offset_;
    const std::string_view w = take_word(rest_, offset_);
    if (w.empty()) fail(std::string("expected ") + what, before);
    return w;
  }

  RevisionKind revision() {
    const std::size_t at = offset_ + rest_.find_first_not_of(kSpace);
    const std::string_view w = word("a revision method");
    auto k = parse_revision_kind(w);
    if (!k) fail("unknown revision method '" + std::string(w) + "'", at);
    return *k;
  }

  ContractionMethod contraction() {
    const std::size_t at = offset_ + rest_.find_first_not_of(kSpace);
    const std::string_view w = word("a contraction method");
    auto m = parse_contraction_method(w);
    if (!m) fail("unknown contraction method '" + std::string(w) + "'", at);
    return *m;
  }

  template <class F>
  auto parse_rest(F&& parse) {
    const std::string_view body = trim(rest_);
    if (body.empty()) fail("expected a formula");
    const std::size_t base = offset_ + rest_.find_first_not_of(kSpace);
    try {
      return parse(body);
    } catch (const ParseError& e) {
      fail(e.reason(), base + e.offset());
    }
  }

 private:
  int line_;
  std::string_view rest_;
  std::size_t offset_;
};

Step parse_step(LineParser& p, const Signature& sig, std::string text) {
  Step step{StepKind::Revise, std::nullopt, std::nullopt, WorldSet(), std::move(text)};
  const std::string_view op = p.word("an operation");
  if (op == "revise") {
    step.revision = p.revision();
  } else if (op == "expand") {
    step.kind = StepKind::Expand;
    step.revision = p.revision();
  } else if (op == "contract") {
    step.kind = StepKind::Contract;
    step.contraction = p.contraction();
  } else if (op == "nli-revise") {
    step.kind = StepKind::NliRevise;
    step.contraction = p.contraction();
    step.revision = p.revision();
  } else {
    p.fail("unknown operation '" + std::string(op) + "'");
  }
  step.input = p.parse_rest([&](std::string_view f) { return models(parse_formula(f, sig), sig); });
  return step;
}

Query parse_query(LineParser& p, const Signature& sig, std::string text) {
  Query q{std::nullopt, WorldSet(), text};
  if (text.find("=>") != std::string::npos) {
    q.conditional = p.parse_rest([&](std::string_view f) { return semantics(parse_conditional(f, sig), sig); });
  } else {
    q.sentence = p.parse_rest([&](std::string_view f) { return models(parse_formula(f, sig), sig); });
  }
  return q;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  std::optional<Signature> atoms;
  std::optional<State> initial;
  std::vector<Step> steps;
  std::vector<Query> queries;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ScenarioParseError(line_no, "expected a section name", 0);
    const std::string_view section = trim(line.substr(0, colon));
    const std::string_view body = line.substr(colon + 1);
    LineParser p(line_no, body, colon + 1);

    if (section == "atoms") {
      if (atoms) p.fail("atoms declared twice", 0);
      std::vector<std::string> names;
      std::string_view rest = body;
      std::size_t offset = colon + 1;
      for (std::string_view w = take_word(rest, offset); !w.empty(); w = take_word(rest, offset)) {
        names.emplace_back(w);
      }
      try {
        atoms.emplace(std::move(names));
      } catch (const Error& e) {
        p.fail(e.what(), colon + 1);
      }
      continue;
    }
    if (!atoms) p.fail("'" + std::string(section) + "' before 'atoms'", 0);
    if (section == "initial") {
      if (initial) p.fail("initial state given twice", 0);
      initial = p.parse_rest([&](std::string_view s) {
        try {
          return parse_state(s, atoms->size());
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          throw ParseError(e.what(), 0);
        }
      });
    } else if (section == "step") {
      steps.push_back(parse_step(p, *atoms, std::string(trim(body))));
    } else if (section == "query") {
      queries.push_back(parse_query(p, *atoms, std::string(trim(body))));
    } else {
      p.fail("unknown section '" + std::string(section) + "'", 0);
    }
  }
  if (!atoms) throw ScenarioParseError(line_no, "missing 'atoms'", 0);
  if (!initial) throw ScenarioParseError(line_no, "missing 'initial'", 0);
  return Scenario{std::move(*atoms), std::move(*initial), std::move(steps), std::move(queries)};
}

namespace {

State apply(const Step& step, const State& s, int n) {
  switch (step.kind) {
    case StepKind::Revise:
      if (is_absurd(s)) throw AbsurdStateError("revision of the absurd state");
      return revise(std::get<Tpo>(s), step.input, *step.revision);
    case StepKind::Expand:
      return expand(s, step.input, *step.revision);
    case StepKind::Contract:
      return contract(s, step.input, *step.contraction, n);
    case StepKind::NliRevise: {
      const State c = contract(s, WorldSet::universe(n) - step.input, *step.contraction, n);
      return revise(std::get<Tpo>(c), step.input, *step.revision);
    }
  }
  return s;
}

TranscriptEntry entry(int index, std::string step, const State& s, const std::vector<Query>& queries) {
  TranscriptEntry e{index, std::move(step), s, beliefs(s), {}};
  for (const Query& q : queries) {
    bool answer = true;  // the absurd state accepts everything
    if (const Tpo* t = std::get_if<Tpo>(&s)) {
      answer = q.conditional ? conditional_holds(*t, *q.conditional) : beliefs(*t).subset_of(q.sentence);
    }
    e.answers.push_back({q.text, answer});
  }
  return e;
}

}  // namespace

Transcript run_scenario(const Scenario& scenario) {
  const int n = scenario.atoms.size();
  Transcript out;
  State state = scenario.initial;
  out.entries.push_back(entry(0, "", state, scenario.queries));
  for (std::size_t i = 0; i < scenario.steps.size(); ++i) {
    const int index = static_cast<int>(i) + 1;
    try {
      state = apply(scenario.steps[i], state, n);
    } catch (const Error& e) {
      out.failure = StepFailure{index, e.what()};
      break;
    }
    out.entries.push_back(entry(index, scenario.steps[i].text, state, scenario.queries));
  }
  return out;
}

}  // namespace itrev::cli
