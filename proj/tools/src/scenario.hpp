#pragma once

// Line-oriented scenario files: a signature, an initial state, a sequence of
// belief-change steps and queries answered after every step.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itrev/errors.hpp"
#include "itrev/lang.hpp"
#include "itrev/operators.hpp"
#include "itrev/tpo.hpp"

namespace itrev::cli {

enum class StepKind { Revise, Contract, Expand, NliRevise };

struct Step {
  StepKind kind;
  std::optional<RevisionKind> revision;
  std::optional<ContractionMethod> contraction;
  WorldSet input;
  std::string text;  // the step line after `step:`
};

struct Query {
  std::optional<PropConditional> conditional;  // unset for a belief query
  WorldSet sentence;
  std::string text;
};

struct Scenario {
  Signature atoms;
  State initial;
  std::vector<Step> steps;
  std::vector<Query> queries;
};

/// Parse failure with the 1-based line it occurred on.
class ScenarioParseError : public ParseError {
 public:
  ScenarioParseError(int line, const std::string& reason, std::size_t offset)
      : ParseError("line " + std::to_string(line) + ": " + reason, offset), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

Scenario parse_scenario(std::string_view text);

struct QueryAnswer {
  std::string query;
  bool answer;
};

struct TranscriptEntry {
  int index;  // 0 for the initial state
  std::string step;
  State state;
  WorldSet beliefs;
  std::vector<QueryAnswer> answers;
};

struct StepFailure {
  int index;
  std::string message;
};

struct Transcript {
  std::vector<TranscriptEntry> entries;
  std::optional<StepFailure> failure;
};

/// Runs every step; stops at the first step whose operation throws.
Transcript run_scenario(const Scenario& scenario);

}  // namespace itrev::cli
