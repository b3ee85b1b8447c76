#pragma once

// Executable postulates, the exhaustive/sampled checking harness, the
// state-diagram exclusion search and the claim verifier.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itrev/lang.hpp"
#include "itrev/operators.hpp"
#include "itrev/tpo.hpp"

namespace itrev {

enum class PostulateId {
  Success,
  DP1, DP2, DP3, DP4,
  CC1, CC2, CC3, CC4,
  CR1, CR2, CR3, CR4,
  SPU, WPU,
  IIAP, IIAI, Beta1, Beta2, Neut,
  Red,
  HI_beliefs, LI_beliefs,
  NLI, iLIRC,
};

inline constexpr PostulateId kAllPostulates[] = {
    PostulateId::Success, PostulateId::DP1,   PostulateId::DP2,        PostulateId::DP3,
    PostulateId::DP4,     PostulateId::CC1,   PostulateId::CC2,        PostulateId::CC3,
    PostulateId::CC4,     PostulateId::CR1,   PostulateId::CR2,        PostulateId::CR3,
    PostulateId::CR4,     PostulateId::SPU,   PostulateId::WPU,        PostulateId::IIAP,
    PostulateId::IIAI,    PostulateId::Beta1, PostulateId::Beta2,      PostulateId::Neut,
    PostulateId::Red,     PostulateId::HI_beliefs, PostulateId::LI_beliefs, PostulateId::NLI,
    PostulateId::iLIRC,
};

std::string_view to_string(PostulateId p);
std::optional<PostulateId> parse_postulate(std::string_view name);
/// CC*, CR*, SPU, WPU, HI_beliefs, LI_beliefs, NLI and iLIRC.
bool needs_contraction(PostulateId p);

enum class ClaimId { T1, T2, T3, Cor1, T4, P1, P2, P3, P5, L_flattest };

inline constexpr ClaimId kAllClaims[] = {ClaimId::T1, ClaimId::T2, ClaimId::T3, ClaimId::Cor1,
                                         ClaimId::T4, ClaimId::P1, ClaimId::P2, ClaimId::P3,
                                         ClaimId::P5, ClaimId::L_flattest};

std::string_view to_string(ClaimId c);
std::optional<ClaimId> parse_claim(std::string_view name);

enum class CheckMode { Exhaustive, Sampled };

std::string_view to_string(CheckMode m);
std::optional<CheckMode> parse_check_mode(std::string_view name);

struct CheckScope {
  int n_atoms = 2;
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t sample = 10000;  // sampled mode only
  std::uint64_t seed = 0;        // sampled mode only
};

struct CheckOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// One quantifier instance. Which orders, inputs and worlds appear depends on
/// the postulate (see holds); `detail` is a human-readable account.
struct Witness {
  std::vector<Tpo> tpos;
  std::vector<WorldSet> inputs;
  std::vector<World> worlds;
  std::optional<Permutation> permutation;
  std::string detail;
};

struct TableRow {
  std::string label;
  std::vector<std::string> values;
};

inline constexpr std::size_t kWitnessCap = 10;

struct CheckReport {
  std::string subject;
  /// Operator names the check ran against, e.g. {"natural", "contract-stq-lex"}.
  std::vector<std::string> operators;
  CheckScope scope;
  bool passed = true;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  /// The first kWitnessCap violations in enumeration order.
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  std::vector<std::string> table_columns;
  std::vector<TableRow> table;
};

/// Checks `p` over every Tpo (exhaustive, n_atoms ≤ 2) or over `sample`
/// seeded draws (sampled, n_atoms ≤ 3), with inputs ranging over nonempty
/// model sets. Throws MissingContractionError and ScopeError.
///
/// Witness layout per postulate:
///   Success, Red, HI_beliefs, LI_beliefs, NLI, iLIRC: tpos {t}, inputs {A}
///   DP*, CC*, CR*, SPU, WPU:  tpos {t}, inputs {A}, worlds {x, y}
///   IIAP:                     tpos {t, t'}, inputs {A}, worlds {x, y}
///   IIAI, Beta1, Beta2:       tpos {t}, inputs {A, B}, worlds {x, y}
///   Neut:                     tpos {t, t'}, inputs {A}, worlds {x, y}, permutation
/// CC* and HI_beliefs take A as the contraction input; CR*, SPU, WPU,
/// LI_beliefs, NLI and iLIRC take A as the revision input and contract by ¬A.
CheckReport check_postulate(PostulateId p, const RevisionMethod& rev, std::optional<ContractionMethod> con,
                            const CheckScope& scope, const CheckOptions& options = {});

/// Evaluates the postulate on a single instance laid out as above.
bool holds(PostulateId p, const RevisionMethod& rev, std::optional<ContractionMethod> con, const Witness& w);

/// Relation between x ∈ A and y ∉ A, from x's side.
enum class PairRelation { XBelow, Tied, YBelow };

std::string_view to_string(PairRelation r);

/// A map from the prior relation of x ∈ A, y ∉ A (neither minimal in A) to
/// their posterior relation, indexed by PairRelation.
struct Diagram {
  std::string name;
  std::array<PairRelation, 3> image;
};

/// The six diagrams that never move x downwards, labelled 'a' to 'f':
/// (a) restrained, (b) lexicographic, (c) natural, then (d), (e), (f).
Diagram diagram(char label);
inline constexpr char kDiagramLabels[] = {'a', 'b', 'c', 'd', 'e', 'f'};

/// Searches every (t, A) at n_atoms ≤ 2 for a configuration where the
/// diagram forces a posterior relation contradicting DP1/DP2. Witnesses have
/// tpos {t}, inputs {A} and worlds {x, y, z}: x ∈ A while y, z lie on one
/// side, with z strictly below y before revision and the diagram forcing
/// y at or below z after. For (a) to (c) the forced relation is also
/// compared with the matching operator. Throws MalformedDiagramError.
CheckReport check_diagram(const Diagram& d, int n_atoms, const CheckOptions& options = {});

bool diagram_holds(const Diagram& d, const Witness& w);

/// n_atoms ≤ 2. Throws ScopeError.
CheckReport verify_claim(ClaimId claim, int n_atoms, const CheckOptions& options = {});

/// Tpos in the `|` form, inputs as formulas over p, q, r, s, worlds as bit-strings.
std::string render_text(const CheckReport& report);
/// A single JSON document with the same content as render_text.
std::string render_json(const CheckReport& report);

/// Shortest of: a constant, a literal, or the canonical DNF.
std::string render_proposition(WorldSet s, int n_atoms);

}  // namespace itrev
