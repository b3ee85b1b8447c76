#include <gtest/gtest.h>

#include "itrev/errors.hpp"
#include "itrev/postulates.hpp"

using namespace itrev;

class Claims : public testing::TestWithParam<ClaimId> {};

TEST_P(Claims, PassAtTwoAtoms) {
  const CheckReport r = verify_claim(GetParam(), 2, CheckOptions{1});
  EXPECT_TRUE(r.passed) << render_text(r);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_EQ(r.subject, to_string(GetParam()));
}

INSTANTIATE_TEST_SUITE_P(All, Claims, testing::ValuesIn(kAllClaims),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(ClaimScope, OneAtomWhereMeaningful) {
  for (ClaimId c : {ClaimId::T1, ClaimId::T2, ClaimId::T4, ClaimId::P2, ClaimId::L_flattest}) {
    EXPECT_TRUE(verify_claim(c, 1, CheckOptions{1}).passed) << to_string(c);
  }
  EXPECT_THROW(verify_claim(ClaimId::P5, 1), ScopeError);
  EXPECT_THROW(verify_claim(ClaimId::T2, 3), ScopeError);
}

TEST(ClaimTables, PairTableHasNineRows) {
  const CheckReport r = verify_claim(ClaimId::T2, 2, CheckOptions{1});
  ASSERT_EQ(r.table.size(), 9u);
  EXPECT_EQ(r.table_columns,
            (std::vector<std::string>{"CC1-4", "NLI", "CR1", "CR2", "CR3", "CR4", "SPU", "WPU"}));
  int all_yes = 0, all_no = 0;
  for (const TableRow& row : r.table) {
    const bool nli = row.values[1] == "yes";
    const bool cr = row.values[2] == "yes" && row.values[3] == "yes" && row.values[4] == "yes" && row.values[5] == "yes";
    const bool pu = row.values[6] == "yes" && row.values[7] == "yes";
    EXPECT_EQ(nli, cr) << row.label;
    EXPECT_EQ(cr, pu) << row.label;
    all_yes += nli;
    all_no += !nli;
  }
  EXPECT_GT(all_yes, 0);
  EXPECT_GT(all_no, 0);
  EXPECT_EQ(r.table[8].label, "lexicographic + contract-stq-lex");
  EXPECT_EQ(r.table[8].values[1], "yes");
  EXPECT_EQ(r.table[2].label, "natural + contract-stq-lex");
  EXPECT_EQ(r.table[2].values[1], "no");
}

TEST(ClaimTables, ElementarityTable) {
  const CheckReport r = verify_claim(ClaimId::T1, 2, CheckOptions{1});
  ASSERT_EQ(r.table.size(), 3u);
  EXPECT_EQ(r.table_columns.size(), 10u);
  for (const TableRow& row : r.table) {
    for (const std::string& v : row.values) EXPECT_EQ(v, "pass") << row.label;
  }
  int diagram_notes = 0;
  for (const std::string& n : r.notes) diagram_notes += n.starts_with("diagram (");
  EXPECT_EQ(diagram_notes, 6);
}

TEST(ClaimTables, FixedPointReplayRows) {
  const CheckReport r = verify_claim(ClaimId::P5, 2, CheckOptions{1});
  for (const TableRow& row : r.table) EXPECT_EQ(row.values.back(), "yes") << row.label;
}

TEST(ClaimTables, DeterministicAcrossWorkers) {
  for (ClaimId c : {ClaimId::T1, ClaimId::T2, ClaimId::P1}) {
    EXPECT_EQ(render_json(verify_claim(c, 2, CheckOptions{1})), render_json(verify_claim(c, 2, CheckOptions{3})));
  }
}
