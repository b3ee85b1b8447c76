#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "itrev/errors.hpp"
#include "itrev/tpo.hpp"
#include "oracle.hpp"

using namespace itrev;
using oracle::w;

namespace {

Tpo tpo(const char* text) { return parse_tpo(text); }

}  // namespace

TEST(TpoText, PrintsCellsLowestFirst) {
  const Tpo t = Tpo::from_partition({WorldSet::of(World{0}), WorldSet::of(World{3}), WorldSet(0b0110)}, 2);
  EXPECT_EQ(to_string(t), "00 | 11 | 01 10");
  EXPECT_EQ(to_string(Tpo::flat(1)), "0 1");
  EXPECT_EQ(t.rank(World{3}), 2);
  EXPECT_TRUE(t.tied(World{1}, World{2}));
  EXPECT_TRUE(t.less(World{0}, World{1}));
}

TEST(TpoText, ParseOfPrintIsIdentity) {
  for (const Tpo& t : all_tpos(2)) EXPECT_EQ(parse_tpo(to_string(t)), t);
  for (std::uint64_t i = 0; i < tpo_count(3); i += 997) {
    const Tpo t = tpo_at(3, i);
    EXPECT_EQ(parse_tpo(to_string(t), 3), t);
  }
}

TEST(TpoText, CellOrderWithinACellIsIrrelevant) {
  EXPECT_EQ(tpo("11 | 10 01 | 00"), tpo("11 | 01 10 | 00"));
  EXPECT_EQ(to_string(tpo("11 | 10 01 | 00")), "11 | 01 10 | 00");
}

TEST(TpoText, RejectsInvalidPartitions) {
  EXPECT_THROW(tpo("00 | 01 | 10"), InvalidPartitionError);
  EXPECT_THROW(tpo("00 01 | 01 10 11"), InvalidPartitionError);
  EXPECT_THROW(tpo("00 | | 01 10 11"), ParseError);
  EXPECT_THROW(tpo("00 | 01 | 10 | 111"), ParseError);
  EXPECT_THROW(tpo("0a | 01 10 11"), ParseError);
  EXPECT_THROW(parse_tpo("0 | 1", 2), ParseError);
  EXPECT_THROW(Tpo::from_partition({WorldSet(0b0011), WorldSet(0b0100)}, 2), InvalidPartitionError);
}

TEST(State, AbsurdText) {
  EXPECT_TRUE(is_absurd(parse_state("absurd", 2)));
  EXPECT_EQ(to_string(State{AbsurdState{}}), "absurd");
  EXPECT_EQ(std::get<Tpo>(parse_state("1 | 0", 1)), tpo("1 | 0"));
  EXPECT_TRUE(beliefs(State{AbsurdState{}}).empty());
  EXPECT_EQ(beliefs(tpo("01 10 | 00 11")), WorldSet(0b0110));
}

TEST(Enumeration, CountsAreFubiniNumbers) {
  EXPECT_EQ(tpo_count(1), 3u);
  EXPECT_EQ(tpo_count(2), 75u);
  EXPECT_EQ(tpo_count(3), 545835u);
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(tpo_count(n), oracle::fubini(1 << n)) << n;
  std::uint64_t visited = 0;
  for_each_tpo(3, [&](const Tpo&) {
    ++visited;
    return true;
  });
  EXPECT_EQ(visited, 545835u);
}

TEST(Enumeration, MatchesRankFunctionOracle) {
  for (int n = 1; n <= 2; ++n) {
    std::set<std::uint64_t> expect;
    for (const Tpo& t : oracle::all_orders(n)) expect.insert(t.key());
    std::set<std::uint64_t> got;
    for (const Tpo& t : all_tpos(n)) EXPECT_TRUE(got.insert(t.key()).second) << "duplicate " << to_string(t);
    EXPECT_EQ(got, expect);
  }
}

TEST(Enumeration, FirstOrderIsTheStrictWorldOrder) {
  EXPECT_EQ(to_string(all_tpos(2).front()), "00 | 01 | 10 | 11");
}

TEST(Enumeration, RankAndUnrankAreInverse) {
  const auto tpos = all_tpos(2);
  for (std::uint64_t i = 0; i < tpos.size(); ++i) {
    EXPECT_EQ(tpo_at(2, i), tpos[i]);
    EXPECT_EQ(tpo_index(tpos[i]), i);
  }
  for (std::uint64_t i = 0; i < tpo_count(3); i += 1237) EXPECT_EQ(tpo_index(tpo_at(3, i)), i);
  EXPECT_THROW(tpo_at(2, 75), Error);
}

TEST(Enumeration, StopsWhenVisitorSaysSo) {
  int seen = 0;
  for_each_tpo(2, [&](const Tpo&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5);
}

TEST(MinWorlds, MatchesDefinition) {
  for (const Tpo& t : all_tpos(2)) {
    for (std::uint32_t a = 1; a < 16; ++a) EXPECT_EQ(min_worlds(t, WorldSet(a)), oracle::min_of(t, WorldSet(a)));
  }
  EXPECT_THROW(min_worlds(Tpo::flat(2), WorldSet()), EmptySetError);
}

TEST(Flatness, MatchesCellwiseDefinition) {
  const auto tpos = all_tpos(2);
  for (const Tpo& a : tpos) {
    for (const Tpo& b : tpos) EXPECT_EQ(flatter_eq(a, b), oracle::flatter_eq(a, b)) << to_string(a) << " vs " << to_string(b);
  }
  EXPECT_TRUE(flatter_eq(Tpo::flat(2), tpo("00 | 01 10 11")));
  EXPECT_TRUE(flatter_eq(tpo("00 | 01 10 11"), tpo("00 | 01 | 10 11")));
  EXPECT_FALSE(flatter_eq(tpo("00 | 01 10 11"), tpo("01 | 00 10 11")));
}

TEST(Flatness, IsAPartialOrder) {
  const auto tpos = all_tpos(2);
  for (const Tpo& a : tpos) {
    EXPECT_TRUE(flatter_eq(a, a));
    for (const Tpo& b : tpos) {
      if (a != b) EXPECT_FALSE(flatter_eq(a, b) && flatter_eq(b, a));
    }
  }
}

TEST(Agreement, PairsAndInputs) {
  const Tpo t = tpo("00 | 01 10 | 11");
  const Tpo u = tpo("00 01 10 | 11");
  EXPECT_TRUE(agrees_on(t, u, w(0), w(3)));
  EXPECT_FALSE(agrees_on(t, u, w(0), w(1)));
  const WorldSet p(0b1100);
  EXPECT_EQ(input_cmp(p, w(2), w(1)), InputRelation::StrictlyBelow);
  EXPECT_EQ(input_cmp(p, w(2), w(3)), InputRelation::Tied);
  EXPECT_EQ(input_cmp(p, w(0), w(3)), InputRelation::StrictlyAbove);
  EXPECT_TRUE(inputs_agree_on(p, WorldSet(0b1000), w(3), w(0)));
  EXPECT_FALSE(inputs_agree_on(p, WorldSet(0b1000), w(3), w(2)));
}

namespace {

// All 24 permutations of the 4 worlds of n = 2.
std::vector<Permutation> all_permutations() {
  std::vector<Permutation> out;
  std::array<std::uint8_t, 4> img{0, 1, 2, 3};
  do {
    Permutation p = Permutation::identity(4);
    std::copy(img.begin(), img.end(), p.image.begin());
    out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool iso_by_definition(const Tpo& t1, const Tpo& t2, WorldSet a, const Permutation& pi) {
  for (World x : oracle::worlds(2)) {
    for (World y : oracle::worlds(2)) {
      if (t1.leq(x, y) != t2.leq(pi(x), pi(y))) return false;
      if (input_leq(a, x, y) != input_leq(a, pi(x), pi(y))) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Isomorphisms, PermuteTransportsTheOrder) {
  const Tpo t = tpo("00 | 01 10 | 11");
  for (const Permutation& pi : all_permutations()) {
    const Tpo u = permute(t, pi);
    for (World x : oracle::worlds(2)) {
      for (World y : oracle::worlds(2)) EXPECT_EQ(t.leq(x, y), u.leq(pi(x), pi(y)));
    }
  }
}

TEST(Isomorphisms, EnumerationMatchesBruteForce) {
  const auto tpos = all_tpos(2);
  const auto perms = all_permutations();
  for (std::size_t i = 0; i < tpos.size(); i += 4) {
    for (std::size_t j = 0; j < tpos.size(); j += 3) {
      for (std::uint32_t a : {0b1100u, 0b1001u, 0b0001u, 0b1111u}) {
        std::vector<Permutation> expect;
        for (const Permutation& pi : perms) {
          if (iso_by_definition(tpos[i], tpos[j], WorldSet(a), pi)) expect.push_back(pi);
        }
        const auto got = enumerate_a_preserving_isos(tpos[i], tpos[j], WorldSet(a));
        ASSERT_EQ(got.size(), expect.size());
        for (const Permutation& pi : got) {
          EXPECT_TRUE(is_a_preserving_iso(tpos[i], tpos[j], WorldSet(a), pi));
          EXPECT_NE(std::find(expect.begin(), expect.end(), pi), expect.end());
        }
      }
    }
  }
}

TEST(Isomorphisms, IdentityComesFirstForSelfMaps) {
  const Tpo t = tpo("00 11 | 01 10");
  const auto isos = enumerate_a_preserving_isos(t, t, WorldSet(0b1100));
  ASSERT_FALSE(isos.empty());
  EXPECT_EQ(isos.front(), Permutation::identity(4));
}

TEST(ConditionalBeliefs, RamseyTest) {
  const Tpo t = tpo("00 | 11 | 01 10");
  EXPECT_TRUE(conditional_holds(t, PropConditional{WorldSet(0b1100), WorldSet(0b1000)}));   // p => p & q
  EXPECT_FALSE(conditional_holds(t, PropConditional{WorldSet(0b0110), WorldSet(0b0100)}));  // tie
  EXPECT_TRUE(conditional_holds(t, PropConditional{WorldSet(), WorldSet()}));
}

TEST(ConditionalBeliefs, SetMatchesRamseyOracle) {
  for (const Tpo& t : all_tpos(2)) {
    const MixedSet delta = conditional_set(t);
    std::size_t expect_conds = 0;
    for (std::uint32_t a = 1; a < 16; ++a) {
      for (std::uint32_t b = 0; b < 16; ++b) {
        const bool in = delta.conds().contains(PropConditional{WorldSet(a), WorldSet(b)});
        EXPECT_EQ(in, oracle::ramsey(t, WorldSet(a), WorldSet(b)));
        expect_conds += in;
      }
    }
    EXPECT_EQ(delta.conds().size(), expect_conds);
    for (std::uint32_t b = 0; b < 16; ++b) {
      EXPECT_EQ(delta.plain().contains(WorldSet(b)), t.first_cell().subset_of(WorldSet(b)));
    }
  }
}

TEST(ConditionalBeliefs, MinimalMapDeterminesTheOrder) {
  std::set<std::vector<WorldSet>> maps;
  for (const Tpo& t : all_tpos(2)) {
    const auto mm = minimal_map(t);
    for (std::uint32_t a = 1; a < 16; ++a) EXPECT_EQ(mm[a], oracle::min_of(t, WorldSet(a)));
    maps.insert(mm);
  }
  EXPECT_EQ(maps.size(), 75u);
}
