#include <gtest/gtest.h>

#include <map>
#include <set>

#include "grothpd/pipe_dream.hpp"
#include "grothpd/special.hpp"
#include "support.hpp"

using namespace grothpd;
using grothpd::testing::dream;
using grothpd::testing::perm;

namespace {

// The seven marked reduced dreams of 2143, first three unmarked.
const std::vector<std::string> kDreams2143 = {
    "XBXB/BBB/BB/B", "XBBB/BXB/BB/B", "XBBB/BBB/XB/B", "XBXB/BMB/BB/B",
    "XBBB/BXB/MB/B", "XBXB/BBB/MB/B", "XBXB/BMB/MB/B",
};

// Every filling of the off-diagonal cells of a rank-m staircase.
std::vector<PipeDream> all_fillings(int m) {
  std::vector<Position> cells;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j < m + 1 - i; ++j) cells.push_back({i, j});
  std::vector<PipeDream> out;
  for (std::uint32_t mask = 0; mask < (1u << cells.size()); ++mask) {
    std::vector<Position> crosses;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (mask >> k & 1u) crosses.push_back(cells[k]);
    out.push_back(PipeDream::from_positions(m, crosses));
  }
  return out;
}

MultiPoly mono(int nvars, std::vector<std::uint16_t> xs, std::uint16_t b = 0) {
  Exponent e{b};
  e.insert(e.end(), xs.begin(), xs.end());
  e.resize(static_cast<std::size_t>(nvars) + 1, 0);
  return MultiPoly::monomial(nvars, e);
}

}  // namespace

TEST(PipeDream, ConstructionChecks) {
  EXPECT_EQ(PipeDream(3).tile_string(), "BBB/BB/B");
  EXPECT_EQ(PipeDream().rank(), 0);
  EXPECT_THROW(dream("XBX/BB/B"), std::invalid_argument);   // cross on the diagonal
  EXPECT_THROW(dream("BB/BB/B"), std::invalid_argument);    // short row
  EXPECT_THROW(dream("BBM/BB/B"), std::invalid_argument);   // diagonal marked
  EXPECT_THROW(dream("BB/B", {2, 1}), std::invalid_argument);
  EXPECT_THROW(PipeDream(-1), std::invalid_argument);
  PipeDream p(3);
  EXPECT_THROW(p.set({2, 2}, Tile::Cross), std::invalid_argument);
  p.set({1, 2}, Tile::Cross);
  EXPECT_EQ(p.tile_string(), "BXB/BB/B");
}

TEST(PipeDream, ColumnsAndPositions) {
  const PipeDream p = dream("XBXB/BMB/MB/B");
  EXPECT_EQ(p.column(1), (std::vector<Tile>{Tile::Cross, Tile::Bump, Tile::MarkedBump, Tile::Bump}));
  EXPECT_EQ(p.column(4), (std::vector<Tile>{Tile::Bump}));
  EXPECT_EQ(PipeDream::from_columns(p.columns()), p);
  EXPECT_EQ(p.positions_of(Tile::MarkedBump), (std::vector<Position>{{2, 2}, {3, 1}}));
  EXPECT_EQ(p.count(Tile::Cross), 2);
  EXPECT_EQ(p.unmarked().tile_string(), "XBXB/BBB/BB/B");
}

TEST(Trace, FirstDreamOf2143) {
  const PipeDream p = dream("XBXB/BBB/BB/B");
  EXPECT_EQ(exit_word(p), (std::vector<int>{2, 1, 4, 3}));
  EXPECT_EQ(permutation_of(p), perm("2143"));
  EXPECT_TRUE(is_reduced(p));
  EXPECT_EQ(markable_bumps(p), (std::vector<Position>{{2, 2}, {3, 1}}));
}

TEST(Trace, AgreesWithOracleOnEveryFilling) {
  for (int m = 1; m <= 5; ++m)
    for (const auto& p : all_fillings(m)) {
      const auto t = grothpd::testing::oracle_trace(p);
      ASSERT_EQ(exit_word(p), t.exits) << p.tile_string();
      ASSERT_EQ(is_reduced(p), grothpd::testing::oracle_reduced(p)) << p.tile_string();
      // Reduced exactly when the crosses form a reduced word of the exit
      // permutation.
      ASSERT_EQ(is_reduced(p), p.count(Tile::Cross) == permutation_of(p).length()) << p.tile_string();
      if (is_reduced(p)) ASSERT_EQ(markable_bumps(p), grothpd::testing::oracle_markable(p)) << p.tile_string();
    }
}

TEST(Trace, PipesCrossingTwice) {
  // Crosses at (1,2) and (2,1) both swap pipes 2 and 3.
  const PipeDream p = dream("BXBB/XBB/BB/B");
  EXPECT_FALSE(is_reduced(p));
  EXPECT_EQ(exit_word(p), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_TRUE(is_reduced(dream("XXB/XB/B")));
}

TEST(Enumerate, Mrpd2143) {
  const auto mrpd = enumerate_mrpd(perm("2143"));
  std::set<std::string> got, want(kDreams2143.begin(), kDreams2143.end());
  for (const auto& p : mrpd) got.insert(p.tile_string());
  EXPECT_EQ(got, want);
  EXPECT_EQ(mrpd.size(), 7u);
  const auto rpd = enumerate_rpd(perm("2143"));
  ASSERT_EQ(rpd.size(), 3u);
  for (const auto& p : rpd) EXPECT_EQ(p.count(Tile::MarkedBump), 0);
  std::multiset<int> marks;
  for (const auto& p : mrpd) marks.insert(mbt(p));
  EXPECT_EQ(marks, (std::multiset<int>{0, 0, 0, 1, 1, 1, 2}));
}

TEST(Enumerate, SortedByTileString) {
  for (const auto& w : all_permutations(4)) {
    const auto mrpd = enumerate_mrpd(w);
    for (std::size_t k = 1; k < mrpd.size(); ++k)
      EXPECT_LT(mrpd[k - 1].tile_string(), mrpd[k].tile_string());
  }
}

TEST(Enumerate, RpdMatchesExhaustiveFillings) {
  for (int m = 1; m <= 5; ++m) {
    std::map<Permutation, std::set<std::string>> by_perm;
    for (const auto& p : all_fillings(m))
      if (grothpd::testing::oracle_reduced(p)) by_perm[permutation_of(p)].insert(p.tile_string());
    for (const auto& w : all_permutations(m)) {
      std::set<std::string> got;
      for (const auto& p : enumerate_rpd(w)) got.insert(p.tile_string());
      ASSERT_EQ(got, by_perm[w]) << w.to_string();
    }
  }
}

TEST(Enumerate, MrpdIsEveryMarkingOfEveryRpd) {
  for (const auto& w : all_permutations(4)) {
    std::size_t expected = 0;
    for (const auto& p : enumerate_rpd(w)) expected += std::size_t{1} << markable_bumps(p).size();
    const auto mrpd = enumerate_mrpd(w);
    EXPECT_EQ(mrpd.size(), expected);
    for (const auto& p : mrpd) EXPECT_TRUE(is_marked_reduced(p));
  }
}

TEST(Enumerate, SubwordCarriesItsLabels) {
  const std::vector<int> v{2, 5, 6, 3};
  const auto dreams = enumerate_mrpd(v);
  ASSERT_FALSE(dreams.empty());
  EXPECT_EQ(dreams.size(), enumerate_mrpd(perm("1342")).size());
  for (const auto& p : dreams) {
    EXPECT_EQ(p.labels(), (std::vector<int>{2, 3, 5, 6}));
    EXPECT_EQ(exit_word(p), v);
  }
}

TEST(Enumerate, IdentityAndEmpty) {
  EXPECT_EQ(enumerate_rpd(perm("1234")).size(), 1u);
  EXPECT_EQ(enumerate_mrpd(Permutation()).size(), 1u);
  EXPECT_EQ(enumerate_rpd(Permutation::longest(4)).size(), 1u);
}

TEST(MarkedReduced, RejectsUnmarkableMark) {
  EXPECT_FALSE(is_marked_reduced(dream("XBBB/BMB/BB/B")));
  EXPECT_TRUE(is_marked_reduced(dream("XBXB/BMB/BB/B")));
}

TEST(Weight, MonomialAndGrothendieck2143) {
  EXPECT_EQ(weight_monomial(dream("XBXB/BMB/MB/B")), mono(4, {2, 1, 1}));
  const MultiPoly want = mono(4, {2}) + mono(4, {1, 1}) + mono(4, {1, 0, 1}) + mono(4, {2, 1}, 1) +
                         mono(4, {2, 0, 1}, 1) + mono(4, {1, 1, 1}, 1) + mono(4, {2, 1, 1}, 2);
  EXPECT_EQ(grothendieck_via_pd(perm("2143")), want);
}

TEST(Weight, PipeDreamsAgreeWithDividedDifferences) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n)) EXPECT_EQ(grothendieck_via_pd(w), grothendieck_via_dd(w)) << w.to_string();
}

TEST(Ascii, RenderAndParse) {
  const PipeDream p = dream("XBXB/BMB/MB/B");
  const std::string text = render_ascii(p);
  EXPECT_EQ(text, "  1 2 3 4\n2 + . + .\n1 . * .\n4 * .\n3 .\n");
  EXPECT_EQ(parse_ascii(text), p);
  EXPECT_EQ(render_ascii(PipeDream()), "");
  EXPECT_THROW(parse_ascii("  1 2\n1 + .\n2 .\n"), std::invalid_argument);
  EXPECT_THROW(parse_ascii("  1 2\n2 . .\n1 .\n"), std::invalid_argument);
}

TEST(Ascii, RoundTripsEveryDreamOfS4) {
  for (const auto& w : all_permutations(4))
    for (const auto& p : enumerate_mrpd(w)) ASSERT_EQ(parse_ascii(render_ascii(p)), p);
  for (const auto& p : enumerate_mrpd(std::vector<int>{2, 5, 6, 3})) ASSERT_EQ(parse_ascii(render_ascii(p)), p);
}

TEST(Enumerate, RefusesHugeRank) {
  EXPECT_THROW(for_each_rpd(Permutation::identity(31), [](const PipeDream&) {}), std::length_error);
}
