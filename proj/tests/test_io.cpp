#include <gtest/gtest.h>

#include "grothpd/io.hpp"
#include "grothpd/reduction.hpp"
#include "support.hpp"

using namespace grothpd;
using grothpd::testing::dream;
using grothpd::testing::perm;

TEST(Json, BetaPoly) {
  EXPECT_EQ(to_json(BetaPoly{3, 3, 1}), "[3,3,1]");
  EXPECT_EQ(to_json(BetaPoly{}), "[0]");
  EXPECT_EQ(beta_poly_from_json("[3,3,1]"), (BetaPoly{3, 3, 1}));
  EXPECT_EQ(beta_poly_from_json("[0]"), BetaPoly{});
  BetaPoly big{1};
  for (int k = 0; k < 80; ++k) big *= BetaPoly{1, 1};
  EXPECT_EQ(beta_poly_from_json(to_json(big)), big);
  EXPECT_THROW(beta_poly_from_json("{}"), std::invalid_argument);
  EXPECT_THROW(beta_poly_from_json("[1,"), std::invalid_argument);
}

TEST(Json, PipeDream) {
  const PipeDream p = dream("XBXB/BMB/MB/B");
  const std::string text = to_json(p);
  EXPECT_EQ(text, R"({"labels":[1,2,3,4],"rank":4,"rows":[["X","B","X","B"],["B","MB","B"],["MB","B"],["B"]]})");
  EXPECT_EQ(pipe_dream_from_json(text), p);
  EXPECT_EQ(pipe_dream_from_json(to_json(PipeDream())), PipeDream());
  EXPECT_THROW(pipe_dream_from_json(R"({"rank":2,"rows":[["Q","B"],["B"]]})"), std::invalid_argument);
  EXPECT_THROW(pipe_dream_from_json(R"({"rank":3,"rows":[["B","B"],["B"]]})"), std::invalid_argument);
  EXPECT_THROW(pipe_dream_from_json(R"({"rank":2,"rows":[["B","X"],["B"]]})"), std::invalid_argument);
}

TEST(Json, ReductionRoundTrip) {
  for (const auto& p : enumerate_mrpd(perm("1423"))) {
    const ReductionResult r = reduce_to_core(p);
    const std::string text = to_json(r);
    EXPECT_NE(text.find("\"removed\""), std::string::npos);
    const ReductionResult back = reduction_result_from_json(text);
    EXPECT_EQ(back, r);
    EXPECT_EQ(psi(back), p);
  }
}

TEST(Json, MultiPoly) {
  const std::string text = to_json(grothendieck_via_pd(perm("21")));
  EXPECT_EQ(text, R"([{"beta":0,"c":1,"x":[1,0]}])");
}
