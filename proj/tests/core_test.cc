// Copyright 2026 The Tiebreak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tiebreak/core.h"

#include <gtest/gtest.h>

#include "random_games.h"
#include "tiebreak/gdl.h"

namespace tiebreak {
namespace {

TEST(UtilityTest, ExactEquality) {
  EXPECT_EQ(Utility(1, 3) + Utility(1, 3) + Utility(1, 3), Utility(1));
  EXPECT_EQ(Utility(2, 4), Utility(1, 2));
  EXPECT_EQ(Utility(-3, 6), Utility(1, -2));
  EXPECT_NE(Utility(1, 3), Utility(333333, 1000000));
  EXPECT_LT(Utility(1, 3), Utility(1, 2));
  EXPECT_GT(Utility(-1, 3), Utility(-1, 2));
}

TEST(UtilityTest, CrossMultiplicationAgrees) {
  for (int a = -6; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      for (int c = -6; c <= 6; ++c) {
        for (int d = 1; d <= 6; ++d) {
          EXPECT_EQ(Utility(a, b) == Utility(c, d), a * d == c * b);
          EXPECT_EQ(Utility(a, b) < Utility(c, d), a * d < c * b);
        }
      }
    }
  }
}

TEST(UtilityTest, Arithmetic) {
  EXPECT_EQ(Utility(1, 2) * Utility(2, 3), Utility(1, 3));
  EXPECT_EQ(Utility(1, 2) - Utility(3, 4), Utility(-1, 4));
  EXPECT_EQ(Utility(1, 2) / Utility(1, 4), Utility(2));
  EXPECT_THROW(Utility(1) / Utility(0), std::domain_error);
  EXPECT_THROW(Utility(1, 0), std::domain_error);
  Utility total;
  total += Utility(5, 2);
  EXPECT_EQ(total, Utility(5, 2));
}

TEST(UtilityTest, Text) {
  EXPECT_EQ(Utility(7).ToString(), "7");
  EXPECT_EQ(Utility(4, 6).ToString(), "2/3");
  EXPECT_EQ(Utility(-4, 6).ToString(), "-2/3");
  EXPECT_EQ(Utility(0, 5).ToString(), "0");
  EXPECT_EQ(Utility::FromString("6/4"), Utility(3, 2));
  EXPECT_EQ(Utility::FromString("-12"), Utility(-12));
  EXPECT_EQ(Utility::FromString("123456789012345678901234567890")->ToString(),
            "123456789012345678901234567890");
  for (const char* bad : {"", "-", "1/0", "1/", "/2", "a", "1.5", "--1",
                          "1/-2", "+1", " 1"}) {
    EXPECT_FALSE(Utility::FromString(bad).has_value()) << bad;
  }
  EXPECT_EQ(UtilityVectorToString({Utility(1), Utility(1, 2)}), "(1 1/2)");
  EXPECT_EQ(AddressToString({0, 1}), "[0,1]");
  EXPECT_EQ(AddressToString({}), "[]");
}

TEST(ValidateTest, BuildersAreValid) {
  EXPECT_TRUE(Validate(gdl::IndifferenceGame()).empty());
  EXPECT_TRUE(Validate(gdl::TftReducedGame()).empty());
  EXPECT_TRUE(Validate(gdl::ThreeStageGame()).empty());
}

TEST(ValidateTest, WrongUtilityLength) {
  Game game{2, MakeNode(1, {{"L", MakeLeaf({1, 2, 3})},
                            {"R", MakeLeaf({0, 0})}})};
  auto violations = Validate(game);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].address, (NodeAddress{0}));
}

TEST(ValidateTest, DuplicateLabel) {
  Game game{1, MakeNode(1, {{"L", MakeLeaf({1})}, {"L", MakeLeaf({2})}})};
  auto violations = Validate(game);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].address, NodeAddress{});
  EXPECT_NE(violations[0].message.find("duplicate"), std::string::npos);
}

TEST(ValidateTest, OtherViolations) {
  EXPECT_EQ(Validate(Game{0, MakeLeaf({})}).size(), 1u);
  EXPECT_EQ(Validate(Game{1, MakeNode(2, {{"a", MakeLeaf({1})}})}).size(), 1u);
  EXPECT_EQ(Validate(Game{1, GameTree(DecisionNode{1, {}})}).size(), 1u);
}

TEST(ResolveTest, Examples) {
  Game game = gdl::IndifferenceGame();
  EXPECT_EQ(&Resolve(game, {}), &game.root);
  EXPECT_EQ(Resolve(game, {}).decision().mover, 1);
  const GameTree& cd = Resolve(game, {1});
  EXPECT_EQ(cd.decision().mover, 2);
  EXPECT_EQ(cd.decision().branches[0].subtree.leaf().outcome.label, "C");
  EXPECT_EQ(cd.decision().branches[1].subtree.leaf().outcome.label, "D");
  try {
    Resolve(game, {0, 5});
    FAIL() << "expected AddressError";
  } catch (const AddressError& e) {
    EXPECT_EQ(e.failed_step(), 1);
    EXPECT_EQ(e.address(), (NodeAddress{0, 5}));
  }
  EXPECT_THROW(Resolve(game, {0, 0, 0}), AddressError);
  EXPECT_THROW(Resolve(game, {-1}), AddressError);
}

TEST(LeavesTest, Examples) {
  auto leaves = Leaves(gdl::IndifferenceGame());
  ASSERT_EQ(leaves.size(), 4u);
  std::string order;
  for (const auto& [address, outcome] : leaves) order += *outcome.label;
  EXPECT_EQ(order, "ABCD");
  EXPECT_EQ(leaves[2].first, (NodeAddress{1, 0}));

  auto single = Leaves(Game{1, MakeLeaf({3})});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(single[0].first.empty());

  EXPECT_EQ(Leaves(gdl::ThreeStageGame()).size(), 8u);
}

TEST(DecisionNodesTest, PreorderAndFilter) {
  Game game = gdl::IndifferenceGame();
  EXPECT_EQ(DecisionNodes(game),
            (std::vector<NodeAddress>{{}, {0}, {1}}));
  EXPECT_EQ(DecisionNodes(game, 2), (std::vector<NodeAddress>{{0}, {1}}));
  EXPECT_TRUE(DecisionNodes(Game{1, MakeLeaf({1})}).empty());
}

TEST(SubgameTest, ReplaceAndExtract) {
  Game game = gdl::IndifferenceGame();
  Game sub = Subgame(game, {1});
  EXPECT_EQ(sub.num_players, 2);
  EXPECT_EQ(sub.root, Resolve(game, {1}));

  Game replaced = ReplaceSubtree(game, {1}, MakeLeaf({1, 1}, "C"));
  EXPECT_TRUE(Resolve(replaced, {1}).IsLeaf());
  // Original untouched.
  EXPECT_TRUE(Resolve(game, {1}).IsDecision());
  EXPECT_THROW(ReplaceSubtree(game, {3}, MakeLeaf({0, 0})), AddressError);
}

TEST(CanonicalizeTest, Examples) {
  Game fig1 = gdl::IndifferenceGame();
  EXPECT_EQ(CanonicalizeOutcomes(fig1), fig1);

  Game twins{2, MakeNode(1, {{"a", MakeLeaf({1, 0}, "X")},
                             {"b", MakeLeaf({1, 0}, "Y")}})};
  Game merged = CanonicalizeOutcomes(twins);
  for (const auto& [address, outcome] : Leaves(merged)) {
    EXPECT_EQ(outcome.label, "X");
  }

  Game single{1, MakeLeaf({4}, "Z")};
  EXPECT_EQ(CanonicalizeOutcomes(single), single);
}

TEST(CanonicalizeTest, UnlabeledFirstLeafTakesLaterLabel) {
  Game game{1, MakeNode(1, {{"a", MakeLeaf({1})},
                            {"b", MakeLeaf({1}, "Y")},
                            {"c", MakeLeaf({1}, "Z")}})};
  for (const auto& [address, outcome] : Leaves(CanonicalizeOutcomes(game))) {
    EXPECT_EQ(outcome.label, "Y");
  }
}

TEST(CorePropertyTest, RandomCorpus) {
  for (const Game& game : testing::RandomCorpus(500, 11)) {
    ASSERT_TRUE(Validate(game).empty()) << gdl::Serialize(game);
    Game once = CanonicalizeOutcomes(game);
    EXPECT_EQ(CanonicalizeOutcomes(once), once);
    auto before = Leaves(game);
    auto after = Leaves(once);
    ASSERT_EQ(before.size(), after.size());
    for (size_t i = 0; i < before.size(); ++i) {
      EXPECT_EQ(before[i].first, after[i].first);
      EXPECT_EQ(before[i].second.utilities, after[i].second.utilities);
      for (size_t j = 0; j < i; ++j) {
        if (after[i].second.utilities == after[j].second.utilities) {
          EXPECT_EQ(after[i].second.label, after[j].second.label);
        }
      }
      EXPECT_TRUE(Resolve(game, before[i].first).IsLeaf());
    }
  }
}

}  // namespace
}  // namespace tiebreak
