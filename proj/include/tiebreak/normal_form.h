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

#ifndef TIEBREAK_NORMAL_FORM_H_
#define TIEBREAK_NORMAL_FORM_H_

#include <map>
#include <string>
#include <vector>

#include "tiebreak/core.h"

namespace tiebreak::normal_form {

// A pure strategy of one player in an extensive-form game. The label is the
// concatenation of the chosen action labels in preorder node order, e.g.
// "RL" for Player 2 in the indifference game choosing R at the first node
// and L at the second.
struct PureStrategy {
  PlayerId player = 1;
  std::map<NodeAddress, int> choices;
  std::string label;

  bool operator==(const PureStrategy&) const = default;
};

// One strategy index per player, player 1 first.
using Profile = std::vector<int>;

class NormalForm {
 public:
  NormalForm(std::vector<std::vector<PureStrategy>> strategies,
             std::vector<UtilityVector> payoffs);

  int num_players() const { return static_cast<int>(strategies_.size()); }
  const std::vector<PureStrategy>& strategies(PlayerId player) const {
    return strategies_.at(player - 1);
  }
  int num_strategies(PlayerId player) const {
    return static_cast<int>(strategies(player).size());
  }
  const UtilityVector& payoff(const Profile& profile) const;

  // All profiles in lexicographic order, player 1 most significant.
  std::vector<Profile> Profiles() const;

 private:
  int FlatIndex(const Profile& profile) const;

  std::vector<std::vector<PureStrategy>> strategies_;
  std::vector<UtilityVector> payoffs_;  // row-major over Profiles()
};

// Follows each mover's strategy from the root. Throws std::invalid_argument
// when a reached node has no choice in the mover's strategy.
Outcome Play(const Game& game, const std::vector<PureStrategy>& profile);

// Strategies of `player` in lexicographic branch-index order (first node most
// significant). A player without decision nodes has one empty strategy.
std::vector<PureStrategy> EnumerateStrategies(const Game& game,
                                              PlayerId player);

NormalForm ToNormalForm(const Game& game);

// Profiles from which no player gains strictly by deviating alone.
std::vector<Profile> PureNash(const NormalForm& nf);

// `others` holds the strategy indices of every other player in ascending
// player order.
std::vector<int> BestResponses(const NormalForm& nf, PlayerId player,
                               const std::vector<int>& others);

// Worst payoff `player` can get from `strategy` when the opponent picks any
// of its best responses. Two-player games only.
Utility GuaranteedValueVsRational(const NormalForm& nf, PlayerId player,
                                  int strategy);

// Groups strategies whose own-payoff slices coincide across every opponent
// profile. Classes are ordered by their smallest member.
std::vector<std::vector<int>> PayoffEquivalentStrategies(const NormalForm& nf,
                                                         PlayerId player);

}  // namespace tiebreak::normal_form

#endif  // TIEBREAK_NORMAL_FORM_H_
