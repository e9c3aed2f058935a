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

#ifndef TIEBREAK_REPEATED_H_
#define TIEBREAK_REPEATED_H_

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tiebreak/core.h"
#include "tiebreak/normal_form.h"

// Finite repeated play of a two-player stage game, plus the alternating
// perfect-information variant where players take turns granting each other
// a unit of utility.

namespace tiebreak::repeated {

using PayoffPair = std::array<Utility, 2>;

struct StageGame {
  // actions[0] for player 1, actions[1] for player 2.
  std::array<std::vector<std::string>, 2> actions;
  // payoffs[i][j] when player 1 plays actions[0][i], player 2 actions[1][j].
  std::vector<std::vector<PayoffPair>> payoffs;

  // Throws std::invalid_argument for an unknown label.
  int ActionIndex(PlayerId player, const std::string& label) const;
  const PayoffPair& Payoff(const std::string& first,
                           const std::string& second) const;
};

// Each player decides whether the other gets one unit:
// (F,F)->(1,1), (F,U)->(0,1), (U,F)->(1,0), (U,U)->(0,0).
StageGame SimultaneousIndifference();

struct JointAction {
  std::string first;
  std::string second;

  bool operator==(const JointAction&) const = default;
};

struct Move {
  PlayerId player;
  std::string action;

  bool operator==(const Move&) const = default;
};

// Moves in the order they were made, always alternating player 1, player 2.
// In simultaneous play a round's two moves are appended together.
class History {
 public:
  // Throws std::invalid_argument if `player` is out of turn.
  void Append(PlayerId player, std::string action);

  const std::vector<Move>& moves() const { return moves_; }
  // Completed (player 1, player 2) pairs, oldest first.
  std::vector<JointAction> Rounds() const;
  // Most recent action of `player`, if any.
  std::optional<std::string> LastBy(PlayerId player) const;

 private:
  std::vector<Move> moves_;
};

struct StrategyRule {
  std::string name;
  // (role, history) -> action label. Must be deterministic.
  std::function<std::string(PlayerId, const History&)> rule;
};

// Opens with "F", then repeats the opponent's most recent action.
StrategyRule TitForTat();
StrategyRule AllF();
StrategyRule AllU();

// "tft", "allf" or "allu". Throws std::invalid_argument otherwise.
StrategyRule StrategyByName(const std::string& name);

struct Round {
  JointAction actions;
  PayoffPair payoffs;
};

struct Transcript {
  std::vector<Round> rounds;
  PayoffPair cumulative;
};

// Round t is computed from the history of rounds 1..t-1. Throws
// std::invalid_argument if rounds < 1 or a rule returns an unknown action.
Transcript PlayRepeated(const StageGame& stage, const StrategyRule& first,
                        const StrategyRule& second, int rounds);

// Perfect-information game of `moves` alternating gifts, player 1 first.
// Each move offers "F" (the other player gains 1) then "U" (no gain).
// Leaves are labeled with their move sequence, e.g. "FU".
Game AlternatingGame(int moves);

struct AlternatingStep {
  PlayerId player;
  std::string action;
  PayoffPair gain;
};

struct AlternatingTranscript {
  std::vector<AlternatingStep> steps;
  PayoffPair cumulative;
  // Leaf of AlternatingGame(moves) reached by the walk.
  Outcome outcome;
};

// Plays AlternatingGame(moves) from the root. Each mover's rule sees every
// earlier move, so tit-for-tat copies the opponent's preceding move.
AlternatingTranscript PlayAlternating(const StrategyRule& first,
                                      const StrategyRule& second, int moves);

// Stage game as a two-player normal form. Strategies have no tree choices;
// their labels are the action labels.
normal_form::NormalForm StageAsNormalForm(const StageGame& stage);

}  // namespace tiebreak::repeated

#endif  // TIEBREAK_REPEATED_H_
