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

#include "tiebreak/repeated.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tiebreak::repeated {
namespace {

constexpr char kFriendly[] = "F";
constexpr char kUnfriendly[] = "U";

GameTree BuildAlternating(int depth, int moves, const std::string& path,
                          const PayoffPair& totals) {
  if (depth == moves) return MakeLeaf({totals[0], totals[1]}, path);
  const PlayerId mover = depth % 2 == 0 ? 1 : 2;
  PayoffPair gift = totals;
  gift[2 - mover] += Utility(1);
  return MakeNode(
      mover, {{kFriendly, BuildAlternating(depth + 1, moves, path + kFriendly,
                                           gift)},
              {kUnfriendly, BuildAlternating(depth + 1, moves,
                                             path + kUnfriendly, totals)}});
}

std::string Ask(const StrategyRule& strategy, PlayerId role,
                const History& history,
                const std::vector<std::string>& allowed) {
  std::string action = strategy.rule(role, history);
  if (std::find(allowed.begin(), allowed.end(), action) == allowed.end()) {
    throw std::invalid_argument("strategy " + strategy.name +
                                " returned unknown action '" + action + "'");
  }
  return action;
}

}  // namespace

int StageGame::ActionIndex(PlayerId player, const std::string& label) const {
  if (player != 1 && player != 2) {
    throw std::invalid_argument("stage games have players 1 and 2, not " +
                                std::to_string(player));
  }
  const auto& list = actions[player - 1];
  for (int i = 0; i < static_cast<int>(list.size()); ++i) {
    if (list[i] == label) return i;
  }
  throw std::invalid_argument("player " + std::to_string(player) +
                              " has no action '" + label + "'");
}

const PayoffPair& StageGame::Payoff(const std::string& first,
                                    const std::string& second) const {
  return payoffs[ActionIndex(1, first)][ActionIndex(2, second)];
}

StageGame SimultaneousIndifference() {
  StageGame stage;
  stage.actions = {std::vector<std::string>{kFriendly, kUnfriendly},
                   std::vector<std::string>{kFriendly, kUnfriendly}};
  stage.payoffs = {{{Utility(1), Utility(1)}, {Utility(0), Utility(1)}},
                   {{Utility(1), Utility(0)}, {Utility(0), Utility(0)}}};
  return stage;
}

void History::Append(PlayerId player, std::string action) {
  const PlayerId expected = moves_.size() % 2 == 0 ? 1 : 2;
  if (player != expected) {
    throw std::invalid_argument("history expects a move by player " +
                                std::to_string(expected));
  }
  moves_.push_back(Move{player, std::move(action)});
}

std::vector<JointAction> History::Rounds() const {
  std::vector<JointAction> out;
  for (size_t i = 0; i + 1 < moves_.size(); i += 2) {
    out.push_back(JointAction{moves_[i].action, moves_[i + 1].action});
  }
  return out;
}

std::optional<std::string> History::LastBy(PlayerId player) const {
  for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) {
    if (it->player == player) return it->action;
  }
  return std::nullopt;
}

StrategyRule TitForTat() {
  return {"tft", [](PlayerId role, const History& history) {
            std::optional<std::string> last = history.LastBy(3 - role);
            return last.value_or(kFriendly);
          }};
}

StrategyRule AllF() {
  return {"allf", [](PlayerId, const History&) { return std::string(kFriendly); }};
}

StrategyRule AllU() {
  return {"allu",
          [](PlayerId, const History&) { return std::string(kUnfriendly); }};
}

StrategyRule StrategyByName(const std::string& name) {
  if (name == "tft") return TitForTat();
  if (name == "allf") return AllF();
  if (name == "allu") return AllU();
  throw std::invalid_argument("unknown strategy '" + name +
                              "', expected tft, allf or allu");
}

Transcript PlayRepeated(const StageGame& stage, const StrategyRule& first,
                        const StrategyRule& second, int rounds) {
  if (rounds < 1) {
    throw std::invalid_argument("rounds must be at least 1, got " +
                                std::to_string(rounds));
  }
  Transcript transcript{{}, {Utility(0), Utility(0)}};
  History history;
  for (int t = 0; t < rounds; ++t) {
    JointAction joint{Ask(first, 1, history, stage.actions[0]),
                      Ask(second, 2, history, stage.actions[1])};
    PayoffPair payoffs = stage.Payoff(joint.first, joint.second);
    transcript.cumulative[0] += payoffs[0];
    transcript.cumulative[1] += payoffs[1];
    history.Append(1, joint.first);
    history.Append(2, joint.second);
    transcript.rounds.push_back(Round{std::move(joint), payoffs});
  }
  return transcript;
}

Game AlternatingGame(int moves) {
  if (moves < 1) {
    throw std::invalid_argument("moves must be at least 1, got " +
                                std::to_string(moves));
  }
  return Game{2, BuildAlternating(0, moves, "", {Utility(0), Utility(0)})};
}

AlternatingTranscript PlayAlternating(const StrategyRule& first,
                                      const StrategyRule& second, int moves) {
  if (moves < 1) {
    throw std::invalid_argument("moves must be at least 1, got " +
                                std::to_string(moves));
  }
  // Same walk as following AlternatingGame(moves) from the root, without
  // materializing its 2^moves leaves.
  AlternatingTranscript transcript{{}, {Utility(0), Utility(0)}, {}};
  History history;
  std::string path;
  for (int depth = 0; depth < moves; ++depth) {
    const PlayerId mover = depth % 2 == 0 ? 1 : 2;
    const StrategyRule& strategy = mover == 1 ? first : second;
    std::string action =
        Ask(strategy, mover, history, {kFriendly, kUnfriendly});
    PayoffPair gain{Utility(0), Utility(0)};
    if (action == kFriendly) gain[2 - mover] = Utility(1);
    transcript.cumulative[0] += gain[0];
    transcript.cumulative[1] += gain[1];
    path += action;
    history.Append(mover, action);
    transcript.steps.push_back(AlternatingStep{mover, action, gain});
  }
  transcript.outcome = Outcome{
      path, {transcript.cumulative[0], transcript.cumulative[1]}};
  return transcript;
}

normal_form::NormalForm StageAsNormalForm(const StageGame& stage) {
  std::vector<std::vector<normal_form::PureStrategy>> strategies(2);
  for (PlayerId p = 1; p <= 2; ++p) {
    for (const std::string& label : stage.actions[p - 1]) {
      strategies[p - 1].push_back(normal_form::PureStrategy{p, {}, label});
    }
  }
  std::vector<UtilityVector> payoffs;
  for (const auto& row : stage.payoffs) {
    for (const PayoffPair& cell : row) payoffs.push_back({cell[0], cell[1]});
  }
  return normal_form::NormalForm(std::move(strategies), std::move(payoffs));
}

}  // namespace tiebreak::repeated
