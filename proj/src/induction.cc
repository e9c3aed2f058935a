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

#include "tiebreak/induction.h"

#include <algorithm>
#include <sstream>

namespace tiebreak::induction {
namespace {

std::string JoinActions(const std::vector<int>& actions) {
  std::string out;
  for (size_t i = 0; i < actions.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(actions[i]);
  }
  return out;
}

// Keeps the candidates whose u_player is extremal (max when `maximize`).
std::vector<int> Narrow(const std::vector<int>& candidates,
                        const std::vector<UtilityVector>& continuation,
                        PlayerId player, bool maximize) {
  const Utility* best = nullptr;
  for (int action : candidates) {
    const Utility& u = continuation[action][player - 1];
    if (best == nullptr || (maximize ? u > *best : u < *best)) best = &u;
  }
  std::vector<int> out;
  for (int action : candidates) {
    if (continuation[action][player - 1] == *best) out.push_back(action);
  }
  return out;
}

void CheckTarget(PlayerId target, int num_players) {
  if (target < 1 || target > num_players) {
    throw std::invalid_argument("policy target " + std::to_string(target) +
                                " is not a player in 1.." +
                                std::to_string(num_players));
  }
}

// Chooses among a best set with at least two members.
class TieBreaker {
 public:
  TieBreaker(const TieBreakPolicy& policy, int num_players)
      : policy_(policy), num_players_(num_players) {
    if (const auto* p = std::get_if<FriendlyTo>(&policy_)) {
      CheckTarget(p->target, num_players_);
    } else if (const auto* p = std::get_if<UnfriendlyTo>(&policy_)) {
      CheckTarget(p->target, num_players_);
    } else if (const auto* p = std::get_if<ByProfile>(&policy_)) {
      if (p->profile.num_players() != num_players_) {
        throw std::invalid_argument(
            "disposition profile covers " +
            std::to_string(p->profile.num_players()) + " players, game has " +
            std::to_string(num_players_));
      }
    }
  }

  int Choose(const NodeAddress& address, PlayerId mover,
             const std::vector<int>& best,
             const std::vector<UtilityVector>& continuation) const {
    std::vector<int> candidates = best;
    if (const auto* p = std::get_if<FriendlyTo>(&policy_)) {
      if (p->target == mover) throw PolicyTargetIsMover(address, mover);
      candidates = Narrow(candidates, continuation, p->target, true);
    } else if (const auto* p = std::get_if<UnfriendlyTo>(&policy_)) {
      if (p->target == mover) throw PolicyTargetIsMover(address, mover);
      candidates = Narrow(candidates, continuation, p->target, false);
    } else if (const auto* p = std::get_if<ByProfile>(&policy_)) {
      bool friendly = p->profile.of(mover) == Disposition::kFriendly;
      for (PlayerId other = 1; other <= num_players_; ++other) {
        if (other == mover) continue;
        candidates = Narrow(candidates, continuation, other, friendly);
      }
    }
    return candidates.front();
  }

 private:
  const TieBreakPolicy& policy_;
  int num_players_;
};

class Solver {
 public:
  // A null tie breaker makes every tie an IndifferenceError.
  Solver(const Game& game, const TieBreaker* tie_breaker)
      : game_(game), tie_breaker_(tie_breaker) {}

  SolveResult Run() {
    NodeAddress address;
    result_.root_value = Evaluate(game_.root, address);
    const GameTree* tree = &game_.root;
    while (tree->IsDecision()) {
      int choice = result_.choices.at(address);
      result_.chosen_path.emplace_back(address, choice);
      tree = &tree->decision().branches[choice].subtree;
      address.push_back(choice);
    }
    return std::move(result_);
  }

 private:
  UtilityVector Evaluate(const GameTree& tree, NodeAddress& address) {
    if (tree.IsLeaf()) {
      result_.node_values[address] = tree.leaf().outcome.utilities;
      return tree.leaf().outcome.utilities;
    }
    const DecisionNode& node = tree.decision();
    std::vector<UtilityVector> continuation;
    continuation.reserve(node.branches.size());
    for (int i = 0; i < static_cast<int>(node.branches.size()); ++i) {
      address.push_back(i);
      continuation.push_back(Evaluate(node.branches[i].subtree, address));
      address.pop_back();
    }
    BestSet best = BestActions(game_, address, continuation);
    int choice = best.actions.front();
    if (best.actions.size() > 1) {
      if (tie_breaker_ == nullptr) {
        throw IndifferenceError(address, node.mover, best.actions);
      }
      result_.tie_nodes.insert(address);
      choice = tie_breaker_->Choose(address, node.mover, best.actions,
                                    continuation);
    }
    result_.best_sets.emplace(address, std::move(best));
    result_.choices[address] = choice;
    result_.node_values[address] = continuation[choice];
    return continuation[choice];
  }

  const Game& game_;
  const TieBreaker* tie_breaker_;
  SolveResult result_;
};

struct PartialProfile {
  ActionAssignment actions;
  Outcome outcome;
};

std::vector<PartialProfile> EnumerateSubtree(const Game& game,
                                             const GameTree& tree,
                                             NodeAddress& address) {
  if (tree.IsLeaf()) return {PartialProfile{{}, tree.leaf().outcome}};
  const DecisionNode& node = tree.decision();
  std::vector<std::vector<PartialProfile>> children;
  for (int i = 0; i < static_cast<int>(node.branches.size()); ++i) {
    address.push_back(i);
    children.push_back(EnumerateSubtree(game, node.branches[i].subtree,
                                        address));
    address.pop_back();
  }

  // Odometer over one equilibrium per child subgame.
  std::vector<PartialProfile> out;
  std::vector<size_t> pick(children.size(), 0);
  while (true) {
    std::vector<UtilityVector> continuation;
    for (size_t i = 0; i < children.size(); ++i) {
      continuation.push_back(children[i][pick[i]].outcome.utilities);
    }
    BestSet best = BestActions(game, address, continuation);
    for (int action : best.actions) {
      PartialProfile profile;
      for (size_t i = 0; i < children.size(); ++i) {
        const ActionAssignment& sub = children[i][pick[i]].actions;
        profile.actions.insert(sub.begin(), sub.end());
      }
      profile.actions[address] = action;
      profile.outcome = children[action][pick[action]].outcome;
      out.push_back(std::move(profile));
    }
    size_t digit = 0;
    while (digit < pick.size() && ++pick[digit] == children[digit].size()) {
      pick[digit] = 0;
      ++digit;
    }
    if (digit == pick.size()) break;
  }
  return out;
}

}  // namespace

char DispositionChar(Disposition disposition) {
  return disposition == Disposition::kFriendly ? 'F' : 'U';
}

std::vector<DispositionProfile> DispositionProfile::All(int num_players) {
  std::vector<DispositionProfile> out;
  const unsigned count = 1u << num_players;
  for (unsigned bits = 0; bits < count; ++bits) {
    std::vector<Disposition> dispositions(num_players);
    for (int p = 0; p < num_players; ++p) {
      bool unfriendly = (bits >> (num_players - 1 - p)) & 1u;
      dispositions[p] =
          unfriendly ? Disposition::kUnfriendly : Disposition::kFriendly;
    }
    out.emplace_back(std::move(dispositions));
  }
  return out;
}

DispositionProfile DispositionProfile::Parse(const std::string& spec,
                                             int num_players) {
  std::vector<std::optional<Disposition>> slots(num_players);
  if (!spec.empty() && spec.back() == ',') {
    throw std::invalid_argument("profile '" + spec + "' ends with a comma");
  }
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    auto eq = item.find('=');
    int player = 0;
    try {
      size_t used = 0;
      player = std::stoi(item.substr(0, eq), &used);
      if (used != eq) player = 0;
    } catch (const std::exception&) {
      player = 0;
    }
    std::string value = eq == std::string::npos ? "" : item.substr(eq + 1);
    if (player < 1 || player > num_players || (value != "F" && value != "U")) {
      throw std::invalid_argument("bad disposition entry '" + item +
                                  "', expected I=F or I=U with I in 1.." +
                                  std::to_string(num_players));
    }
    if (slots[player - 1].has_value()) {
      throw std::invalid_argument("player " + std::to_string(player) +
                                  " listed twice in profile '" + spec + "'");
    }
    slots[player - 1] =
        value == "F" ? Disposition::kFriendly : Disposition::kUnfriendly;
  }
  std::vector<Disposition> dispositions;
  for (int p = 0; p < num_players; ++p) {
    if (!slots[p].has_value()) {
      throw std::invalid_argument("profile '" + spec +
                                  "' has no disposition for player " +
                                  std::to_string(p + 1));
    }
    dispositions.push_back(*slots[p]);
  }
  return DispositionProfile(std::move(dispositions));
}

Disposition DispositionProfile::of(PlayerId player) const {
  return dispositions_.at(player - 1);
}

std::string DispositionProfile::ToString() const {
  std::string out;
  for (size_t i = 0; i < dispositions_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(i + 1) + "=" + DispositionChar(dispositions_[i]);
  }
  return out;
}

TieBreakPolicy ParsePolicy(const std::string& text, int num_players) {
  auto parse_target = [&](const std::string& rest) {
    size_t used = 0;
    int target = 0;
    try {
      target = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size()) {
      throw std::invalid_argument("bad policy target '" + rest + "'");
    }
    CheckTarget(target, num_players);
    return target;
  };
  if (text == "first") return FirstListed{};
  if (text.rfind("friendly:", 0) == 0) {
    return FriendlyTo{parse_target(text.substr(9))};
  }
  if (text.rfind("unfriendly:", 0) == 0) {
    return UnfriendlyTo{parse_target(text.substr(11))};
  }
  if (text.rfind("profile:", 0) == 0) {
    return ByProfile{DispositionProfile::Parse(text.substr(8), num_players)};
  }
  throw std::invalid_argument(
      "unknown policy '" + text +
      "', expected first, friendly:I, unfriendly:I or profile:SPEC");
}

IndifferenceError::IndifferenceError(NodeAddress node, PlayerId mover,
                                     std::vector<int> tied)
    : std::runtime_error("player " + std::to_string(mover) +
                         " is indifferent at node " + AddressToString(node) +
                         " between branches " + JoinActions(tied)),
      node_(std::move(node)),
      mover_(mover),
      tied_(std::move(tied)) {}

PolicyTargetIsMover::PolicyTargetIsMover(NodeAddress node, PlayerId target)
    : std::invalid_argument("policy target " + std::to_string(target) +
                            " is the mover at tied node " +
                            AddressToString(node)),
      node_(std::move(node)),
      target_(target) {}

SolveResult SolveGeneric(const Game& game) {
  return Solver(game, nullptr).Run();
}

BestSet BestActions(const Game& game, const NodeAddress& address,
                    const std::vector<UtilityVector>& continuation) {
  const GameTree& tree = Resolve(game, address);
  if (tree.IsLeaf()) {
    throw std::invalid_argument("node " + AddressToString(address) +
                                " is a leaf");
  }
  const DecisionNode& node = tree.decision();
  if (continuation.size() != node.branches.size()) {
    throw std::invalid_argument(
        "continuation has " + std::to_string(continuation.size()) +
        " entries, node " + AddressToString(address) + " has " +
        std::to_string(node.branches.size()) + " branches");
  }
  const int own = node.mover - 1;
  const Utility* best = &continuation[0][own];
  for (const UtilityVector& value : continuation) {
    if (value[own] > *best) best = &value[own];
  }
  BestSet out{address, {}};
  for (int i = 0; i < static_cast<int>(continuation.size()); ++i) {
    if (continuation[i][own] == *best) out.actions.push_back(i);
  }
  return out;
}

SolveResult SolveWithPolicy(const Game& game, const TieBreakPolicy& policy) {
  TieBreaker tie_breaker(policy, game.num_players);
  return Solver(game, &tie_breaker).Run();
}

Utility FriendlinessScore(const std::vector<Utility>& utilities, int chosen) {
  if (utilities.empty()) {
    throw std::invalid_argument("friendliness score of an empty set");
  }
  if (chosen < 0 || chosen >= static_cast<int>(utilities.size())) {
    throw std::out_of_range("chosen index " + std::to_string(chosen) +
                            " out of range");
  }
  auto [lo, hi] = std::minmax_element(utilities.begin(), utilities.end());
  if (*lo == *hi) return Utility(1);
  return (utilities[chosen] - *lo) / (*hi - *lo);
}

FriendlinessReport ClassifyFriendliness(
    const Game& game, const NodeAddress& address,
    const std::vector<UtilityVector>& continuation) {
  BestSet best = BestActions(game, address, continuation);
  const PlayerId mover = Resolve(game, address).decision().mover;
  FriendlinessReport report{address, mover, {}};
  for (size_t k = 0; k < best.actions.size(); ++k) {
    FriendlinessEntry entry{best.actions[k], {}, {}};
    for (PlayerId other = 1; other <= game.num_players; ++other) {
      if (other == mover) continue;
      std::vector<Utility> values;
      for (int action : best.actions) {
        values.push_back(continuation[action][other - 1]);
      }
      Utility score = FriendlinessScore(values, static_cast<int>(k));
      entry.classification[other] = score == Utility(1)
                                        ? Disposition::kFriendly
                                        : Disposition::kUnfriendly;
      entry.score.emplace(other, std::move(score));
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<SpeProfile> EnumerateSpe(const Game& game) {
  NodeAddress address;
  std::vector<PartialProfile> partial =
      EnumerateSubtree(game, game.root, address);
  std::vector<SpeProfile> out;
  out.reserve(partial.size());
  for (PartialProfile& p : partial) {
    out.push_back(SpeProfile{std::move(p.actions), std::move(p.outcome)});
  }
  std::sort(out.begin(), out.end(),
            [](const SpeProfile& a, const SpeProfile& b) {
              return a.actions < b.actions;
            });
  return out;
}

ScenarioTable ScenarioSolve(const Game& game,
                            std::vector<DispositionProfile> profiles) {
  if (profiles.empty()) profiles = DispositionProfile::All(game.num_players);
  ScenarioTable table;
  for (const DispositionProfile& profile : profiles) {
    table.emplace(profile, SolveWithPolicy(game, ByProfile{profile}));
  }
  return table;
}

Game Collapse(const Game& game, const NodeAddress& address,
              const SolveResult& result) {
  const GameTree& subtree = Resolve(game, address);
  if (subtree.IsLeaf()) {
    throw std::invalid_argument("cannot collapse leaf " +
                                AddressToString(address));
  }
  const GameTree* tree = &subtree;
  NodeAddress relative;
  for (const auto& [node, choice] : result.chosen_path) {
    if (node != relative || tree->IsLeaf() || choice < 0 ||
        choice >= static_cast<int>(tree->decision().branches.size())) {
      throw std::invalid_argument("solve result does not match subgame at " +
                                  AddressToString(address));
    }
    tree = &tree->decision().branches[choice].subtree;
    relative.push_back(choice);
  }
  if (!tree->IsLeaf() || tree->leaf().outcome.utilities != result.root_value) {
    throw std::invalid_argument("solve result does not match subgame at " +
                                AddressToString(address));
  }
  return ReplaceSubtree(game, address,
                        MakeLeaf(result.root_value, tree->leaf().outcome.label));
}

}  // namespace tiebreak::induction
