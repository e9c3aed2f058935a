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

#ifndef TIEBREAK_INDUCTION_H_
#define TIEBREAK_INDUCTION_H_

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tiebreak/core.h"

// Backward induction that treats indifference explicitly.
//
// At every decision node the mover's best set is computed exactly. When the
// best set has more than one action, a tie-break policy picks among them
// using only the utilities of the other players:
//
//   FirstListed      lowest branch index
//   FriendlyTo(t)    maximize u_t over the best set
//   UnfriendlyTo(t)  minimize u_t over the best set
//   ByProfile(p)     the mover m is friendly or unfriendly (per p(m)) toward
//                    every other player; other players are considered in
//                    ascending index order, each one narrowing the
//                    candidate set
//
// Residual ties always go to the lowest branch index.

namespace tiebreak::induction {

// Actions at `node` that maximize the mover's continuation utility. Sorted.
struct BestSet {
  NodeAddress node;
  std::vector<int> actions;

  bool operator==(const BestSet&) const = default;
};

enum class Disposition { kFriendly, kUnfriendly };

// 'F' or 'U'.
char DispositionChar(Disposition disposition);

// Disposition of each player when breaking its own ties.
class DispositionProfile {
 public:
  DispositionProfile() = default;
  // dispositions[i] belongs to player i + 1.
  explicit DispositionProfile(std::vector<Disposition> dispositions)
      : dispositions_(std::move(dispositions)) {}

  // All 2^n profiles, player 1 most significant, Friendly before Unfriendly.
  static std::vector<DispositionProfile> All(int num_players);

  // Parses "1=F,2=U". Every player 1..num_players must appear exactly once.
  // Throws std::invalid_argument.
  static DispositionProfile Parse(const std::string& spec, int num_players);

  int num_players() const { return static_cast<int>(dispositions_.size()); }
  Disposition of(PlayerId player) const;

  // "1=F,2=U".
  std::string ToString() const;

  auto operator<=>(const DispositionProfile&) const = default;

 private:
  std::vector<Disposition> dispositions_;
};

struct FirstListed {};
struct FriendlyTo {
  PlayerId target;
};
struct UnfriendlyTo {
  PlayerId target;
};
struct ByProfile {
  DispositionProfile profile;
};

using TieBreakPolicy =
    std::variant<FirstListed, FriendlyTo, UnfriendlyTo, ByProfile>;

// Parses the command-line policy syntax: "first", "friendly:I",
// "unfriendly:I", "profile:1=F,2=U". Throws std::invalid_argument.
TieBreakPolicy ParsePolicy(const std::string& text, int num_players);

struct SolveResult {
  UtilityVector root_value;
  // (node, chosen branch) along the realized play, root first.
  std::vector<std::pair<NodeAddress, int>> chosen_path;
  // One entry for every decision node, reached or not.
  std::map<NodeAddress, BestSet> best_sets;
  std::set<NodeAddress> tie_nodes;
  // Induced value of every node (leaves included) under the policy.
  std::map<NodeAddress, UtilityVector> node_values;
  // Chosen branch at every decision node.
  std::map<NodeAddress, int> choices;
};

// Thrown by SolveGeneric at the first tie found in left-to-right
// post-order evaluation.
class IndifferenceError : public std::runtime_error {
 public:
  IndifferenceError(NodeAddress node, PlayerId mover, std::vector<int> tied);

  const NodeAddress& node() const { return node_; }
  PlayerId mover() const { return mover_; }
  const std::vector<int>& tied_actions() const { return tied_; }

 private:
  NodeAddress node_;
  PlayerId mover_;
  std::vector<int> tied_;
};

class PolicyTargetIsMover : public std::invalid_argument {
 public:
  PolicyTargetIsMover(NodeAddress node, PlayerId target);

  const NodeAddress& node() const { return node_; }
  PlayerId target() const { return target_; }

 private:
  NodeAddress node_;
  PlayerId target_;
};

// Plain backward induction; throws IndifferenceError on any tie.
SolveResult SolveGeneric(const Game& game);

// `continuation[k]` is the value of branch k. Throws std::invalid_argument
// if `address` is a leaf or the continuation does not cover the branches.
BestSet BestActions(const Game& game, const NodeAddress& address,
                    const std::vector<UtilityVector>& continuation);

// Backward induction with ties broken by `policy`.
SolveResult SolveWithPolicy(const Game& game, const TieBreakPolicy& policy);

struct FriendlinessEntry {
  int action;
  // Keyed by every player other than the mover.
  std::map<PlayerId, Disposition> classification;
  std::map<PlayerId, Utility> score;
};

struct FriendlinessReport {
  NodeAddress node;
  PlayerId mover;
  // One entry per best-set action, ascending.
  std::vector<FriendlinessEntry> entries;
};

FriendlinessReport ClassifyFriendliness(
    const Game& game, const NodeAddress& address,
    const std::vector<UtilityVector>& continuation);

// Position of utilities[chosen] within [min, max] of `utilities`, scaled to
// [0, 1]; 1 when every value is equal.
Utility FriendlinessScore(const std::vector<Utility>& utilities, int chosen);

// A full pure strategy profile: the chosen branch at every decision node,
// keyed by address (so iteration is in preorder).
using ActionAssignment = std::map<NodeAddress, int>;

struct SpeProfile {
  ActionAssignment actions;
  Outcome outcome;

  bool operator==(const SpeProfile&) const = default;
};

// All pure subgame-perfect equilibria, ordered lexicographically by the
// branch indices in preorder.
std::vector<SpeProfile> EnumerateSpe(const Game& game);

using ScenarioTable = std::map<DispositionProfile, SolveResult>;

// SolveWithPolicy(game, ByProfile(p)) for each p. An empty `profiles`
// means all 2^n profiles.
ScenarioTable ScenarioSolve(const Game& game,
                            std::vector<DispositionProfile> profiles = {});

// Replaces the subgame at `address` with a leaf carrying the result's value
// and the label of the leaf it reaches. `result` must have been computed on
// Subgame(game, address); throws std::invalid_argument otherwise.
Game Collapse(const Game& game, const NodeAddress& address,
              const SolveResult& result);

}  // namespace tiebreak::induction

#endif  // TIEBREAK_INDUCTION_H_
