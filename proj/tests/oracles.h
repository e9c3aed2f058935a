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

#ifndef TIEBREAK_TESTS_ORACLES_H_
#define TIEBREAK_TESTS_ORACLES_H_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tiebreak/core.h"
#include "tiebreak/induction.h"

// Exhaustive reference implementations. They share no code with the solver
// beyond the tree types, and favor obviousness over speed.

namespace tiebreak::testing {

using induction::ActionAssignment;

// Every decision node with its mover, preorder.
std::vector<std::pair<NodeAddress, PlayerId>> OracleDecisionNodes(
    const Game& game);

// Leaf reached from `start` when every node follows `assignment`.
Outcome FollowAssignment(const Game& game, const ActionAssignment& assignment,
                         const NodeAddress& start = {});

// Every complete assignment of a branch to each decision node, sorted.
std::vector<ActionAssignment> AllAssignments(const Game& game);

// Assignments in which each node's choice maximizes the mover's utility
// against the continuation that the assignment itself induces.
std::vector<ActionAssignment> BruteForceSpe(const Game& game);

// Restriction of an assignment to one player's nodes.
ActionAssignment RestrictTo(const Game& game, const ActionAssignment& full,
                            PlayerId player);

// Pure Nash equilibria as per-player assignments (index player - 1), found
// by trying every unilateral deviation.
std::vector<std::vector<ActionAssignment>> BruteForceNash(const Game& game);

// Picks a branch given the mover and the continuation of every branch.
using ChoiceRule =
    std::function<int(PlayerId mover, const std::vector<UtilityVector>&)>;

// Assignments where every node's choice equals `rule` applied to the
// continuations the assignment induces. At most one exists.
std::vector<ActionAssignment> BruteForceRuleAssignments(const Game& game,
                                                        const ChoiceRule& rule);

// Reference tie-break rules written directly from their definitions.
// TargetRule returns -1 (matches nothing) when the target itself is tied.
ChoiceRule FirstListedRule();
ChoiceRule TargetRule(PlayerId target, bool friendly);
ChoiceRule ProfileRule(const std::vector<bool>& friendly_by_player);

// Paper-style label for an indifference-game strategy label: player 1
// "R" -> "F", "L" -> "U"; player 2 lists its response to F (the right
// node) first, so "RL" -> "FU".
std::string PaperLabel(PlayerId player, const std::string& label);

// True when `b` is `a` with each action label at depth d renamed by
// rename(d, label), ignoring branch order and leaf labels.
bool IsomorphicUnderRenaming(
    const GameTree& a, const GameTree& b,
    const std::function<std::string(int, const std::string&)>& rename,
    int depth = 0);

}  // namespace tiebreak::testing

#endif  // TIEBREAK_TESTS_ORACLES_H_
