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

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace tiebreak {
namespace {

bool AllDigits(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

// Tree is GameTree or const GameTree.
template <typename Tree>
Tree& Walk(Tree& root, const NodeAddress& address) {
  Tree* node = &root;
  for (int step = 0; step < static_cast<int>(address.size()); ++step) {
    int index = address[step];
    if (node->IsLeaf()) {
      throw AddressError(address, step,
                         "step " + std::to_string(step) + " of " +
                             AddressToString(address) +
                             ": node is a leaf, branch " +
                             std::to_string(index) + " does not exist");
    }
    auto& branches = node->decision().branches;
    if (index < 0 || index >= static_cast<int>(branches.size())) {
      throw AddressError(address, step,
                         "step " + std::to_string(step) + " of " +
                             AddressToString(address) + ": branch " +
                             std::to_string(index) + " does not exist");
    }
    node = &branches[index].subtree;
  }
  return *node;
}

void ValidateTree(const GameTree& tree, int num_players, NodeAddress& address,
                  std::vector<Violation>& out) {
  if (tree.IsLeaf()) {
    const auto& utilities = tree.leaf().outcome.utilities;
    if (static_cast<int>(utilities.size()) != num_players) {
      out.push_back({address, "leaf has " + std::to_string(utilities.size()) +
                                  " utilities, expected " +
                                  std::to_string(num_players)});
    }
    return;
  }
  const DecisionNode& node = tree.decision();
  if (node.mover < 1 || node.mover > num_players) {
    out.push_back({address, "mover " + std::to_string(node.mover) +
                                " is not in 1.." +
                                std::to_string(num_players)});
  }
  if (node.branches.empty()) {
    out.push_back({address, "decision node has no branches"});
  }
  std::set<std::string> seen;
  for (const Branch& branch : node.branches) {
    if (!seen.insert(branch.label).second) {
      out.push_back(
          {address, "duplicate action label \"" + branch.label + "\""});
    }
  }
  for (int i = 0; i < static_cast<int>(node.branches.size()); ++i) {
    address.push_back(i);
    ValidateTree(node.branches[i].subtree, num_players, address, out);
    address.pop_back();
  }
}

}  // namespace

Utility::Utility(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  boost::multiprecision::cpp_int num = numerator;
  boost::multiprecision::cpp_int den = denominator;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  value_ = Rational(num, den);
}

std::optional<Utility> Utility::FromString(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num_text = text;
  std::string_view den_text = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_text = text.substr(0, slash);
    den_text = text.substr(slash + 1);
  }
  if (!AllDigits(num_text) || !AllDigits(den_text)) return std::nullopt;
  boost::multiprecision::cpp_int num{std::string(num_text)};
  boost::multiprecision::cpp_int den{std::string(den_text)};
  if (den == 0) return std::nullopt;
  if (negative) num = -num;
  return Utility(Rational(num, den));
}

std::string Utility::ToString() const {
  const auto num = boost::multiprecision::numerator(value_);
  const auto den = boost::multiprecision::denominator(value_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::strong_ordering operator<=>(const Utility& a, const Utility& b) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  // Denominators are positive, so cross-multiplying keeps the order.
  const auto& a_den = denominator(a.value_);
  const auto& b_den = denominator(b.value_);
  int sign;
  if (a_den == 1 && b_den == 1) {
    sign = numerator(a.value_).compare(numerator(b.value_));
  } else {
    boost::multiprecision::cpp_int lhs = numerator(a.value_) * b_den;
    boost::multiprecision::cpp_int rhs = numerator(b.value_) * a_den;
    sign = lhs.compare(rhs);
  }
  if (sign < 0) return std::strong_ordering::less;
  if (sign > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Utility operator/(const Utility& a, const Utility& b) {
  if (b.value_ == 0) throw std::domain_error("division by zero utility");
  return Utility(Utility::Rational(a.value_ / b.value_));
}

std::string UtilityVectorToString(const UtilityVector& utilities) {
  std::string out = "(";
  for (size_t i = 0; i < utilities.size(); ++i) {
    if (i > 0) out += ' ';
    out += utilities[i].ToString();
  }
  return out + ")";
}

std::string AddressToString(const NodeAddress& address) {
  std::string out = "[";
  for (size_t i = 0; i < address.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(address[i]);
  }
  return out + "]";
}

const DecisionNode& GameTree::decision() const {
  if (IsLeaf()) throw std::logic_error("game tree node is a leaf");
  return std::get<DecisionNode>(node_);
}

DecisionNode& GameTree::decision() {
  if (IsLeaf()) throw std::logic_error("game tree node is a leaf");
  return std::get<DecisionNode>(node_);
}

const Leaf& GameTree::leaf() const {
  if (!IsLeaf()) throw std::logic_error("game tree node is a decision node");
  return std::get<Leaf>(node_);
}

Leaf& GameTree::leaf() {
  if (!IsLeaf()) throw std::logic_error("game tree node is a decision node");
  return std::get<Leaf>(node_);
}

GameTree MakeLeaf(UtilityVector utilities, std::optional<std::string> label) {
  return Leaf{Outcome{std::move(label), std::move(utilities)}};
}

GameTree MakeNode(PlayerId mover,
                  std::vector<std::pair<std::string, GameTree>> branches) {
  DecisionNode node;
  node.mover = mover;
  node.branches.reserve(branches.size());
  for (auto& [label, subtree] : branches) {
    node.branches.push_back(Branch{std::move(label), std::move(subtree)});
  }
  return node;
}

std::vector<Violation> Validate(const Game& game) {
  std::vector<Violation> out;
  if (game.num_players < 1) {
    out.push_back({{}, "game declares " + std::to_string(game.num_players) +
                           " players, need at least 1"});
  }
  NodeAddress address;
  ValidateTree(game.root, game.num_players, address, out);
  return out;
}

const GameTree& Resolve(const Game& game, const NodeAddress& address) {
  return Walk(game.root, address);
}

Game Subgame(const Game& game, const NodeAddress& address) {
  return Game{game.num_players, Resolve(game, address)};
}

Game ReplaceSubtree(const Game& game, const NodeAddress& address,
                    GameTree replacement) {
  Game copy = game;
  Walk(copy.root, address) = std::move(replacement);
  return copy;
}

Game CanonicalizeOutcomes(const Game& game) {
  std::vector<std::pair<NodeAddress, Outcome>> leaves = Leaves(game);
  std::map<UtilityVector, std::optional<std::string>> label_of;
  for (const auto& [address, outcome] : leaves) {
    auto [it, inserted] = label_of.emplace(outcome.utilities, outcome.label);
    if (!inserted && !it->second.has_value()) it->second = outcome.label;
  }
  Game copy = game;
  for (const auto& [address, outcome] : leaves) {
    Walk(copy.root, address).leaf().outcome.label =
        label_of.at(outcome.utilities);
  }
  return copy;
}

std::vector<std::pair<NodeAddress, Outcome>> Leaves(const Game& game) {
  std::vector<std::pair<NodeAddress, Outcome>> out;
  NodeAddress address;
  std::function<void(const GameTree&)> walk = [&](const GameTree& tree) {
    if (tree.IsLeaf()) {
      out.emplace_back(address, tree.leaf().outcome);
      return;
    }
    const auto& branches = tree.decision().branches;
    for (int i = 0; i < static_cast<int>(branches.size()); ++i) {
      address.push_back(i);
      walk(branches[i].subtree);
      address.pop_back();
    }
  };
  walk(game.root);
  return out;
}

std::vector<NodeAddress> DecisionNodes(const Game& game,
                                       std::optional<PlayerId> mover) {
  std::vector<NodeAddress> out;
  NodeAddress address;
  std::function<void(const GameTree&)> walk = [&](const GameTree& tree) {
    if (tree.IsLeaf()) return;
    const DecisionNode& node = tree.decision();
    if (!mover.has_value() || node.mover == *mover) out.push_back(address);
    for (int i = 0; i < static_cast<int>(node.branches.size()); ++i) {
      address.push_back(i);
      walk(node.branches[i].subtree);
      address.pop_back();
    }
  };
  walk(game.root);
  return out;
}

}  // namespace tiebreak
