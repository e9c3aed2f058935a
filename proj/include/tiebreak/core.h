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

#ifndef TIEBREAK_CORE_H_
#define TIEBREAK_CORE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Domain model for finite perfect-information games with exact utilities.
//
// Players are identified by 1-based indices everywhere. Utilities are exact
// rationals so that indifference (u_i(A) == u_i(B)) is decidable.

namespace tiebreak {

// 1-based player index.
using PlayerId = int;

// An exact rational utility value. Always stored in lowest terms with a
// positive denominator.
class Utility {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  Utility() = default;
  Utility(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Utility(std::int64_t numerator, std::int64_t denominator);
  explicit Utility(Rational value) : value_(std::move(value)) {}

  // Parses "n", "-n", "n/d" or "-n/d" with d > 0. Returns nullopt on
  // malformed text or a zero denominator.
  static std::optional<Utility> FromString(std::string_view text);

  // "n" when the denominator is 1, otherwise "n/d" in lowest terms.
  std::string ToString() const;

  const Rational& rational() const { return value_; }

  friend bool operator==(const Utility& a, const Utility& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Utility& a, const Utility& b);

  friend Utility operator+(const Utility& a, const Utility& b) {
    return Utility(Rational(a.value_ + b.value_));
  }
  friend Utility operator-(const Utility& a, const Utility& b) {
    return Utility(Rational(a.value_ - b.value_));
  }
  friend Utility operator*(const Utility& a, const Utility& b) {
    return Utility(Rational(a.value_ * b.value_));
  }
  // Throws std::domain_error on division by zero.
  friend Utility operator/(const Utility& a, const Utility& b);
  Utility& operator+=(const Utility& other) {
    value_ += other.value_;
    return *this;
  }

 private:
  Rational value_;
};

using UtilityVector = std::vector<Utility>;

// "(1 0)" style rendering, space separated.
std::string UtilityVectorToString(const UtilityVector& utilities);

struct Outcome {
  std::optional<std::string> label;
  UtilityVector utilities;

  bool operator==(const Outcome&) const = default;
};

// Sequence of 0-based branch indices from the root.
using NodeAddress = std::vector<int>;

// "[0,1]"; the root is "[]".
std::string AddressToString(const NodeAddress& address);

struct Branch;

struct DecisionNode {
  PlayerId mover = 1;
  std::vector<Branch> branches;

  bool operator==(const DecisionNode&) const;
};

struct Leaf {
  Outcome outcome;

  bool operator==(const Leaf&) const = default;
};

// A finite game tree. Trees are plain values; copying deep-copies.
class GameTree {
 public:
  GameTree() : node_(Leaf{}) {}
  GameTree(DecisionNode node) : node_(std::move(node)) {}  // NOLINT
  GameTree(Leaf leaf) : node_(std::move(leaf)) {}          // NOLINT

  bool IsLeaf() const { return std::holds_alternative<Leaf>(node_); }
  bool IsDecision() const { return !IsLeaf(); }

  // Both accessors throw std::logic_error on the wrong alternative.
  const DecisionNode& decision() const;
  DecisionNode& decision();
  const Leaf& leaf() const;
  Leaf& leaf();

  bool operator==(const GameTree&) const = default;

 private:
  std::variant<DecisionNode, Leaf> node_;
};

struct Branch {
  std::string label;
  GameTree subtree;

  bool operator==(const Branch&) const = default;
};

inline bool DecisionNode::operator==(const DecisionNode& other) const {
  return mover == other.mover && branches == other.branches;
}

struct Game {
  int num_players = 1;
  GameTree root;

  bool operator==(const Game&) const = default;
};

// Convenience constructors used by builders and tests.
GameTree MakeLeaf(UtilityVector utilities,
                  std::optional<std::string> label = std::nullopt);
GameTree MakeNode(PlayerId mover,
                  std::vector<std::pair<std::string, GameTree>> branches);

struct Violation {
  NodeAddress address;
  std::string message;

  bool operator==(const Violation&) const = default;
};

// Returns every broken structural invariant; empty iff the game is valid.
std::vector<Violation> Validate(const Game& game);

class AddressError : public std::out_of_range {
 public:
  AddressError(NodeAddress address, int failed_step, const std::string& what)
      : std::out_of_range(what),
        address_(std::move(address)),
        failed_step_(failed_step) {}

  const NodeAddress& address() const { return address_; }
  // 0-based position in the address of the first invalid step.
  int failed_step() const { return failed_step_; }

 private:
  NodeAddress address_;
  int failed_step_;
};

// Subtree at `address`; throws AddressError naming the first invalid step.
const GameTree& Resolve(const Game& game, const NodeAddress& address);

// The game rooted at `address`, with the same number of players.
Game Subgame(const Game& game, const NodeAddress& address);

// Copy of `game` with the subtree at `address` replaced by `replacement`.
Game ReplaceSubtree(const Game& game, const NodeAddress& address,
                    GameTree replacement);

// Leaves whose utility vectors agree for every player get one label: the
// first non-empty label among them in depth-first, left-to-right order.
Game CanonicalizeOutcomes(const Game& game);

// Depth-first, left-to-right enumeration of all leaves.
std::vector<std::pair<NodeAddress, Outcome>> Leaves(const Game& game);

// Depth-first (preorder) addresses of all decision nodes, optionally
// restricted to one mover.
std::vector<NodeAddress> DecisionNodes(const Game& game,
                                       std::optional<PlayerId> mover =
                                           std::nullopt);

}  // namespace tiebreak

#endif  // TIEBREAK_CORE_H_
