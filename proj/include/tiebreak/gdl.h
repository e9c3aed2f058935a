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

#ifndef TIEBREAK_GDL_H_
#define TIEBREAK_GDL_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tiebreak/core.h"

// Game description language (.gdl): an s-expression format for game trees.
//
//   game    := "(" "game" "players" INT tree ")"
//   tree    := node | leaf
//   node    := "(" "node" "p" INT branch branch* ")"
//   branch  := "(" STRING tree ")"
//   leaf    := "(" "leaf" [STRING] "(" RAT+ ")" ")"
//   RAT     := ["-"] INT [ "/" INT ]
//   STRING  := double-quoted, escapes \" and \\ only
//
// ';' starts a comment that runs to the end of the line.

namespace tiebreak::gdl {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string message,
             std::optional<std::string> expected = std::nullopt);

  // 1-based position of the offending character.
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::optional<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::string message_;
  std::optional<std::string> expected_;
};

// Parses a complete game. Any accepted text yields a game with no
// Validate() violations; semantic problems (mover out of range, payoff
// count, duplicate action labels) are reported as ParseError at the
// offending node.
Game ParseGame(std::string_view source);

// Canonical text: one node per line, two spaces of indentation per depth,
// rationals in lowest terms. Ends with a newline.
std::string Serialize(const Game& game);

// Player 1 picks "L" (Player 2 node over A=(1,0), B=(0,0)) or "R" (Player 2
// node over C=(1,1), D=(0,1)). Player 2 is indifferent at both nodes.
Game IndifferenceGame();

// IndifferenceGame with Player 2 fixed to tit-for-tat: "L" -> B=(0,0),
// "R" -> C=(1,1).
Game TftReducedGame();

// Player 2 first picks "L" or "R". The left subgame is IndifferenceGame with
// Player 1's nonzero payoffs doubled (A'=(2,0), B'=(0,0), C'=(2,1),
// D'=(0,1)); the right subgame is IndifferenceGame unchanged.
Game ThreeStageGame();

}  // namespace tiebreak::gdl

#endif  // TIEBREAK_GDL_H_
