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

#include "tiebreak/gdl.h"

#include <cctype>
#include <charconv>
#include <set>
#include <utility>
#include <vector>

namespace tiebreak::gdl {
namespace {

enum class TokenKind { kOpen, kClose, kString, kAtom, kEnd };

struct Token {
  TokenKind kind;
  std::string text;  // unescaped contents for strings, raw for atoms
  int line;
  int column;
};

std::string Describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::kOpen:
      return "'('";
    case TokenKind::kClose:
      return "')'";
    case TokenKind::kString:
      return "string \"" + token.text + "\"";
    case TokenKind::kAtom:
      return "'" + token.text + "'";
    case TokenKind::kEnd:
      return "end of input";
  }
  return "token";
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : source_(source) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      SkipSpaceAndComments();
      if (pos_ >= source_.size()) {
        tokens.push_back({TokenKind::kEnd, "", line_, column_});
        return tokens;
      }
      char c = source_[pos_];
      int line = line_;
      int column = column_;
      if (c == '(') {
        Advance();
        tokens.push_back({TokenKind::kOpen, "(", line, column});
      } else if (c == ')') {
        Advance();
        tokens.push_back({TokenKind::kClose, ")", line, column});
      } else if (c == '"') {
        tokens.push_back({TokenKind::kString, ReadString(), line, column});
      } else {
        std::string atom;
        while (pos_ < source_.size() && !IsDelimiter(source_[pos_])) {
          atom += source_[pos_];
          Advance();
        }
        tokens.push_back({TokenKind::kAtom, atom, line, column});
      }
    }
  }

 private:
  static bool IsDelimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' ||
           c == ')' || c == '"' || c == ';';
  }

  void Advance() {
    if (source_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipSpaceAndComments() {
    while (pos_ < source_.size()) {
      char c = source_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (c == ';') {
        while (pos_ < source_.size() && source_[pos_] != '\n') Advance();
      } else {
        return;
      }
    }
  }

  std::string ReadString() {
    int start_line = line_;
    int start_column = column_;
    Advance();  // opening quote
    std::string out;
    while (true) {
      if (pos_ >= source_.size()) {
        throw ParseError(start_line, start_column, "unterminated string",
                         "'\"'");
      }
      char c = source_[pos_];
      if (c == '"') {
        Advance();
        return out;
      }
      if (c == '\\') {
        int line = line_;
        int column = column_;
        Advance();
        if (pos_ >= source_.size()) {
          throw ParseError(start_line, start_column, "unterminated string",
                           "'\"'");
        }
        char escaped = source_[pos_];
        if (escaped != '"' && escaped != '\\') {
          throw ParseError(line, column,
                           std::string("invalid escape sequence \\") + escaped,
                           "\\\" or \\\\");
        }
        out += escaped;
        Advance();
        continue;
      }
      out += c;
      Advance();
    }
  }

  std::string_view source_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Game ParseTopLevel() {
    Expect(TokenKind::kOpen, "'('");
    ExpectKeyword("game");
    ExpectKeyword("players");
    const Token& count_token = Peek();
    num_players_ = ExpectPositiveInt("player count");
    if (num_players_ < 1) {
      throw ParseError(count_token.line, count_token.column,
                       "game needs at least 1 player");
    }
    GameTree root = ParseTree();
    Expect(TokenKind::kClose, "')'");
    if (Peek().kind != TokenKind::kEnd) {
      Fail("unexpected input after game", "end of input");
    }
    return Game{num_players_, std::move(root)};
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }

  const Token& Next() {
    const Token& token = tokens_[pos_];
    if (token.kind != TokenKind::kEnd) ++pos_;
    return token;
  }

  [[noreturn]] void Fail(const std::string& message,
                         std::optional<std::string> expected) const {
    const Token& token = Peek();
    throw ParseError(token.line, token.column,
                     message + ", found " + Describe(token),
                     std::move(expected));
  }

  const Token& Expect(TokenKind kind, const std::string& description) {
    if (Peek().kind != kind) Fail("expected " + description, description);
    return Next();
  }

  void ExpectKeyword(const std::string& keyword) {
    if (Peek().kind != TokenKind::kAtom || Peek().text != keyword) {
      Fail("expected '" + keyword + "'", "'" + keyword + "'");
    }
    Next();
  }

  int ExpectPositiveInt(const std::string& what) {
    const Token& token = Peek();
    int value = 0;
    bool ok = token.kind == TokenKind::kAtom && !token.text.empty() &&
              std::isdigit(static_cast<unsigned char>(token.text[0]));
    if (ok) {
      const char* begin = token.text.data();
      const char* end = begin + token.text.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      ok = ec == std::errc() && ptr == end;
    }
    if (!ok) Fail("expected integer " + what, "integer");
    Next();
    return value;
  }

  GameTree ParseTree() {
    const Token& open = Expect(TokenKind::kOpen, "'('");
    if (Peek().kind == TokenKind::kAtom && Peek().text == "node") {
      Next();
      return ParseNodeBody(open);
    }
    if (Peek().kind == TokenKind::kAtom && Peek().text == "leaf") {
      Next();
      return ParseLeafBody(open);
    }
    Fail("expected 'node' or 'leaf'", "'node' or 'leaf'");
  }

  GameTree ParseNodeBody(const Token& open) {
    ExpectKeyword("p");
    const Token& mover_token = Peek();
    int mover = ExpectPositiveInt("mover");
    if (mover < 1 || mover > num_players_) {
      throw ParseError(mover_token.line, mover_token.column,
                       "player index " + std::to_string(mover) +
                           " out of range 1.." + std::to_string(num_players_));
    }
    DecisionNode node;
    node.mover = mover;
    std::set<std::string> labels;
    while (Peek().kind == TokenKind::kOpen) {
      Next();
      const Token& label = Expect(TokenKind::kString, "action label string");
      if (!labels.insert(label.text).second) {
        throw ParseError(label.line, label.column,
                         "duplicate action label \"" + label.text +
                             "\" at node opened at line " +
                             std::to_string(open.line) + ", column " +
                             std::to_string(open.column));
      }
      std::string text = label.text;
      GameTree subtree = ParseTree();
      Expect(TokenKind::kClose, "')'");
      node.branches.push_back(Branch{std::move(text), std::move(subtree)});
    }
    if (node.branches.empty()) Fail("expected branch '('", "'('");
    Expect(TokenKind::kClose, "')'");
    return node;
  }

  GameTree ParseLeafBody(const Token& open) {
    std::optional<std::string> label;
    if (Peek().kind == TokenKind::kString) label = Next().text;
    Expect(TokenKind::kOpen, "'(' before payoffs");
    UtilityVector utilities;
    while (Peek().kind == TokenKind::kAtom) {
      const Token& token = Peek();
      std::optional<Utility> value = Utility::FromString(token.text);
      if (!value.has_value()) {
        Fail("malformed rational", "rational n or n/d with d > 0");
      }
      utilities.push_back(*std::move(value));
      Next();
    }
    if (utilities.empty()) Fail("expected at least one payoff", "rational");
    Expect(TokenKind::kClose, "')'");
    if (static_cast<int>(utilities.size()) != num_players_) {
      throw ParseError(open.line, open.column,
                       "expected " + std::to_string(num_players_) +
                           " payoffs, found " +
                           std::to_string(utilities.size()));
    }
    Expect(TokenKind::kClose, "')'");
    return Leaf{Outcome{std::move(label), std::move(utilities)}};
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  int num_players_ = 0;
};

std::string Quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string LeafText(const Outcome& outcome) {
  std::string out = "(leaf ";
  if (outcome.label.has_value()) out += Quote(*outcome.label) + " ";
  return out + UtilityVectorToString(outcome.utilities) + ")";
}

// Emits `tree` starting on a fresh line. `closers` is appended to the last
// line this tree produces.
void Emit(const GameTree& tree, int indent, const std::string& prefix,
          const std::string& closers, std::string& out) {
  std::string pad(indent, ' ');
  if (tree.IsLeaf()) {
    out += pad + prefix + LeafText(tree.leaf().outcome) + closers + "\n";
    return;
  }
  const DecisionNode& node = tree.decision();
  out += pad + prefix + "(node p " + std::to_string(node.mover) + "\n";
  for (size_t i = 0; i < node.branches.size(); ++i) {
    const Branch& branch = node.branches[i];
    bool last = i + 1 == node.branches.size();
    Emit(branch.subtree, indent + 2, "(" + Quote(branch.label) + " ",
         last ? "))" + closers : std::string(")"), out);
  }
}

Game WithPlayerOneScaled(Game game, const Utility& factor) {
  std::vector<std::pair<NodeAddress, Outcome>> leaves = Leaves(game);
  for (const auto& [address, outcome] : leaves) {
    Game next = ReplaceSubtree(
        game, address,
        MakeLeaf({outcome.utilities[0] * factor, outcome.utilities[1]},
                 outcome.label.has_value()
                     ? std::optional<std::string>(*outcome.label + "'")
                     : std::nullopt));
    game = std::move(next);
  }
  return game;
}

}  // namespace

ParseError::ParseError(int line, int column, std::string message,
                       std::optional<std::string> expected)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

Game ParseGame(std::string_view source) {
  Parser parser(Lexer(source).Run());
  return parser.ParseTopLevel();
}

std::string Serialize(const Game& game) {
  std::string out = "(game players " + std::to_string(game.num_players) + "\n";
  Emit(game.root, 2, "", ")", out);
  return out;
}

Game IndifferenceGame() {
  return Game{
      2, MakeNode(1, {{"L", MakeNode(2, {{"L", MakeLeaf({1, 0}, "A")},
                                         {"R", MakeLeaf({0, 0}, "B")}})},
                      {"R", MakeNode(2, {{"L", MakeLeaf({1, 1}, "C")},
                                         {"R", MakeLeaf({0, 1}, "D")}})}})};
}

Game TftReducedGame() {
  return Game{2, MakeNode(1, {{"L", MakeLeaf({0, 0}, "B")},
                              {"R", MakeLeaf({1, 1}, "C")}})};
}

Game ThreeStageGame() {
  Game left = WithPlayerOneScaled(IndifferenceGame(), Utility(2));
  Game right = IndifferenceGame();
  return Game{2, MakeNode(2, {{"L", std::move(left.root)},
                              {"R", std::move(right.root)}})};
}

}  // namespace tiebreak::gdl
