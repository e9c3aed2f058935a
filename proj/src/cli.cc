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

#include "tiebreak/cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "tiebreak/core.h"
#include "tiebreak/gdl.h"
#include "tiebreak/induction.h"
#include "tiebreak/normal_form.h"
#include "tiebreak/repeated.h"

namespace tiebreak::cli {
namespace {

using Row = std::vector<std::string>;

// Thrown for bad input files or flag values; Run() maps it to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Table {
 public:
  explicit Table(Row header) { rows_.push_back(std::move(header)); }

  void Add(Row row) { rows_.push_back(std::move(row)); }

  void Print(std::ostream& out, bool align) const {
    std::vector<size_t> widths;
    for (const Row& row : rows_) {
      widths.resize(std::max(widths.size(), row.size()), 0);
      for (size_t c = 0; c < row.size(); ++c) {
        widths[c] = std::max(widths[c], row[c].size());
      }
    }
    for (const Row& row : rows_) {
      std::string line;
      for (size_t c = 0; c < row.size(); ++c) {
        if (c > 0) line += align ? "  " : "\t";
        line += row[c];
        if (align && c + 1 < row.size()) {
          line += std::string(widths[c] - row[c].size(), ' ');
        }
      }
      out << line << "\n";
    }
  }

 private:
  std::vector<Row> rows_;
};

Row PlayerColumns(const std::string& prefix, int num_players) {
  Row out;
  for (int p = 1; p <= num_players; ++p) {
    out.push_back(prefix + std::to_string(p));
  }
  return out;
}

void Append(Row& row, const UtilityVector& utilities) {
  for (const Utility& u : utilities) row.push_back(u.ToString());
}

std::string OrDash(const std::string& text) {
  return text.empty() ? "-" : text;
}

Game LoadGame(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return gdl::ParseGame(buffer.str());
  } catch (const gdl::ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

induction::TieBreakPolicy LoadPolicy(const std::string& text,
                                     int num_players) {
  try {
    return induction::ParsePolicy(text, num_players);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--policy: ") + e.what());
  }
}

std::string PathLabels(const Game& game, const induction::SolveResult& r) {
  std::string out;
  for (const auto& [address, choice] : r.chosen_path) {
    if (!out.empty()) out += ",";
    out += Resolve(game, address).decision().branches[choice].label;
  }
  return OrDash(out);
}

// Strategy labels of `assignment` restricted to each player's nodes.
Row StrategyLabels(const Game& game,
                   const induction::ActionAssignment& assignment) {
  Row out(game.num_players);
  for (const auto& [address, choice] : assignment) {
    const DecisionNode& node = Resolve(game, address).decision();
    out[node.mover - 1] += node.branches[choice].label;
  }
  for (std::string& label : out) label = OrDash(label);
  return out;
}

int CmdValidate(const std::string& path, std::ostream& out, bool align) {
  // Parsing already rejects structurally invalid games; Validate is the
  // same check applied to the parsed value.
  Game game = LoadGame(path);
  std::vector<Violation> violations = Validate(game);
  if (violations.empty()) {
    out << "valid\n";
    return kExitOk;
  }
  Table table({"node", "violation"});
  for (const Violation& v : violations) {
    table.Add({AddressToString(v.address), v.message});
  }
  table.Print(out, align);
  return kExitUsage;
}

int CmdSolve(const std::string& path, const std::string& policy_text,
             std::ostream& out, std::ostream& err, bool align) {
  Game game = LoadGame(path);
  induction::SolveResult result;
  if (policy_text.empty()) {
    try {
      result = induction::SolveGeneric(game);
    } catch (const induction::IndifferenceError& e) {
      std::string tied;
      for (int action : e.tied_actions()) {
        if (!tied.empty()) tied += ",";
        tied += Resolve(game, e.node()).decision().branches[action].label;
      }
      Table table({"indifferent", "mover", "actions"});
      table.Add({AddressToString(e.node()), std::to_string(e.mover()), tied});
      table.Print(out, align);
      err << "solve: " << e.what() << "; pass --policy to break ties\n";
      return kExitIndifferent;
    }
  } else {
    induction::TieBreakPolicy policy = LoadPolicy(policy_text, game.num_players);
    try {
      result = induction::SolveWithPolicy(game, policy);
    } catch (const induction::PolicyTargetIsMover& e) {
      throw UsageError(std::string("--policy: ") + e.what());
    }
  }
  Table table({"node", "mover", "branch", "action"});
  for (const auto& [address, choice] : result.chosen_path) {
    const DecisionNode& node = Resolve(game, address).decision();
    table.Add({AddressToString(address), std::to_string(node.mover),
               std::to_string(choice), node.branches[choice].label});
  }
  Row value{"value"};
  Append(value, result.root_value);
  table.Add(value);
  table.Print(out, align);
  return kExitOk;
}

int CmdSpe(const std::string& path, std::ostream& out, bool align) {
  Game game = LoadGame(path);
  Row header = PlayerColumns("p", game.num_players);
  header.push_back("outcome");
  for (const std::string& c : PlayerColumns("u", game.num_players)) {
    header.push_back(c);
  }
  Table table(header);
  for (const induction::SpeProfile& spe : induction::EnumerateSpe(game)) {
    Row row = StrategyLabels(game, spe.actions);
    row.push_back(spe.outcome.label.value_or("-"));
    Append(row, spe.outcome.utilities);
    table.Add(row);
  }
  table.Print(out, align);
  return kExitOk;
}

int CmdScenarios(const std::string& path, std::ostream& out, bool align) {
  Game game = LoadGame(path);
  Row header{"profile"};
  for (const std::string& c : PlayerColumns("u", game.num_players)) {
    header.push_back(c);
  }
  header.push_back("path");
  Table table(header);
  // Profiles in generation order (player 1 most significant, F before U).
  for (const induction::DispositionProfile& profile :
       induction::DispositionProfile::All(game.num_players)) {
    induction::SolveResult result =
        induction::SolveWithPolicy(game, induction::ByProfile{profile});
    Row row{profile.ToString()};
    Append(row, result.root_value);
    row.push_back(PathLabels(game, result));
    table.Add(row);
  }
  table.Print(out, align);
  return kExitOk;
}

int CmdFriendliness(const std::string& path, const std::string& policy_text,
                    std::ostream& out, bool align) {
  Game game = LoadGame(path);
  induction::TieBreakPolicy policy =
      LoadPolicy(policy_text.empty() ? "first" : policy_text, game.num_players);
  induction::SolveResult result;
  try {
    result = induction::SolveWithPolicy(game, policy);
  } catch (const induction::PolicyTargetIsMover& e) {
    throw UsageError(std::string("--policy: ") + e.what());
  }
  Table table({"node", "mover", "action", "player", "class", "score"});
  for (const NodeAddress& address : result.tie_nodes) {
    const DecisionNode& node = Resolve(game, address).decision();
    std::vector<UtilityVector> continuation;
    for (int i = 0; i < static_cast<int>(node.branches.size()); ++i) {
      NodeAddress child = address;
      child.push_back(i);
      continuation.push_back(result.node_values.at(child));
    }
    induction::FriendlinessReport report =
        induction::ClassifyFriendliness(game, address, continuation);
    for (const induction::FriendlinessEntry& entry : report.entries) {
      for (const auto& [player, disposition] : entry.classification) {
        table.Add({AddressToString(address), std::to_string(report.mover),
                   node.branches[entry.action].label, std::to_string(player),
                   disposition == induction::Disposition::kFriendly
                       ? "friendly"
                       : "unfriendly",
                   entry.score.at(player).ToString()});
      }
    }
  }
  table.Print(out, align);
  return kExitOk;
}

void PrintProfiles(const normal_form::NormalForm& nf,
                   const std::vector<normal_form::Profile>& profiles,
                   std::ostream& out, bool align) {
  Row header = PlayerColumns("p", nf.num_players());
  for (const std::string& c : PlayerColumns("u", nf.num_players())) {
    header.push_back(c);
  }
  Table table(header);
  for (const normal_form::Profile& profile : profiles) {
    Row row;
    for (PlayerId p = 1; p <= nf.num_players(); ++p) {
      row.push_back(OrDash(nf.strategies(p)[profile[p - 1]].label));
    }
    Append(row, nf.payoff(profile));
    table.Add(row);
  }
  table.Print(out, align);
}

int CmdNormalForm(const std::string& path, bool nash_only, std::ostream& out,
                  bool align) {
  Game game = LoadGame(path);
  normal_form::NormalForm nf = normal_form::ToNormalForm(game);
  PrintProfiles(nf, nash_only ? normal_form::PureNash(nf) : nf.Profiles(), out,
                align);
  return kExitOk;
}

int CmdSimulate(const std::string& p1, const std::string& p2, int rounds,
                const std::string& stage_name, bool alternating,
                std::ostream& out, bool align) {
  repeated::StrategyRule first;
  repeated::StrategyRule second;
  try {
    first = repeated::StrategyByName(p1);
    second = repeated::StrategyByName(p2);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--p1/--p2: ") + e.what());
  }
  if (rounds < 1) throw UsageError("--rounds: must be at least 1");
  repeated::PayoffPair total;
  if (alternating) {
    // One round is a move by each player.
    repeated::AlternatingTranscript transcript =
        repeated::PlayAlternating(first, second, 2 * rounds);
    Table table({"move", "player", "action", "u1", "u2"});
    for (size_t i = 0; i < transcript.steps.size(); ++i) {
      const repeated::AlternatingStep& step = transcript.steps[i];
      table.Add({std::to_string(i + 1), std::to_string(step.player),
                 step.action, step.gain[0].ToString(),
                 step.gain[1].ToString()});
    }
    table.Print(out, align);
    total = transcript.cumulative;
  } else {
    if (stage_name != "simind") {
      throw UsageError("--stage: unknown stage game '" + stage_name +
                       "', expected simind");
    }
    repeated::Transcript transcript = repeated::PlayRepeated(
        repeated::SimultaneousIndifference(), first, second, rounds);
    Table table({"round", "p1", "p2", "u1", "u2"});
    for (size_t i = 0; i < transcript.rounds.size(); ++i) {
      const repeated::Round& round = transcript.rounds[i];
      table.Add({std::to_string(i + 1), round.actions.first,
                 round.actions.second, round.payoffs[0].ToString(),
                 round.payoffs[1].ToString()});
    }
    table.Print(out, align);
    total = transcript.cumulative;
  }
  out << "cumulative\t" << total[0].ToString() << "\t" << total[1].ToString()
      << "\n";
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, bool align) {
  CLI::App app{"Solver for finite perfect-information games with ties",
               "tiebreak"};
  app.require_subcommand(1);

  std::string file;
  std::string policy;
  std::function<int()> action;

  auto add_file_command = [&](const std::string& name,
                              const std::string& description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("FILE", file, ".gdl game file")->required();
    return sub;
  };

  add_file_command("validate", "Check a game file for structural problems")
      ->callback([&] { action = [&] { return CmdValidate(file, out, align); }; });
  CLI::App* solve = add_file_command(
      "solve", "Backward induction; exits 2 on a tie unless --policy is set");
  solve->add_option("--policy", policy,
                    "first | friendly:I | unfriendly:I | profile:1=F,2=U");
  solve->callback([&] {
    action = [&] { return CmdSolve(file, policy, out, err, align); };
  });
  add_file_command("spe", "List all pure subgame-perfect equilibria")
      ->callback([&] { action = [&] { return CmdSpe(file, out, align); }; });
  add_file_command("scenarios", "Solve under every disposition profile")
      ->callback(
          [&] { action = [&] { return CmdScenarios(file, out, align); }; });
  CLI::App* friendliness = add_file_command(
      "friendliness", "Classify best actions at tie nodes as (un)friendly");
  friendliness->add_option("--policy", policy,
                           "policy used to resolve ties below each node "
                           "(default: first)");
  friendliness->callback([&] {
    action = [&] { return CmdFriendliness(file, policy, out, align); };
  });
  add_file_command("nf", "Normal-form payoff table")->callback([&] {
    action = [&] { return CmdNormalForm(file, false, out, align); };
  });
  add_file_command("nash", "Pure Nash equilibria of the normal form")
      ->callback(
          [&] { action = [&] { return CmdNormalForm(file, true, out, align); }; });

  std::string p1;
  std::string p2;
  int rounds = 0;
  std::string stage = "simind";
  bool alternating = false;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Finite repeated play of two strategies");
  simulate->add_option("--p1", p1, "tft | allf | allu")->required();
  simulate->add_option("--p2", p2, "tft | allf | allu")->required();
  simulate->add_option("--rounds", rounds, "number of rounds")->required();
  CLI::Option* stage_opt =
      simulate->add_option("--stage", stage, "stage game (simind)");
  simulate->add_flag("--alternating", alternating,
                     "alternating perfect-information version")
      ->excludes(stage_opt);
  simulate->callback([&] {
    action = [&] {
      return CmdSimulate(p1, p2, rounds, stage, alternating, out, align);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace tiebreak::cli
