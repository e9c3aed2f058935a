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

#include "tiebreak/normal_form.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace tiebreak::normal_form {
namespace {

// Advances `profile` to the next one in lexicographic order, skipping the
// coordinate `frozen` (pass -1 to skip none). Returns false on wrap-around.
bool NextProfile(Profile& profile, const std::vector<int>& radix,
                 int frozen = -1) {
  for (int i = static_cast<int>(profile.size()) - 1; i >= 0; --i) {
    if (i == frozen) continue;
    if (++profile[i] < radix[i]) return true;
    profile[i] = 0;
  }
  return false;
}

Profile WithStrategy(const std::vector<int>& others, PlayerId player,
                     int strategy) {
  Profile profile = others;
  profile.insert(profile.begin() + (player - 1), strategy);
  return profile;
}

void CheckPlayer(const NormalForm& nf, PlayerId player) {
  if (player < 1 || player > nf.num_players()) {
    throw std::invalid_argument("player " + std::to_string(player) +
                                " is not in 1.." +
                                std::to_string(nf.num_players()));
  }
}

}  // namespace

NormalForm::NormalForm(std::vector<std::vector<PureStrategy>> strategies,
                       std::vector<UtilityVector> payoffs)
    : strategies_(std::move(strategies)), payoffs_(std::move(payoffs)) {
  size_t expected = 1;
  for (const auto& list : strategies_) {
    if (list.empty()) {
      throw std::invalid_argument("every player needs at least one strategy");
    }
    expected *= list.size();
  }
  if (payoffs_.size() != expected) {
    throw std::invalid_argument("payoff tensor has " +
                                std::to_string(payoffs_.size()) +
                                " cells, expected " + std::to_string(expected));
  }
  for (const UtilityVector& cell : payoffs_) {
    if (cell.size() != strategies_.size()) {
      throw std::invalid_argument("payoff cell has wrong number of players");
    }
  }
}

int NormalForm::FlatIndex(const Profile& profile) const {
  if (profile.size() != strategies_.size()) {
    throw std::invalid_argument("profile has " +
                                std::to_string(profile.size()) +
                                " entries, expected " +
                                std::to_string(strategies_.size()));
  }
  int index = 0;
  for (size_t p = 0; p < profile.size(); ++p) {
    int radix = static_cast<int>(strategies_[p].size());
    if (profile[p] < 0 || profile[p] >= radix) {
      throw std::out_of_range("strategy index " + std::to_string(profile[p]) +
                              " out of range for player " +
                              std::to_string(p + 1));
    }
    index = index * radix + profile[p];
  }
  return index;
}

const UtilityVector& NormalForm::payoff(const Profile& profile) const {
  return payoffs_[FlatIndex(profile)];
}

std::vector<Profile> NormalForm::Profiles() const {
  std::vector<int> radix;
  for (const auto& list : strategies_) {
    radix.push_back(static_cast<int>(list.size()));
  }
  std::vector<Profile> out;
  Profile profile(radix.size(), 0);
  do {
    out.push_back(profile);
  } while (NextProfile(profile, radix));
  return out;
}

Outcome Play(const Game& game, const std::vector<PureStrategy>& profile) {
  const GameTree* tree = &game.root;
  NodeAddress address;
  while (tree->IsDecision()) {
    const DecisionNode& node = tree->decision();
    const PureStrategy* strategy = nullptr;
    for (const PureStrategy& s : profile) {
      if (s.player == node.mover) strategy = &s;
    }
    if (strategy == nullptr || !strategy->choices.contains(address)) {
      throw std::invalid_argument("profile has no choice for player " +
                                  std::to_string(node.mover) + " at node " +
                                  AddressToString(address));
    }
    int choice = strategy->choices.at(address);
    if (choice < 0 || choice >= static_cast<int>(node.branches.size())) {
      throw std::out_of_range("choice " + std::to_string(choice) +
                              " out of range at node " +
                              AddressToString(address));
    }
    tree = &node.branches[choice].subtree;
    address.push_back(choice);
  }
  return tree->leaf().outcome;
}

std::vector<PureStrategy> EnumerateStrategies(const Game& game,
                                              PlayerId player) {
  std::vector<NodeAddress> nodes = DecisionNodes(game, player);
  std::vector<int> radix;
  for (const NodeAddress& address : nodes) {
    radix.push_back(
        static_cast<int>(Resolve(game, address).decision().branches.size()));
  }
  std::vector<PureStrategy> out;
  Profile digits(nodes.size(), 0);
  do {
    PureStrategy strategy{player, {}, ""};
    for (size_t k = 0; k < nodes.size(); ++k) {
      strategy.choices[nodes[k]] = digits[k];
      strategy.label +=
          Resolve(game, nodes[k]).decision().branches[digits[k]].label;
    }
    out.push_back(std::move(strategy));
  } while (NextProfile(digits, radix));
  return out;
}

NormalForm ToNormalForm(const Game& game) {
  std::vector<std::vector<PureStrategy>> strategies;
  for (PlayerId p = 1; p <= game.num_players; ++p) {
    strategies.push_back(EnumerateStrategies(game, p));
  }
  std::vector<int> radix;
  for (const auto& list : strategies) {
    radix.push_back(static_cast<int>(list.size()));
  }
  std::vector<UtilityVector> payoffs;
  Profile profile(radix.size(), 0);
  do {
    std::vector<PureStrategy> chosen;
    for (size_t p = 0; p < profile.size(); ++p) {
      chosen.push_back(strategies[p][profile[p]]);
    }
    payoffs.push_back(Play(game, chosen).utilities);
  } while (NextProfile(profile, radix));
  return NormalForm(std::move(strategies), std::move(payoffs));
}

std::vector<Profile> PureNash(const NormalForm& nf) {
  const std::vector<Profile> profiles = nf.Profiles();
  const int n = nf.num_players();
  // best[p][k]: player p's best payoff against the other entries of
  // profile k, stored at the k whose own entry is 0.
  std::vector<std::vector<Utility>> best(n, std::vector<Utility>(
                                                profiles.size()));
  std::vector<size_t> stride(n, 1);
  for (int p = n - 2; p >= 0; --p) {
    stride[p] = stride[p + 1] * nf.num_strategies(p + 2);
  }
  for (size_t k = 0; k < profiles.size(); ++k) {
    const UtilityVector& here = nf.payoff(profiles[k]);
    for (int p = 0; p < n; ++p) {
      const size_t base = k - profiles[k][p] * stride[p];
      if (base == k || here[p] > best[p][base]) best[p][base] = here[p];
    }
  }
  std::vector<Profile> out;
  for (size_t k = 0; k < profiles.size(); ++k) {
    const UtilityVector& here = nf.payoff(profiles[k]);
    bool stable = true;
    for (int p = 0; p < n && stable; ++p) {
      stable = here[p] == best[p][k - profiles[k][p] * stride[p]];
    }
    if (stable) out.push_back(profiles[k]);
  }
  return out;
}

std::vector<int> BestResponses(const NormalForm& nf, PlayerId player,
                               const std::vector<int>& others) {
  CheckPlayer(nf, player);
  if (static_cast<int>(others.size()) != nf.num_players() - 1) {
    throw std::invalid_argument("expected strategies for " +
                                std::to_string(nf.num_players() - 1) +
                                " other players");
  }
  std::vector<Utility> values;
  for (int s = 0; s < nf.num_strategies(player); ++s) {
    values.push_back(nf.payoff(WithStrategy(others, player, s))[player - 1]);
  }
  const Utility best = *std::max_element(values.begin(), values.end());
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(values.size()); ++s) {
    if (values[s] == best) out.push_back(s);
  }
  return out;
}

Utility GuaranteedValueVsRational(const NormalForm& nf, PlayerId player,
                                  int strategy) {
  if (nf.num_players() != 2) {
    throw std::invalid_argument(
        "guaranteed value is defined for two-player games only");
  }
  CheckPlayer(nf, player);
  const PlayerId opponent = 3 - player;
  std::vector<int> responses = BestResponses(nf, opponent, {strategy});
  std::optional<Utility> worst;
  for (int response : responses) {
    Utility value =
        nf.payoff(WithStrategy({strategy}, opponent, response))[player - 1];
    if (!worst.has_value() || value < *worst) worst = value;
  }
  return *worst;
}

std::vector<std::vector<int>> PayoffEquivalentStrategies(const NormalForm& nf,
                                                         PlayerId player) {
  CheckPlayer(nf, player);
  std::vector<int> radix;
  for (PlayerId p = 1; p <= nf.num_players(); ++p) {
    radix.push_back(nf.num_strategies(p));
  }
  auto slice = [&](int strategy) {
    std::vector<Utility> out;
    Profile profile(radix.size(), 0);
    profile[player - 1] = strategy;
    do {
      out.push_back(nf.payoff(profile)[player - 1]);
    } while (NextProfile(profile, radix, player - 1));
    return out;
  };
  std::vector<std::vector<int>> classes;
  std::vector<std::vector<Utility>> signatures;
  for (int s = 0; s < nf.num_strategies(player); ++s) {
    std::vector<Utility> signature = slice(s);
    auto it = std::find(signatures.begin(), signatures.end(), signature);
    if (it == signatures.end()) {
      signatures.push_back(std::move(signature));
      classes.push_back({s});
    } else {
      classes[it - signatures.begin()].push_back(s);
    }
  }
  return classes;
}

}  // namespace tiebreak::normal_form
