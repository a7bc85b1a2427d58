// Copyright 2026 The stochgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stochgame/game.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "stochgame/errors.hpp"
#include "stochgame/kernels.hpp"

namespace stochgame {
namespace {

constexpr double kActionSumTol = 1e-12;
constexpr double kRowSumTol = 1e-12;
constexpr double kRenormalizeTol = 1e-9;
constexpr double kDistributionTol = 1e-10;

std::string triple(const std::string& s, const std::string& i, const std::string& j) {
  return "(" + s + ", " + i + ", " + j + ")";
}

void check_probability_vector(const std::vector<double>& p, double tol,
                              const char* what) {
  if (p.empty()) throw InvariantError(std::string(what) + " is empty");
  double total = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvariantError(std::string(what) + " has a negative or non-finite entry");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > tol) {
    throw InvariantError(std::string(what) + " sums to " + std::to_string(total));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Strategies and distributions

MixedAction::MixedAction(std::vector<double> probs) : probs_(std::move(probs)) {
  check_probability_vector(probs_, kActionSumTol, "mixed action");
}

MixedAction MixedAction::pure(std::size_t num_actions, std::size_t action) {
  std::vector<double> p(num_actions, 0.0);
  p.at(action) = 1.0;
  return MixedAction(std::move(p));
}

MixedAction MixedAction::uniform(std::size_t num_actions) {
  return MixedAction(std::vector<double>(num_actions, 1.0 / num_actions));
}

StationaryStrategy::StationaryStrategy(std::vector<MixedAction> per_state)
    : per_state_(std::move(per_state)) {
  if (per_state_.empty()) throw InvariantError("stationary strategy has no states");
  for (const auto& a : per_state_) {
    if (a.size() != per_state_.front().size()) {
      throw InvariantError("stationary strategy mixes action-set sizes");
    }
  }
}

StationaryStrategy StationaryStrategy::uniform(std::size_t num_states,
                                               std::size_t num_actions) {
  return StationaryStrategy(std::vector<MixedAction>(
      num_states, MixedAction::uniform(num_actions)));
}

MarkovStrategy MarkovStrategy::stationary(StationaryStrategy strategy,
                                          std::size_t horizon) {
  MarkovStrategy out;
  out.append(std::move(strategy), horizon);
  return out;
}

void MarkovStrategy::append(StationaryStrategy strategy, std::size_t stages) {
  if (stages == 0) return;
  if (!segments_.empty() && segments_.back().strategy == strategy) {
    segments_.back().last_stage += stages;
  } else {
    if (!segments_.empty() &&
        (strategy.num_states() != segments_.back().strategy.num_states() ||
         strategy.num_actions() != segments_.back().strategy.num_actions())) {
      throw InvariantError("Markov strategy stages disagree on dimensions");
    }
    segments_.push_back({horizon_ + 1, horizon_ + stages, std::move(strategy)});
  }
  horizon_ += stages;
}

const StationaryStrategy& MarkovStrategy::at(std::size_t stage) const {
  if (stage < 1 || stage > horizon_) {
    throw InputError("stage " + std::to_string(stage) + " outside horizon " +
                     std::to_string(horizon_));
  }
  auto it = std::partition_point(
      segments_.begin(), segments_.end(),
      [stage](const Segment& seg) { return seg.last_stage < stage; });
  return it->strategy;
}

StateDistribution::StateDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  check_probability_vector(probs_, kDistributionTol, "state distribution");
}

StateDistribution StateDistribution::point_mass(std::size_t num_states,
                                                std::size_t state) {
  std::vector<double> p(num_states, 0.0);
  p.at(state) = 1.0;
  return StateDistribution(std::move(p));
}

StateDistribution StateDistribution::uniform(std::size_t num_states) {
  return StateDistribution(std::vector<double>(num_states, 1.0 / num_states));
}

// ---------------------------------------------------------------------------
// Game

StochasticGame::StochasticGame(std::string name, std::vector<std::string> states,
                               std::vector<std::string> actions1,
                               std::vector<std::string> actions2,
                               std::vector<double> payoff,
                               std::vector<double> transition,
                               std::vector<std::string>* warnings)
    : name_(std::move(name)),
      states_(std::move(states)),
      actions1_(std::move(actions1)),
      actions2_(std::move(actions2)),
      payoff_(std::move(payoff)),
      transition_(std::move(transition)) {
  if (states_.empty()) throw InvariantError("game has no states");
  if (actions1_.empty()) throw InvariantError("player 1 has no actions");
  if (actions2_.empty()) throw InvariantError("player 2 has no actions");
  for (const auto* list : {&states_, &actions1_, &actions2_}) {
    std::set<std::string> seen(list->begin(), list->end());
    if (seen.size() != list->size()) throw InvariantError("duplicate label");
  }
  const std::size_t ns = states_.size();
  const std::size_t ni = actions1_.size();
  const std::size_t nj = actions2_.size();
  if (payoff_.size() != ns * ni * nj) {
    throw InvariantError("payoff tensor has " + std::to_string(payoff_.size()) +
                         " entries, expected " + std::to_string(ns * ni * nj));
  }
  if (transition_.size() != ns * ni * nj * ns) {
    throw InvariantError("transition tensor has " +
                         std::to_string(transition_.size()) +
                         " entries, expected " + std::to_string(ns * ni * nj * ns));
  }
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t i = 0; i < ni; ++i) {
      for (std::size_t j = 0; j < nj; ++j) {
        const double g = payoff_[(s * ni + i) * nj + j];
        if (!std::isfinite(g)) {
          throw InvariantError("non-finite payoff at " + triple(states_[s], actions1_[i], actions2_[j]));
        }
        payoff_bound_ = std::max(payoff_bound_, std::abs(g));
        double* row = transition_.data() + ((s * ni + i) * nj + j) * ns;
        double total = 0.0;
        for (std::size_t t = 0; t < ns; ++t) {
          if (!std::isfinite(row[t]) || row[t] < 0.0) {
            throw InvariantError("negative or non-finite transition probability at " +
                                 triple(states_[s], actions1_[i], actions2_[j]));
          }
          total += row[t];
        }
        const double miss = std::abs(total - 1.0);
        if (miss > kRenormalizeTol) {
          throw InvariantError("transition row at " + triple(states_[s], actions1_[i], actions2_[j]) +
                               " sums to " + std::to_string(total));
        }
        if (miss > kRowSumTol) {
          for (std::size_t t = 0; t < ns; ++t) row[t] /= total;
          if (warnings != nullptr) {
            warnings->push_back("renormalized transition row at " +
                                triple(states_[s], actions1_[i], actions2_[j]));
          }
        }
      }
    }
  }
}

std::size_t StochasticGame::state_index(std::string_view label) const {
  auto it = std::find(states_.begin(), states_.end(), label);
  if (it == states_.end()) {
    throw InputError("unknown state '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - states_.begin());
}

void check_compatible(const StochasticGame& game, const StationaryStrategy& x,
                      const StationaryStrategy& y) {
  if (x.num_states() != game.num_states() || y.num_states() != game.num_states() ||
      x.num_actions() != game.num_actions1() ||
      y.num_actions() != game.num_actions2()) {
    throw InputError("strategy dimensions do not match the game");
  }
}

StateDistribution advance_distribution(const StochasticGame& game,
                                       const StateDistribution& d,
                                       const StationaryStrategy& x,
                                       const StationaryStrategy& y) {
  check_compatible(game, x, y);
  if (d.size() != game.num_states()) throw InputError("distribution size mismatch");
  const auto chain = kernels::omp::induced_chain(game, x, y);
  return StateDistribution(kernels::omp::push_forward(chain, d.probs()),
                           StateDistribution::Unchecked{});
}

double expected_stage_payoff(const StochasticGame& game,
                             const StateDistribution& d,
                             const StationaryStrategy& x,
                             const StationaryStrategy& y) {
  check_compatible(game, x, y);
  if (d.size() != game.num_states()) throw InputError("distribution size mismatch");
  const auto reward = kernels::omp::induced_reward(game, x, y);
  double out = 0.0;
  for (std::size_t s = 0; s < reward.size(); ++s) out += d[s] * reward[s];
  return out;
}

// ---------------------------------------------------------------------------
// JSON game files

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw ParseError("field '" + path + "': " + what, 0, 0);
}

std::vector<std::string> read_labels(const json& doc, const char* key) {
  if (!doc.contains(key)) field_error(key, "missing");
  const json& arr = doc.at(key);
  if (!arr.is_array()) field_error(key, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_string()) {
      field_error(std::string(key) + "[" + std::to_string(k) + "]", "expected a string");
    }
    out.push_back(arr[k].get<std::string>());
  }
  return out;
}

// Flattens a nested numeric array of the given shape, row-major.
void read_tensor(const json& node, const std::string& path,
                 const std::vector<std::size_t>& shape, std::size_t depth,
                 std::vector<double>& out) {
  if (depth == shape.size()) {
    if (!node.is_number()) field_error(path, "expected a number");
    out.push_back(node.get<double>());
    return;
  }
  if (!node.is_array()) field_error(path, "expected an array");
  if (node.size() != shape[depth]) {
    field_error(path, "expected " + std::to_string(shape[depth]) +
                          " entries, found " + std::to_string(node.size()));
  }
  for (std::size_t k = 0; k < node.size(); ++k) {
    read_tensor(node[k], path + "[" + std::to_string(k) + "]", shape, depth + 1, out);
  }
}

}  // namespace

StochasticGame load_game(std::string_view text, std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed game file at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " + e.what(),
                     line, column);
  }
  if (!doc.is_object()) field_error("<root>", "expected an object");
  auto states = read_labels(doc, "states");
  auto actions1 = read_labels(doc, "actions1");
  auto actions2 = read_labels(doc, "actions2");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) field_error("name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  const std::size_t ns = states.size(), ni = actions1.size(), nj = actions2.size();
  if (ns == 0 || ni == 0 || nj == 0) {
    throw InvariantError("states, actions1 and actions2 must be non-empty");
  }
  if (!doc.contains("payoff")) field_error("payoff", "missing");
  if (!doc.contains("transition")) field_error("transition", "missing");
  std::vector<double> payoff, transition;
  payoff.reserve(ns * ni * nj);
  transition.reserve(ns * ni * nj * ns);
  read_tensor(doc["payoff"], "payoff", {ns, ni, nj}, 0, payoff);
  read_tensor(doc["transition"], "transition", {ns, ni, nj, ns}, 0, transition);
  return StochasticGame(std::move(name), std::move(states), std::move(actions1),
                        std::move(actions2), std::move(payoff),
                        std::move(transition), warnings);
}

StochasticGame load_game_file(const std::string& path,
                              std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open game file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_game(buf.str(), warnings);
}

std::string serialize_game(const StochasticGame& game) {
  nlohmann::ordered_json doc;
  doc["name"] = game.name();
  doc["states"] = game.states();
  doc["actions1"] = game.actions1();
  doc["actions2"] = game.actions2();
  const std::size_t ns = game.num_states();
  const std::size_t ni = game.num_actions1();
  const std::size_t nj = game.num_actions2();
  auto payoff = nlohmann::ordered_json::array();
  auto transition = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < ns; ++s) {
    auto prow = nlohmann::ordered_json::array();
    auto trow = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < ni; ++i) {
      auto pcell = nlohmann::ordered_json::array();
      auto tcell = nlohmann::ordered_json::array();
      for (std::size_t j = 0; j < nj; ++j) {
        pcell.push_back(game.payoff(s, i, j));
        const auto law = game.next_state_law(s, i, j);
        tcell.push_back(std::vector<double>(law.begin(), law.end()));
      }
      prow.push_back(std::move(pcell));
      trow.push_back(std::move(tcell));
    }
    payoff.push_back(std::move(prow));
    transition.push_back(std::move(trow));
  }
  doc["payoff"] = std::move(payoff);
  doc["transition"] = std::move(transition);
  return doc.dump(1) + "\n";
}

}  // namespace stochgame
