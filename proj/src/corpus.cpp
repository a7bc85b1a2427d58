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

#include "stochgame/corpus.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "stochgame/errors.hpp"

namespace stochgame::corpus {
namespace {

std::vector<std::string> labels(const char* prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

// Sets q(. | s, i, j) in a flat transition tensor.
void set_law(std::vector<double>& q, std::size_t ns, std::size_t ni,
             std::size_t nj, std::size_t s, std::size_t i, std::size_t j,
             std::vector<double> law) {
  const std::size_t base = ((s * ni + i) * nj + j) * ns;
  for (std::size_t t = 0; t < ns; ++t) q[base + t] = law[t];
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

CorpusEntry big_match() {
  // States: active, absorbing payoff 0, absorbing payoff 1.
  const std::size_t ns = 3, ni = 2, nj = 2;
  std::vector<double> g = {
      1, 0, 0, 1,  // active: top row, bottom row
      0, 0, 0, 0,  // absorbing 0
      1, 1, 1, 1,  // absorbing 1
  };
  std::vector<double> q(ns * ni * nj * ns, 0.0);
  set_law(q, ns, ni, nj, 0, 0, 0, {0, 0, 1});
  set_law(q, ns, ni, nj, 0, 0, 1, {0, 1, 0});
  set_law(q, ns, ni, nj, 0, 1, 0, {1, 0, 0});
  set_law(q, ns, ni, nj, 0, 1, 1, {1, 0, 0});
  for (std::size_t i = 0; i < ni; ++i) {
    for (std::size_t j = 0; j < nj; ++j) {
      set_law(q, ns, ni, nj, 1, i, j, {0, 1, 0});
      set_law(q, ns, ni, nj, 2, i, j, {0, 0, 1});
    }
  }
  CorpusEntry out{
      "big_match",
      StochasticGame("big_match", {"active", "absorbed0", "absorbed1"},
                     {"top", "bottom"}, {"left", "right"}, std::move(g),
                     std::move(q)),
      {}};
  out.known_facts = {
      {"v*", "active", 0.5,
       "bisection on the scalar discounted fixed-point equation"},
      {"v*", "absorbed0", 0.0, "absorbing state with constant payoff 0"},
      {"v*", "absorbed1", 1.0, "absorbing state with constant payoff 1"},
  };
  return out;
}

CorpusEntry single_player_mdp() {
  const std::size_t ns = 3, ni = 2, nj = 1;
  // g[s][i][0]
  std::vector<double> g = {
      0.5, 0.0,   // home: rest / travel
      0.2, -0.2,  // road: wait / push on
      1.0, 0.3,   // market: trade / go home
  };
  std::vector<double> q(ns * ni * nj * ns, 0.0);
  set_law(q, ns, ni, nj, 0, 0, 0, {1.0, 0.0, 0.0});
  set_law(q, ns, ni, nj, 0, 1, 0, {0.0, 1.0, 0.0});
  set_law(q, ns, ni, nj, 1, 0, 0, {0.0, 0.5, 0.5});
  set_law(q, ns, ni, nj, 1, 1, 0, {0.0, 0.0, 1.0});
  set_law(q, ns, ni, nj, 2, 0, 0, {0.1, 0.0, 0.9});
  set_law(q, ns, ni, nj, 2, 1, 0, {1.0, 0.0, 0.0});
  CorpusEntry out{
      "single_player_mdp",
      StochasticGame("single_player_mdp", {"home", "road", "market"},
                     {"stay", "move"}, {"none"}, std::move(g), std::move(q)),
      {}};
  for (const char* state : {"home", "road", "market"}) {
    out.known_facts.push_back(
        {"v*", state, 49.0 / 60.0,
         "long-run gain maximized over all 8 deterministic stationary policies"});
  }
  return out;
}

CorpusEntry cyclic_two_state() {
  // In "north" the top row is a safe 1/2 that stays put and the bottom row
  // moves south with probability 1/2. In "south" the left column is a safe 0
  // that stays put and the right column moves north with probability 1/2.
  const std::size_t ns = 2, ni = 2, nj = 2;
  std::vector<double> g = {
      0.5, 0.5, 1, 0,  // north
      0, -1, 0, 1,     // south
  };
  std::vector<double> q(ns * ni * nj * ns, 0.0);
  set_law(q, ns, ni, nj, 0, 0, 0, {1.0, 0.0});
  set_law(q, ns, ni, nj, 0, 0, 1, {1.0, 0.0});
  set_law(q, ns, ni, nj, 0, 1, 0, {0.5, 0.5});
  set_law(q, ns, ni, nj, 0, 1, 1, {0.5, 0.5});
  set_law(q, ns, ni, nj, 1, 0, 0, {0.0, 1.0});
  set_law(q, ns, ni, nj, 1, 1, 0, {0.0, 1.0});
  set_law(q, ns, ni, nj, 1, 0, 1, {0.5, 0.5});
  set_law(q, ns, ni, nj, 1, 1, 1, {0.5, 0.5});
  CorpusEntry out{
      "cyclic_two_state",
      StochasticGame("cyclic_two_state", {"north", "south"}, {"top", "bottom"},
                     {"left", "right"}, std::move(g), std::move(q)),
      {}};
  out.known_facts = {
      {"v*", "north", 0.5, "small-discount value estimates with vanishing dispersion"},
      {"v*", "south", 0.0, "small-discount value estimates with vanishing dispersion"},
  };
  return out;
}

CorpusEntry random_game(std::size_t num_states, std::size_t num_actions1,
                        std::size_t num_actions2, std::uint64_t seed) {
  if (num_states < 1 || num_actions1 < 1 || num_actions2 < 1) {
    throw InputError("random game sizes must be at least 1");
  }
  std::mt19937_64 rng(seed);
  const std::size_t cells = num_states * num_actions1 * num_actions2;
  std::vector<double> g(cells);
  for (double& v : g) v = -1.0 + 2.0 * uniform01(rng);
  // Normalized unit exponentials are uniform on the simplex.
  std::vector<double> q(cells * num_states);
  for (std::size_t c = 0; c < cells; ++c) {
    double total = 0.0;
    for (std::size_t t = 0; t < num_states; ++t) {
      const double e = -std::log1p(-uniform01(rng));
      q[c * num_states + t] = e;
      total += e;
    }
    for (std::size_t t = 0; t < num_states; ++t) q[c * num_states + t] /= total;
  }
  const std::string name = "random_" + std::to_string(num_states) + "_" +
                           std::to_string(num_actions1) + "_" +
                           std::to_string(num_actions2) + "_seed" +
                           std::to_string(seed);
  return {name,
          StochasticGame(name, labels("s", num_states), labels("a", num_actions1),
                         labels("b", num_actions2), std::move(g), std::move(q)),
          {}};
}

CorpusEntry by_name(const std::string& name) {
  if (name == "big_match") return big_match();
  if (name == "single_player_mdp") return single_player_mdp();
  if (name == "cyclic_two_state") return cyclic_two_state();
  std::size_t ns = 0, ni = 0, nj = 0;
  unsigned long long seed = 0;
  int consumed = 0;
  if (std::sscanf(name.c_str(), "random_%zu_%zu_%zu_seed%llu%n", &ns, &ni, &nj, &seed,
                  &consumed) == 4 &&
      static_cast<std::size_t>(consumed) == name.size()) {
    return random_game(ns, ni, nj, seed);
  }
  throw InputError("unknown corpus game '" + name + "'");
}

std::vector<std::string> names() {
  return {"big_match", "single_player_mdp", "cyclic_two_state"};
}

}  // namespace stochgame::corpus
