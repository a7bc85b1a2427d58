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

#include <cstddef>
#include <vector>

#include "stochgame/kernels.hpp"

namespace stochgame::kernels {

void local_game(const StochasticGame& game, std::size_t s, double stage_weight,
                const ValueFunction& v, Matrix& out) {
  const std::size_t ni = game.num_actions1();
  const std::size_t nj = game.num_actions2();
  const std::size_t ns = game.num_states();
  const double cont = 1.0 - stage_weight;
  out.resize(ni, nj);
  for (std::size_t i = 0; i < ni; ++i) {
    for (std::size_t j = 0; j < nj; ++j) {
      const double* law = game.next_state_law(s, i, j).data();
      double continuation = 0.0;
      for (std::size_t t = 0; t < ns; ++t) continuation += law[t] * v[t];
      out(i, j) = stage_weight * game.payoff(s, i, j) + cont * continuation;
    }
  }
}

namespace serial {

ChainMatrix induced_chain(const StochasticGame& game,
                          const StationaryStrategy& x,
                          const StationaryStrategy& y) {
  const std::size_t ns = game.num_states();
  ChainMatrix chain(ns * ns, 0.0);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t i = 0; i < game.num_actions1(); ++i) {
      for (std::size_t j = 0; j < game.num_actions2(); ++j) {
        const double w = x[s][i] * y[s][j];
        if (w == 0.0) continue;
        const auto law = game.next_state_law(s, i, j);
        for (std::size_t t = 0; t < ns; ++t) chain[s * ns + t] += w * law[t];
      }
    }
  }
  return chain;
}

std::vector<double> induced_reward(const StochasticGame& game,
                                   const StationaryStrategy& x,
                                   const StationaryStrategy& y) {
  std::vector<double> r(game.num_states(), 0.0);
  for (std::size_t s = 0; s < game.num_states(); ++s) {
    for (std::size_t i = 0; i < game.num_actions1(); ++i) {
      for (std::size_t j = 0; j < game.num_actions2(); ++j) {
        r[s] += x[s][i] * y[s][j] * game.payoff(s, i, j);
      }
    }
  }
  return r;
}

std::vector<double> push_forward(const ChainMatrix& chain,
                                 const std::vector<double>& d) {
  const std::size_t ns = d.size();
  std::vector<double> out(ns, 0.0);
  for (std::size_t s = 0; s < ns; ++s) {
    if (d[s] == 0.0) continue;
    for (std::size_t t = 0; t < ns; ++t) out[t] += d[s] * chain[s * ns + t];
  }
  return out;
}

std::vector<double> pull_back(const ChainMatrix& chain,
                              const std::vector<double>& h) {
  const std::size_t ns = h.size();
  std::vector<double> out(ns, 0.0);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t t = 0; t < ns; ++t) out[s] += chain[s * ns + t] * h[t];
  }
  return out;
}

ValueFunction shapley_sweep(const StochasticGame& game, double stage_weight,
                            const ValueFunction& v) {
  ValueFunction out(game.num_states());
  Matrix local;
  for (std::size_t s = 0; s < game.num_states(); ++s) {
    local_game(game, s, stage_weight, v, local);
    out[s] = value_only(local);
  }
  return out;
}

}  // namespace serial
}  // namespace stochgame::kernels
