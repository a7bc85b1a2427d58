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

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stochgame/kernels.hpp"

namespace stochgame::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

namespace omp {

ChainMatrix induced_chain(const StochasticGame& game,
                          const StationaryStrategy& x,
                          const StationaryStrategy& y) {
  const std::ptrdiff_t ns = static_cast<std::ptrdiff_t>(game.num_states());
  const std::size_t ni = game.num_actions1();
  const std::size_t nj = game.num_actions2();
  ChainMatrix chain(game.num_states() * game.num_states(), 0.0);
#pragma omp parallel for schedule(static) \
    if (game.num_states() >= kMinParallelChainStates)
  for (std::ptrdiff_t s = 0; s < ns; ++s) {
    double* row = chain.data() + s * ns;
    for (std::size_t i = 0; i < ni; ++i) {
      for (std::size_t j = 0; j < nj; ++j) {
        const double w = x[s][i] * y[s][j];
        if (w == 0.0) continue;
        const double* law = game.next_state_law(s, i, j).data();
        for (std::ptrdiff_t t = 0; t < ns; ++t) row[t] += w * law[t];
      }
    }
  }
  return chain;
}

std::vector<double> induced_reward(const StochasticGame& game,
                                   const StationaryStrategy& x,
                                   const StationaryStrategy& y) {
  const std::ptrdiff_t ns = static_cast<std::ptrdiff_t>(game.num_states());
  std::vector<double> r(game.num_states(), 0.0);
#pragma omp parallel for schedule(static) \
    if (game.num_states() >= kMinParallelChainStates)
  for (std::ptrdiff_t s = 0; s < ns; ++s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < game.num_actions1(); ++i) {
      for (std::size_t j = 0; j < game.num_actions2(); ++j) {
        acc += x[s][i] * y[s][j] * game.payoff(s, i, j);
      }
    }
    r[s] = acc;
  }
  return r;
}

std::vector<double> push_forward(const ChainMatrix& chain,
                                 const std::vector<double>& d) {
  const std::ptrdiff_t ns = static_cast<std::ptrdiff_t>(d.size());
  std::vector<double> out(d.size(), 0.0);
#pragma omp parallel for schedule(static) \
    if (d.size() >= kMinParallelChainStates)
  for (std::ptrdiff_t t = 0; t < ns; ++t) {
    double acc = 0.0;
    for (std::ptrdiff_t s = 0; s < ns; ++s) {
      if (d[s] != 0.0) acc += d[s] * chain[s * ns + t];
    }
    out[t] = acc;
  }
  return out;
}

std::vector<double> pull_back(const ChainMatrix& chain,
                              const std::vector<double>& h) {
  const std::ptrdiff_t ns = static_cast<std::ptrdiff_t>(h.size());
  std::vector<double> out(h.size(), 0.0);
#pragma omp parallel for schedule(static) \
    if (h.size() >= kMinParallelChainStates)
  for (std::ptrdiff_t s = 0; s < ns; ++s) {
    double acc = 0.0;
    for (std::ptrdiff_t t = 0; t < ns; ++t) acc += chain[s * ns + t] * h[t];
    out[s] = acc;
  }
  return out;
}

ValueFunction shapley_sweep(const StochasticGame& game, double stage_weight,
                            const ValueFunction& v) {
  const std::ptrdiff_t ns = static_cast<std::ptrdiff_t>(game.num_states());
  ValueFunction out(game.num_states());
#pragma omp parallel if (game.num_states() >= kMinParallelSweepStates)
  {
    Matrix local;
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t s = 0; s < ns; ++s) {
      local_game(game, s, stage_weight, v, local);
      out[s] = value_only(local);
    }
  }
  return out;
}

}  // namespace omp
}  // namespace stochgame::kernels
