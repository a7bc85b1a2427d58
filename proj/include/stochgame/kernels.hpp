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

#ifndef STOCHGAME_KERNELS_HPP_
#define STOCHGAME_KERNELS_HPP_

// Data-parallel inner loops. Each kernel has a plain serial reference and an
// OpenMP version; the library calls the OpenMP versions. The OpenMP versions
// parallelize over an output index and keep a fixed summation order, so their
// results do not depend on the thread count.

#include <cstddef>
#include <vector>

#include "stochgame/game.hpp"
#include "stochgame/matrix_game.hpp"

namespace stochgame::kernels {

// Below these sizes the OpenMP versions run on the calling thread.
inline constexpr std::size_t kMinParallelSweepStates = 16;
inline constexpr std::size_t kMinParallelChainStates = 128;

// Row-major |S| x |S| matrix P(s, s') = sum_ij x(i|s) y(j|s) q(s'|s,i,j).
using ChainMatrix = std::vector<double>;

// Local one-shot game at state s:
//   M(i, j) = stage_weight * g(s,i,j) + (1 - stage_weight) * sum_s' q(s'|s,i,j) v(s').
void local_game(const StochasticGame& game, std::size_t s, double stage_weight,
                const ValueFunction& v, Matrix& out);

namespace serial {

ChainMatrix induced_chain(const StochasticGame& game,
                          const StationaryStrategy& x,
                          const StationaryStrategy& y);
// r(s) = sum_ij x(i|s) y(j|s) g(s,i,j).
std::vector<double> induced_reward(const StochasticGame& game,
                                   const StationaryStrategy& x,
                                   const StationaryStrategy& y);
// d'(s') = sum_s d(s) P(s, s').
std::vector<double> push_forward(const ChainMatrix& chain,
                                 const std::vector<double>& d);
// h'(s) = sum_s' P(s, s') h(s').
std::vector<double> pull_back(const ChainMatrix& chain,
                              const std::vector<double>& h);
// out(s) = val of the local game at s.
ValueFunction shapley_sweep(const StochasticGame& game, double stage_weight,
                            const ValueFunction& v);

}  // namespace serial

namespace omp {

ChainMatrix induced_chain(const StochasticGame& game,
                          const StationaryStrategy& x,
                          const StationaryStrategy& y);
std::vector<double> induced_reward(const StochasticGame& game,
                                   const StationaryStrategy& x,
                                   const StationaryStrategy& y);
std::vector<double> push_forward(const ChainMatrix& chain,
                                 const std::vector<double>& d);
std::vector<double> pull_back(const ChainMatrix& chain,
                              const std::vector<double>& h);
ValueFunction shapley_sweep(const StochasticGame& game, double stage_weight,
                            const ValueFunction& v);

}  // namespace omp

// Worker count used by the OpenMP kernels (1 when built without OpenMP).
int max_threads();
void set_threads(int threads);

}  // namespace stochgame::kernels

#endif  // STOCHGAME_KERNELS_HPP_
