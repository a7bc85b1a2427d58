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

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "stochgame/corpus.hpp"
#include "stochgame/kernels.hpp"

using namespace stochgame;

namespace {

const StochasticGame& game_of_size(std::size_t ns) {
  static std::map<std::size_t, StochasticGame> cache;
  auto it = cache.find(ns);
  if (it == cache.end()) {
    it = cache.emplace(ns, corpus::random_game(ns, 3, 3, 2024).game).first;
  }
  return it->second;
}

ValueFunction random_values(std::size_t ns) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ValueFunction v(ns);
  for (double& e : v) e = u(rng);
  return v;
}

template <auto Sweep>
void BM_ShapleySweep(benchmark::State& state) {
  const auto& game = game_of_size(static_cast<std::size_t>(state.range(0)));
  const auto v = random_values(game.num_states());
  for (auto _ : state) benchmark::DoNotOptimize(Sweep(game, 0.05, v));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Chain>
void BM_InducedChain(benchmark::State& state) {
  const auto& game = game_of_size(static_cast<std::size_t>(state.range(0)));
  const auto x = StationaryStrategy::uniform(game.num_states(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(Chain(game, x, x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Pull>
void BM_PullBack(benchmark::State& state) {
  const auto& game = game_of_size(static_cast<std::size_t>(state.range(0)));
  const auto x = StationaryStrategy::uniform(game.num_states(), 3);
  const auto chain = kernels::serial::induced_chain(game, x, x);
  const auto h = random_values(game.num_states());
  for (auto _ : state) benchmark::DoNotOptimize(Pull(chain, h));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ShapleySweep<kernels::serial::shapley_sweep>)->Name("sweep/serial")->Arg(64)->Arg(512);
BENCHMARK(BM_ShapleySweep<kernels::omp::shapley_sweep>)->Name("sweep/omp")->Arg(64)->Arg(512);
BENCHMARK(BM_InducedChain<kernels::serial::induced_chain>)->Name("chain/serial")->Arg(128)->Arg(512);
BENCHMARK(BM_InducedChain<kernels::omp::induced_chain>)->Name("chain/omp")->Arg(128)->Arg(512);
BENCHMARK(BM_PullBack<kernels::serial::pull_back>)->Name("pull_back/serial")->Arg(128)->Arg(512);
BENCHMARK(BM_PullBack<kernels::omp::pull_back>)->Name("pull_back/omp")->Arg(128)->Arg(512);

BENCHMARK_MAIN();
