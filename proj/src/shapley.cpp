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

#include "stochgame/shapley.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stochgame/errors.hpp"
#include "stochgame/kernels.hpp"
#include "stochgame/matrix_game.hpp"
#include "stochgame/parallel.hpp"

namespace stochgame {
namespace {

constexpr std::size_t kIterationMargin = 16;

void check_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw InputError("discount factor must lie in (0, 1], got " +
                     std::to_string(lambda));
  }
}

double sup_distance(const ValueFunction& a, const ValueFunction& b) {
  double out = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s) out = std::max(out, std::abs(a[s] - b[s]));
  return out;
}

// Solves every local game at (stage_weight, v) and returns the optimal
// stationary pair plus the local values.
void extract_strategies(const StochasticGame& game, double stage_weight,
                        const ValueFunction& v, StationaryStrategy& x,
                        StationaryStrategy& y, ValueFunction* values) {
  const std::size_t ns = game.num_states();
  std::vector<MatrixGameSolution> local(ns);
  parallel_for_each_index(
      ns,
      [&](std::size_t s) {
        Matrix m;
        kernels::local_game(game, s, stage_weight, v, m);
        local[s] = solve_matrix_game(m);
      },
      kernels::kMinParallelSweepStates);
  std::vector<MixedAction> xs, ys;
  xs.reserve(ns);
  ys.reserve(ns);
  if (values != nullptr) values->resize(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    xs.push_back(std::move(local[s].row_strategy));
    ys.push_back(std::move(local[s].col_strategy));
    if (values != nullptr) (*values)[s] = local[s].value;
  }
  x = StationaryStrategy(std::move(xs));
  y = StationaryStrategy(std::move(ys));
}

}  // namespace

ValueFunction shapley_operator(const StochasticGame& game, double lambda,
                               const ValueFunction& v) {
  check_lambda(lambda);
  if (v.size() != game.num_states()) throw InputError("value function size mismatch");
  for (double e : v) {
    if (!std::isfinite(e)) throw InputError("value function has a non-finite entry");
  }
  return kernels::omp::shapley_sweep(game, lambda, v);
}

std::size_t default_iteration_cap(const StochasticGame& game, double lambda,
                                  double tol) {
  const double g = game.payoff_bound();
  double base = 1.0;
  if (lambda < 1.0 && g > 0.0 && tol * lambda < 2.0 * g) {
    base = std::ceil(std::log(tol * lambda / (2.0 * g)) / std::log1p(-lambda));
  }
  return static_cast<std::size_t>(base) + kIterationMargin;
}

DiscountedSolution discounted_value(const StochasticGame& game, double lambda,
                                    double tol,
                                    std::optional<std::size_t> max_iterations) {
  check_lambda(lambda);
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  const std::size_t cap =
      max_iterations.value_or(default_iteration_cap(game, lambda, tol));
  const double target = tol * lambda;

  DiscountedSolution out;
  out.lambda = lambda;
  ValueFunction v(game.num_states(), 0.0);
  double residual = 0.0;
  for (std::size_t it = 1; it <= cap; ++it) {
    ValueFunction next = kernels::omp::shapley_sweep(game, lambda, v);
    residual = sup_distance(next, v);
    if (residual <= target) {
      out.value = std::move(v);
      out.residual = residual;
      out.iterations = it;
      extract_strategies(game, lambda, out.value, out.x, out.y, nullptr);
      return out;
    }
    v = std::move(next);
  }
  throw ConvergenceError("value iteration at lambda=" + std::to_string(lambda) +
                             " did not reach residual " + std::to_string(target) +
                             " within " + std::to_string(cap) + " iterations",
                         residual);
}

FiniteHorizonSolution finite_value(const StochasticGame& game, std::size_t n) {
  if (n < 1) throw InputError("horizon must be at least 1");
  FiniteHorizonSolution out;
  out.n = n;
  out.values.reserve(n);
  std::vector<StationaryStrategy> xs(n), ys(n);
  ValueFunction prev(game.num_states(), 0.0);
  for (std::size_t r = 1; r <= n; ++r) {
    ValueFunction current;
    extract_strategies(game, 1.0 / static_cast<double>(r), prev, xs[r - 1],
                       ys[r - 1], &current);
    out.values.push_back(current);
    prev = std::move(current);
  }
  // Stage m has n - m + 1 stages remaining.
  for (std::size_t m = 1; m <= n; ++m) {
    out.x.append(std::move(xs[n - m]));
    out.y.append(std::move(ys[n - m]));
  }
  return out;
}

LimitValueEstimate limit_value_estimate(const StochasticGame& game,
                                        const std::vector<double>& lambdas,
                                        double tol,
                                        std::optional<std::size_t> max_iterations) {
  if (lambdas.empty()) throw InputError("lambda grid is empty");
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    check_lambda(lambdas[k]);
    if (k > 0 && !(lambdas[k] < lambdas[k - 1])) {
      throw InputError("lambda grid must be strictly decreasing");
    }
  }
  if (lambdas.back() > 1e-3) {
    throw InputError("lambda grid must end at or below 1e-3");
  }
  LimitValueEstimate out;
  out.solutions.resize(lambdas.size());
  parallel_for_each_index(lambdas.size(), [&](std::size_t k) {
    out.solutions[k] = discounted_value(game, lambdas[k], tol, max_iterations);
  });
  for (std::size_t k = 0; k + 1 < lambdas.size(); ++k) {
    out.dispersion = std::max(
        out.dispersion,
        sup_distance(out.solutions[k].value, out.solutions[k + 1].value));
  }
  out.value = out.solutions.back().value;
  return out;
}

}  // namespace stochgame
