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

#ifndef STOCHGAME_SHAPLEY_HPP_
#define STOCHGAME_SHAPLEY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "stochgame/game.hpp"

namespace stochgame {

struct DiscountedSolution {
  double lambda = 1.0;
  ValueFunction value;   // v_lambda
  StationaryStrategy x;  // optimal for player 1 in the local games at `value`
  StationaryStrategy y;
  double residual = 0.0;  // sup-norm of Psi(value) - value
  std::size_t iterations = 0;
};

struct FiniteHorizonSolution {
  std::size_t n = 0;
  // values[r - 1] is v_r, the value of the r-stage game, r = 1..n.
  std::vector<ValueFunction> values;
  // Stage m plays optimally in the local game with n - m + 1 stages left.
  MarkovStrategy x;
  MarkovStrategy y;

  const ValueFunction& value() const { return values.back(); }
};

// Psi_lambda(v)(s) = val[lambda g(s,.,.) + (1 - lambda) sum_s' q(s'|s,.,.) v(s')].
ValueFunction shapley_operator(const StochasticGame& game, double lambda,
                               const ValueFunction& v);

// Default iteration cap: ceil(ln(tol lambda / 2|g|) / ln(1 - lambda)) + margin.
std::size_t default_iteration_cap(const StochasticGame& game, double lambda,
                                  double tol);

// Value iteration from v = 0 until the residual is at most tol * lambda, which
// puts the returned value within tol of v_lambda. Throws ConvergenceError
// when the cap is exceeded.
DiscountedSolution discounted_value(const StochasticGame& game, double lambda,
                                    double tol,
                                    std::optional<std::size_t> max_iterations = {});

// Backward induction over the number of remaining stages.
FiniteHorizonSolution finite_value(const StochasticGame& game, std::size_t n);

struct LimitValueEstimate {
  ValueFunction value;  // v_lambda at the smallest grid lambda
  // max over consecutive grid points of |v_lambda_k - v_lambda_k+1|_inf.
  double dispersion = 0.0;
  std::vector<DiscountedSolution> solutions;  // one per grid point
};

// Requires a strictly decreasing grid in (0, 1] ending at or below 1e-3.
LimitValueEstimate limit_value_estimate(
    const StochasticGame& game, const std::vector<double>& lambdas, double tol,
    std::optional<std::size_t> max_iterations = {});

}  // namespace stochgame

#endif  // STOCHGAME_SHAPLEY_HPP_
