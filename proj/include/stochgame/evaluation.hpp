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

#ifndef STOCHGAME_EVALUATION_HPP_
#define STOCHGAME_EVALUATION_HPP_

#include <cstdint>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "stochgame/adapted.hpp"
#include "stochgame/game.hpp"

namespace stochgame {

// First stage M >= 1 at which sum_{m<=M} lambda (1-lambda)^(m-1) >= t,
// i.e. max(1, ceil(ln(1-t) / ln(1-lambda))). Requires lambda in (0,1) and
// t in [0,1).
std::size_t phi(double lambda, double t);

// ceil(t * n), treating t * n within 1e-9 of an integer as that integer so
// that decimal grids such as 0.3 * 100 land on 30.
std::size_t ceil_stage(double t, std::size_t n);

struct PayoffTrajectory {
  std::size_t n = 0;
  std::size_t initial_state = 0;
  std::vector<double> stage_payoffs;  // [m - 1] = E[g_m], m = 1..n
  std::vector<double> cumulative;     // [M] = (1/n) sum_{m<=M} E[g_m], M = 0..n
  std::vector<double> value_curve;    // [m - 1] = E[v*(state_m)], m = 1..n+1
};

// Exact forward recursion of the state law from `initial_state`. The value
// curve is filled only when `vstar` is non-empty.
PayoffTrajectory trajectory(const StochasticGame& game,
                            const MarkovStrategy& sigma,
                            const MarkovStrategy& rho,
                            std::size_t initial_state, std::size_t n,
                            std::span<const double> vstar = {});

struct CurvePoint {
  double t = 0.0;
  std::size_t stage = 0;  // ceil(t n)
  double cumulative = 0.0;
  double target = 0.0;  // t v*(initial state)
  double deviation = 0.0;
};

struct PayoffCurve {
  std::vector<CurvePoint> points;
  double sup_deviation = 0.0;  // max |deviation|
};

PayoffCurve constant_payoff_curve(const PayoffTrajectory& traj,
                                  const std::vector<double>& t_grid,
                                  const ValueFunction& vstar);
PayoffCurve constant_payoff_curve(const StochasticGame& game,
                                  const MarkovStrategy& sigma,
                                  const MarkovStrategy& rho,
                                  std::size_t initial_state, std::size_t n,
                                  const std::vector<double>& t_grid,
                                  const ValueFunction& vstar);

// E[sum_{m=1}^{phi(lambda,t)} lambda (1-lambda)^(m-1) g_m] under the
// stationary pair (x, y).
double discounted_cumulative_payoff(const StochasticGame& game,
                                    const StationaryStrategy& x,
                                    const StationaryStrategy& y,
                                    std::size_t initial_state, double lambda,
                                    double t);

struct GuaranteeCertificate {
  std::size_t n = 0;
  // w[m - 1] = average payoff over stages m..n that the strategy guarantees
  // against any reply, m = 1..n+1; w[n] is identically 0.
  std::vector<ValueFunction> w;
  // max_s (v_n(s) - w_1(s)) for player 1; max_s (w_1(s) - v_n(s)) for 2.
  double epsilon = 0.0;
};

// Best-response recursion against a fixed Markov strategy of player 1.
// `vn` is the n-stage value; computed with finite_value when absent.
GuaranteeCertificate guaranteed_value(const StochasticGame& game,
                                      const MarkovStrategy& sigma,
                                      std::size_t n,
                                      std::optional<ValueFunction> vn = {});
// Mirror recursion (player 1 maximizes) against a Markov strategy of
// player 2.
GuaranteeCertificate guaranteed_value_player2(
    const StochasticGame& game, const MarkovStrategy& rho, std::size_t n,
    std::optional<ValueFunction> vn = {});

struct OptimalityCertificate {
  double epsilon = 0.0;  // max of the two gaps
  double player1_gap = 0.0;
  double player2_gap = 0.0;
};

OptimalityCertificate certify_epsilon_optimality(
    const StochasticGame& game, const MarkovStrategy& sigma,
    const MarkovStrategy& rho, std::size_t n,
    std::optional<ValueFunction> vn = {});

struct DriftPoint {
  double t = 0.0;
  std::size_t stage = 0;  // ceil(t n) + 1
  double expected = 0.0;  // E[v*(state at stage)]
  double drift = 0.0;     // expected - v*(initial state)
};

struct DriftReport {
  std::vector<DriftPoint> points;
  double sup_drift = 0.0;  // max |drift| over the t grid
  // Per block k < p: max_{1<=j<=a+1} |E v*(state_{ka+j}) - E v*(state_{ka+1})|.
  std::vector<double> block_drifts;
  double within_block_max = 0.0;
  double within_block_target = 0.0;  // p^-2
  // max over m <= p a of |E v*(state_m) - v*(initial state)|.
  double global_max = 0.0;
  double global_target = 0.0;  // 2 / p
};

DriftReport value_drift_diagnostic(const StochasticGame& game,
                                   const AdaptedProfile& profile,
                                   std::size_t initial_state,
                                   const std::vector<double>& t_grid,
                                   const ValueFunction& vstar);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

// Sampled (1/n) sum g_m. Trial k draws from its own generator seeded from
// (seed, k); within a stage the draw order is next state, then i, then j.
MonteCarloEstimate monte_carlo_payoff(const StochasticGame& game,
                                      const MarkovStrategy& sigma,
                                      const MarkovStrategy& rho,
                                      std::size_t initial_state, std::size_t n,
                                      std::size_t trials, std::uint64_t seed);

}  // namespace stochgame

#endif  // STOCHGAME_EVALUATION_HPP_
