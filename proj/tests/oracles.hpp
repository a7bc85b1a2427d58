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

#ifndef STOCHGAME_TESTS_ORACLES_HPP_
#define STOCHGAME_TESTS_ORACLES_HPP_

// Brute-force reference computations. They read games only through the
// public accessors and share no algorithmic code with the library.

#include <cstddef>
#include <vector>

#include "stochgame/game.hpp"

namespace oracle {

using Mat = std::vector<std::vector<double>>;

// Value of a matrix game by enumerating square supports. Assumes the game is
// nondegenerate, which holds almost surely for continuous random entries.
// Optionally returns one optimal strategy per player.
double support_enumeration_value(const Mat& a, std::vector<double>* x = nullptr,
                                 std::vector<double>* y = nullptr);

// n-stage value via the unnormalized total-payoff recursion
// T_r = val[g + sum q T_{r-1}], v_n = T_n / n.
std::vector<double> total_payoff_value(const stochgame::StochasticGame& game,
                                       std::size_t n);

// Single-player games (one action for player 2): dynamic programming on the
// unnormalized total payoff.
std::vector<double> mdp_finite_value(const stochgame::StochasticGame& game,
                                     std::size_t n);

// Single-player games: best deterministic stationary policy value, found by
// evaluating every policy with a dense linear solve.
std::vector<double> mdp_discounted_value(const stochgame::StochasticGame& game,
                                         double lambda);

// Big Match active-state value: bisection on the scalar fixed point of the
// discounted one-shot game.
double big_match_discounted(double lambda);
// Big Match active-state n-stage value from the scalar recursion.
double big_match_finite(std::size_t n);

// min over every pure Markov strategy of player 2 of the expected average
// payoff (1/n) sum E[g_m] against sigma, starting at s0.
double best_response_enumeration(const stochgame::StochasticGame& game,
                                 const stochgame::MarkovStrategy& sigma,
                                 std::size_t n, std::size_t s0);

// E[g_m] for m = 1..n by depth-first enumeration of every path of
// (state, i, j) triples, weighting each by its probability.
std::vector<double> path_enumeration_stage_payoffs(
    const stochgame::StochasticGame& game, const stochgame::MarkovStrategy& sigma,
    const stochgame::MarkovStrategy& rho, std::size_t s0, std::size_t n);

// Smallest M >= 1 whose discounted weight reaches t, by direct scan.
std::size_t phi_scan(double lambda, double t);

}  // namespace oracle

#endif  // STOCHGAME_TESTS_ORACLES_HPP_
