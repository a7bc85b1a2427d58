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

#ifndef STOCHGAME_ADAPTED_HPP_
#define STOCHGAME_ADAPTED_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stochgame/game.hpp"
#include "stochgame/shapley.hpp"

namespace stochgame {

// Partition of stages 1..n into blocks of length a. Block k covers stages
// k*a + 1 .. min((k+1)*a, n) and uses discount 1 / (n - k*a), i.e. one over
// the number of stages remaining when the block starts. When a does not
// divide n the trailing partial block k = p gets 1 / (n - p*a) by the same
// rule.
struct BlockSchedule {
  std::size_t n = 0;
  std::size_t a = 0;
  std::size_t p = 0;               // floor(n / a)
  std::vector<double> discounts;   // lambda_k, k = 0..k(n)

  // k(m) = floor((m - 1) / a), for 1 <= m <= n.
  std::size_t block_of(std::size_t stage) const { return (stage - 1) / a; }
  std::size_t num_blocks() const { return discounts.size(); }
  std::size_t block_length(std::size_t k) const;
};

// Throws InputError unless 2 <= a <= n.
BlockSchedule block_schedule(std::size_t n, std::size_t a);

// ceil(sqrt(n)), at least 2. Requires n >= 2.
std::size_t default_block_length(std::size_t n);

// 1 - (1 - lambda)^(a + 1): discounted weight of the first a + 1 stages.
double block_discount_mass(std::size_t a, double lambda);

struct AdaptedProfile {
  std::size_t n = 0;
  BlockSchedule schedule;
  MarkovStrategy sigma;
  MarkovStrategy rho;
  std::string source;
  double tol = 0.0;
  // One discounted solve per block, indexed by k.
  std::vector<DiscountedSolution> block_solutions;
};

// Plays (x_lambda_k, y_lambda_k) on block k, with one discounted solve per
// distinct lambda_k. Convergence failures are rethrown tagged with k.
// `max_iterations` overrides the default value-iteration cap.
AdaptedProfile adapted_profile(const StochasticGame& game,
                               const BlockSchedule& schedule, double tol,
                               std::optional<std::size_t> max_iterations = {});
AdaptedProfile adapted_profile(const StochasticGame& game, std::size_t n,
                               std::size_t a, double tol,
                               std::optional<std::size_t> max_iterations = {});

// {n, a, p, discounts, source, tol}.
nlohmann::ordered_json profile_summary(const AdaptedProfile& profile);

// Sequence p -> mu_p in (0, 1/2] for p = 1..p_max.
struct MuSequence {
  enum class Provenance { kEmpirical, kAnalyticDefault };

  std::vector<double> mu;  // mu[p - 1]
  Provenance provenance = Provenance::kAnalyticDefault;
  // Set when some mu_p fell back to the smallest grid lambda without
  // meeting its bound.
  bool approximate = false;
  // Empirical runs only: the lambda grid and the measured drift at each
  // grid point, max over t and states.
  std::vector<double> lambda_grid;
  std::vector<double> drift;

  std::size_t p_max() const { return mu.size(); }
  // Throws InputError when p is outside [1, p_max].
  double at(std::size_t p) const;

  // mu_p = clamp(f(p)) into (0, 1/2]. Throws InputError if f(p) <= 0.
  static MuSequence analytic(std::size_t p_max,
                             const std::function<double(std::size_t)>& f);
  // Reads {"mu": [...]} (p = 1, 2, ...); entries must lie in (0, 1/2].
  static MuSequence from_json(const std::string& text);
};

// min { a in [2, n] : 1/a <= mu_floor(n/a) }. Throws NotReadyError when no a
// qualifies and InputError when mu does not cover p in [1, floor(n/2)].
std::size_t select_block_length(std::size_t n, const MuSequence& mu);

using ProfileProvider = std::function<DiscountedSolution(double lambda)>;

// Empirical mu_p: the largest grid lambda such that every grid lambda' <=
// lambda keeps |E_lambda'[v*(state at phi(lambda', t))] - v*(start)| <=
// p^-2 for all t in t_grid and all start states. Falls back to the smallest
// grid lambda (flagged approximate) when none qualifies.
MuSequence estimate_mu_sequence(const StochasticGame& game,
                                const ProfileProvider& provider,
                                const std::vector<double>& lambda_grid,
                                const std::vector<double>& t_grid,
                                std::size_t p_max, const ValueFunction& vstar);

// {1/8, 2/8, ..., 7/8}.
std::vector<double> default_mu_t_grid();

}  // namespace stochgame

#endif  // STOCHGAME_ADAPTED_HPP_
