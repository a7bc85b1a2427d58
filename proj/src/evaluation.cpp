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

#include "stochgame/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "stochgame/errors.hpp"
#include "stochgame/kernels.hpp"
#include "stochgame/parallel.hpp"

namespace stochgame {
namespace {

void check_initial_state(const StochasticGame& game, std::size_t s) {
  if (s >= game.num_states()) {
    throw InputError("initial state index " + std::to_string(s) + " out of range");
  }
}

void check_horizon(const MarkovStrategy& strategy, std::size_t n, const char* who) {
  if (strategy.horizon() < n) {
    throw InputError(std::string(who) + " has horizon " +
                     std::to_string(strategy.horizon()) + " < n=" + std::to_string(n));
  }
}

double dot(const std::vector<double>& a, std::span<const double> b) {
  double out = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) out += a[k] * b[k];
  return out;
}

// Walks the stages of two Markov strategies, yielding segment indices that
// change only at segment boundaries.
class SegmentCursor {
 public:
  explicit SegmentCursor(const MarkovStrategy& s) : segments_(s.segments()) {}
  // Moves to `stage`; returns true when the segment changed.
  bool seek(std::size_t stage) {
    bool moved = !started_;
    started_ = true;
    while (segments_[index_].last_stage < stage) {
      ++index_;
      moved = true;
    }
    return moved;
  }
  const StationaryStrategy& current() const { return segments_[index_].strategy; }

 private:
  std::span<const MarkovStrategy::Segment> segments_;
  std::size_t index_ = 0;
  bool started_ = false;
};

// One step of the best-response recursion at state s. `minimize` selects
// player 2 replying to player 1's mixed action, otherwise player 1 replying
// to player 2's.
double guarantee_step(const StochasticGame& game, std::size_t s,
                      const MixedAction& fixed, bool minimize, double stage_weight,
                      const ValueFunction& next) {
  const std::size_t ni = game.num_actions1();
  const std::size_t nj = game.num_actions2();
  const std::size_t ns = game.num_states();
  const double cont = 1.0 - stage_weight;
  const std::size_t replies = minimize ? nj : ni;
  double best = minimize ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < replies; ++r) {
    double acc = 0.0;
    const std::size_t mixed_count = minimize ? ni : nj;
    for (std::size_t k = 0; k < mixed_count; ++k) {
      const double w = fixed[k];
      if (w == 0.0) continue;
      const std::size_t i = minimize ? k : r;
      const std::size_t j = minimize ? r : k;
      const double* law = game.next_state_law(s, i, j).data();
      double continuation = 0.0;
      for (std::size_t t = 0; t < ns; ++t) continuation += law[t] * next[t];
      acc += w * (stage_weight * game.payoff(s, i, j) + cont * continuation);
    }
    best = minimize ? std::min(best, acc) : std::max(best, acc);
  }
  return best;
}

GuaranteeCertificate guarantee_recursion(const StochasticGame& game,
                                         const MarkovStrategy& strategy,
                                         std::size_t n, bool minimize,
                                         std::optional<ValueFunction> vn) {
  if (n < 1) throw InputError("horizon must be at least 1");
  check_horizon(strategy, n, "strategy");
  const std::size_t ns = game.num_states();
  const std::size_t expected_actions =
      minimize ? game.num_actions1() : game.num_actions2();
  if (strategy.at(1).num_states() != ns ||
      strategy.at(1).num_actions() != expected_actions) {
    throw InputError("strategy dimensions do not match the game");
  }
  GuaranteeCertificate out;
  out.n = n;
  out.w.assign(n + 1, ValueFunction(ns, 0.0));
  for (std::size_t m = n; m >= 1; --m) {
    const double weight = 1.0 / static_cast<double>(n - m + 1);
    const StationaryStrategy& stage = strategy.at(m);
    const ValueFunction& next = out.w[m];
    ValueFunction& cur = out.w[m - 1];
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(ns);
#pragma omp parallel for schedule(static) \
    if (ns >= kernels::kMinParallelSweepStates)
    for (std::ptrdiff_t s = 0; s < count; ++s) {
      cur[s] = guarantee_step(game, s, stage[s], minimize, weight, next);
    }
  }
  if (!vn) vn = finite_value(game, n).value();
  if (vn->size() != ns) throw InputError("v_n size mismatch");
  out.epsilon = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < ns; ++s) {
    const double gap = minimize ? (*vn)[s] - out.w[0][s] : out.w[0][s] - (*vn)[s];
    out.epsilon = std::max(out.epsilon, gap);
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t sample_index(std::span<const double> probs, double u) {
  double cum = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] <= 0.0) continue;
    cum += probs[k];
    last_positive = k;
    if (u < cum) return k;
  }
  return last_positive;
}

}  // namespace

std::size_t phi(double lambda, double t) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw InputError("phi needs lambda in (0, 1), got " + std::to_string(lambda));
  }
  if (!(t >= 0.0 && t < 1.0)) {
    throw InputError("phi needs t in [0, 1), got " + std::to_string(t));
  }
  if (t == 0.0) return 1;
  const double log_keep = std::log1p(-lambda);
  const double ratio = std::log1p(-t) / log_keep;
  auto stage = static_cast<std::size_t>(std::max(1.0, std::ceil(ratio)));
  // Cumulated weight of the first M stages, 1 - (1 - lambda)^M.
  auto mass = [&](std::size_t m) {
    return -std::expm1(static_cast<double>(m) * log_keep);
  };
  while (stage > 1 && mass(stage - 1) >= t) --stage;
  while (mass(stage) < t) ++stage;
  return stage;
}

std::size_t ceil_stage(double t, std::size_t n) {
  if (!(t >= 0.0)) throw InputError("t must be nonnegative");
  const double x = t * static_cast<double>(n);
  const double nearest = std::nearbyint(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) {
    return static_cast<std::size_t>(nearest);
  }
  return static_cast<std::size_t>(std::ceil(x));
}

PayoffTrajectory trajectory(const StochasticGame& game,
                            const MarkovStrategy& sigma,
                            const MarkovStrategy& rho,
                            std::size_t initial_state, std::size_t n,
                            std::span<const double> vstar) {
  if (n < 1) throw InputError("horizon must be at least 1");
  check_initial_state(game, initial_state);
  check_horizon(sigma, n, "sigma");
  check_horizon(rho, n, "rho");
  if (!vstar.empty() && vstar.size() != game.num_states()) {
    throw InputError("v* size mismatch");
  }
  check_compatible(game, sigma.at(1), rho.at(1));

  PayoffTrajectory out;
  out.n = n;
  out.initial_state = initial_state;
  out.stage_payoffs.reserve(n);
  out.cumulative.reserve(n + 1);
  out.cumulative.push_back(0.0);
  if (!vstar.empty()) out.value_curve.reserve(n + 1);

  std::vector<double> d(game.num_states(), 0.0);
  d[initial_state] = 1.0;
  SegmentCursor xs(sigma), ys(rho);
  kernels::ChainMatrix chain;
  std::vector<double> reward;
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t m = 1; m <= n; ++m) {
    const bool x_moved = xs.seek(m);
    const bool y_moved = ys.seek(m);
    if (x_moved || y_moved) {
      chain = kernels::omp::induced_chain(game, xs.current(), ys.current());
      reward = kernels::omp::induced_reward(game, xs.current(), ys.current());
    }
    if (!vstar.empty()) out.value_curve.push_back(dot(d, vstar));
    const double g = dot(d, reward);
    out.stage_payoffs.push_back(g);
    out.cumulative.push_back(out.cumulative.back() + g * inv_n);
    d = kernels::omp::push_forward(chain, d);
  }
  if (!vstar.empty()) out.value_curve.push_back(dot(d, vstar));
  return out;
}

PayoffCurve constant_payoff_curve(const PayoffTrajectory& traj,
                                  const std::vector<double>& t_grid,
                                  const ValueFunction& vstar) {
  if (vstar.size() <= traj.initial_state) throw InputError("v* size mismatch");
  PayoffCurve out;
  const double v0 = vstar[traj.initial_state];
  for (double t : t_grid) {
    if (!(t > 0.0 && t < 1.0)) throw InputError("t grid must lie in (0, 1)");
    CurvePoint pt;
    pt.t = t;
    pt.stage = ceil_stage(t, traj.n);
    pt.cumulative = traj.cumulative[pt.stage];
    pt.target = t * v0;
    pt.deviation = pt.cumulative - pt.target;
    out.sup_deviation = std::max(out.sup_deviation, std::abs(pt.deviation));
    out.points.push_back(pt);
  }
  return out;
}

PayoffCurve constant_payoff_curve(const StochasticGame& game,
                                  const MarkovStrategy& sigma,
                                  const MarkovStrategy& rho,
                                  std::size_t initial_state, std::size_t n,
                                  const std::vector<double>& t_grid,
                                  const ValueFunction& vstar) {
  return constant_payoff_curve(trajectory(game, sigma, rho, initial_state, n),
                               t_grid, vstar);
}

double discounted_cumulative_payoff(const StochasticGame& game,
                                    const StationaryStrategy& x,
                                    const StationaryStrategy& y,
                                    std::size_t initial_state, double lambda,
                                    double t) {
  check_initial_state(game, initial_state);
  check_compatible(game, x, y);
  if (!(t > 0.0 && t < 1.0)) throw InputError("t must lie in (0, 1)");
  const std::size_t stages = phi(lambda, t);
  const auto chain = kernels::omp::induced_chain(game, x, y);
  const auto reward = kernels::omp::induced_reward(game, x, y);
  std::vector<double> d(game.num_states(), 0.0);
  d[initial_state] = 1.0;
  double weight = lambda;
  double total = 0.0;
  for (std::size_t m = 1; m <= stages; ++m) {
    total += weight * dot(d, reward);
    weight *= 1.0 - lambda;
    if (m < stages) d = kernels::omp::push_forward(chain, d);
  }
  return total;
}

GuaranteeCertificate guaranteed_value(const StochasticGame& game,
                                      const MarkovStrategy& sigma,
                                      std::size_t n,
                                      std::optional<ValueFunction> vn) {
  return guarantee_recursion(game, sigma, n, true, std::move(vn));
}

GuaranteeCertificate guaranteed_value_player2(const StochasticGame& game,
                                              const MarkovStrategy& rho,
                                              std::size_t n,
                                              std::optional<ValueFunction> vn) {
  return guarantee_recursion(game, rho, n, false, std::move(vn));
}

OptimalityCertificate certify_epsilon_optimality(const StochasticGame& game,
                                                 const MarkovStrategy& sigma,
                                                 const MarkovStrategy& rho,
                                                 std::size_t n,
                                                 std::optional<ValueFunction> vn) {
  if (!vn) vn = finite_value(game, n).value();
  OptimalityCertificate out;
  out.player1_gap = guaranteed_value(game, sigma, n, vn).epsilon;
  out.player2_gap = guaranteed_value_player2(game, rho, n, vn).epsilon;
  out.epsilon = std::max(out.player1_gap, out.player2_gap);
  return out;
}

DriftReport value_drift_diagnostic(const StochasticGame& game,
                                   const AdaptedProfile& profile,
                                   std::size_t initial_state,
                                   const std::vector<double>& t_grid,
                                   const ValueFunction& vstar) {
  const std::size_t n = profile.n;
  const PayoffTrajectory traj =
      trajectory(game, profile.sigma, profile.rho, initial_state, n, vstar);
  const auto& curve = traj.value_curve;  // curve[m - 1] = E v*(state_m)
  const double v0 = vstar[initial_state];

  DriftReport out;
  for (double t : t_grid) {
    if (!(t > 0.0 && t < 1.0)) throw InputError("t grid must lie in (0, 1)");
    DriftPoint pt;
    pt.t = t;
    pt.stage = ceil_stage(t, n) + 1;
    pt.expected = curve[pt.stage - 1];
    pt.drift = pt.expected - v0;
    out.sup_drift = std::max(out.sup_drift, std::abs(pt.drift));
    out.points.push_back(pt);
  }

  const std::size_t a = profile.schedule.a;
  const std::size_t p = profile.schedule.p;
  out.block_drifts.assign(p, 0.0);
  for (std::size_t k = 0; k < p; ++k) {
    const double start = curve[k * a];
    for (std::size_t j = 1; j <= a + 1; ++j) {
      out.block_drifts[k] =
          std::max(out.block_drifts[k], std::abs(curve[k * a + j - 1] - start));
    }
    out.within_block_max = std::max(out.within_block_max, out.block_drifts[k]);
  }
  for (std::size_t m = 1; m <= p * a; ++m) {
    out.global_max = std::max(out.global_max, std::abs(curve[m - 1] - v0));
  }
  const double pd = static_cast<double>(p);
  out.within_block_target = 1.0 / (pd * pd);
  out.global_target = 2.0 / pd;
  return out;
}

MonteCarloEstimate monte_carlo_payoff(const StochasticGame& game,
                                      const MarkovStrategy& sigma,
                                      const MarkovStrategy& rho,
                                      std::size_t initial_state, std::size_t n,
                                      std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("need at least one Monte Carlo trial");
  if (n < 1) throw InputError("horizon must be at least 1");
  check_initial_state(game, initial_state);
  check_horizon(sigma, n, "sigma");
  check_horizon(rho, n, "rho");
  check_compatible(game, sigma.at(1), rho.at(1));

  std::vector<const StationaryStrategy*> xs(n), ys(n);
  for (std::size_t m = 1; m <= n; ++m) {
    xs[m - 1] = &sigma.at(m);
    ys[m - 1] = &rho.at(m);
  }
  std::vector<double> totals(trials);
  parallel_for_each_index(trials, [&](std::size_t trial) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(trial)));
    std::size_t state = initial_state;
    std::size_t prev_i = 0, prev_j = 0;
    double total = 0.0;
    for (std::size_t m = 1; m <= n; ++m) {
      if (m > 1) {
        state = sample_index(game.next_state_law(state, prev_i, prev_j),
                             uniform01(rng));
      }
      const std::size_t i = sample_index((*xs[m - 1])[state].probs(), uniform01(rng));
      const std::size_t j = sample_index((*ys[m - 1])[state].probs(), uniform01(rng));
      total += game.payoff(state, i, j);
      prev_i = i;
      prev_j = j;
    }
    totals[trial] = total / static_cast<double>(n);
  });

  MonteCarloEstimate out;
  double sum = 0.0;
  for (double v : totals) sum += v;
  out.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    double sq = 0.0;
    for (double v : totals) sq += (v - out.mean) * (v - out.mean);
    const double var = sq / static_cast<double>(trials - 1);
    out.standard_error = std::sqrt(var / static_cast<double>(trials));
  }
  return out;
}

}  // namespace stochgame
