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

#include "stochgame/adapted.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "stochgame/errors.hpp"
#include "stochgame/evaluation.hpp"
#include "stochgame/kernels.hpp"
#include "stochgame/parallel.hpp"

namespace stochgame {

std::size_t BlockSchedule::block_length(std::size_t k) const {
  const std::size_t first = k * a + 1;
  return std::min((k + 1) * a, n) - first + 1;
}

BlockSchedule block_schedule(std::size_t n, std::size_t a) {
  if (a < 2 || a > n) {
    throw InputError("block length must satisfy 2 <= a <= n, got a=" +
                     std::to_string(a) + ", n=" + std::to_string(n));
  }
  BlockSchedule out;
  out.n = n;
  out.a = a;
  out.p = n / a;
  const std::size_t last_block = (n - 1) / a;
  out.discounts.reserve(last_block + 1);
  for (std::size_t k = 0; k <= last_block; ++k) {
    out.discounts.push_back(1.0 / static_cast<double>(n - k * a));
  }
  return out;
}

std::size_t default_block_length(std::size_t n) {
  if (n < 2) throw InputError("adapted profiles need a horizon of at least 2");
  auto a = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  while (a * a < n) ++a;
  while (a > 1 && (a - 1) * (a - 1) >= n) --a;
  return std::max<std::size_t>(a, 2);
}

double block_discount_mass(std::size_t a, double lambda) {
  return 1.0 - std::pow(1.0 - lambda, static_cast<double>(a + 1));
}

AdaptedProfile adapted_profile(const StochasticGame& game,
                               const BlockSchedule& schedule, double tol,
                               std::optional<std::size_t> max_iterations) {
  AdaptedProfile out;
  out.n = schedule.n;
  out.schedule = schedule;
  out.tol = tol;
  out.source = "discounted_value";
  out.block_solutions.resize(schedule.num_blocks());
  parallel_for_each_index(schedule.num_blocks(), [&](std::size_t k) {
    try {
      out.block_solutions[k] = discounted_value(game, schedule.discounts[k], tol,
                                                  max_iterations);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("block k=" + std::to_string(k) + ": " + e.what(),
                             e.last_residual());
    }
  });
  for (std::size_t k = 0; k < schedule.num_blocks(); ++k) {
    out.sigma.append(out.block_solutions[k].x, schedule.block_length(k));
    out.rho.append(out.block_solutions[k].y, schedule.block_length(k));
  }
  return out;
}

AdaptedProfile adapted_profile(const StochasticGame& game, std::size_t n,
                               std::size_t a, double tol,
                               std::optional<std::size_t> max_iterations) {
  return adapted_profile(game, block_schedule(n, a), tol, max_iterations);
}

nlohmann::ordered_json profile_summary(const AdaptedProfile& profile) {
  nlohmann::ordered_json out;
  out["n"] = profile.schedule.n;
  out["a"] = profile.schedule.a;
  out["p"] = profile.schedule.p;
  out["discounts"] = profile.schedule.discounts;
  out["source"] = profile.source;
  out["tol"] = profile.tol;
  return out;
}

double MuSequence::at(std::size_t p) const {
  if (p < 1 || p > mu.size()) {
    throw InputError("mu sequence undefined at p=" + std::to_string(p) +
                     " (defined for 1.." + std::to_string(mu.size()) + ")");
  }
  return mu[p - 1];
}

MuSequence MuSequence::analytic(std::size_t p_max,
                                const std::function<double(std::size_t)>& f) {
  MuSequence out;
  out.provenance = Provenance::kAnalyticDefault;
  out.mu.reserve(p_max);
  for (std::size_t p = 1; p <= p_max; ++p) {
    const double v = f(p);
    if (!(v > 0.0)) throw InputError("mu_p must be positive");
    out.mu.push_back(std::min(v, 0.5));
  }
  return out;
}

MuSequence MuSequence::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed mu file: ") + e.what(), 0, 0);
  }
  if (!doc.is_object() || !doc.contains("mu") || !doc["mu"].is_array()) {
    throw ParseError("mu file needs an array field 'mu'", 0, 0);
  }
  MuSequence out;
  out.provenance = Provenance::kEmpirical;
  for (const auto& v : doc["mu"]) {
    if (!v.is_number()) throw ParseError("mu entries must be numbers", 0, 0);
    const double m = v.get<double>();
    if (!(m > 0.0 && m <= 0.5)) throw InputError("mu entries must lie in (0, 1/2]");
    out.mu.push_back(m);
  }
  if (doc.contains("approximate") && doc["approximate"].is_boolean()) {
    out.approximate = doc["approximate"].get<bool>();
  }
  return out;
}

std::size_t select_block_length(std::size_t n, const MuSequence& mu) {
  if (n < 2) throw InputError("select_block_length needs n >= 2");
  if (mu.p_max() < n / 2) {
    throw InputError("mu sequence must cover p = 1.." + std::to_string(n / 2));
  }
  for (std::size_t a = 2; a <= n; ++a) {
    if (1.0 / static_cast<double>(a) <= mu.at(n / a)) return a;
  }
  throw NotReadyError("no block length a in [2, " + std::to_string(n) +
                      "] satisfies 1/a <= mu_floor(n/a); use the default schedule");
}

std::vector<double> default_mu_t_grid() {
  std::vector<double> out;
  for (int k = 1; k <= 7; ++k) out.push_back(k / 8.0);
  return out;
}

MuSequence estimate_mu_sequence(const StochasticGame& game,
                                const ProfileProvider& provider,
                                const std::vector<double>& lambda_grid,
                                const std::vector<double>& t_grid,
                                std::size_t p_max, const ValueFunction& vstar) {
  if (lambda_grid.empty() || t_grid.empty()) throw InputError("empty grid");
  for (std::size_t k = 0; k < lambda_grid.size(); ++k) {
    const double l = lambda_grid[k];
    if (!(l > 0.0 && l <= 0.5)) throw InputError("lambda grid must lie in (0, 1/2]");
    if (k > 0 && !(l < lambda_grid[k - 1])) {
      throw InputError("lambda grid must be strictly decreasing");
    }
  }
  for (double t : t_grid) {
    if (!(t > 0.0 && t <= 0.875)) throw InputError("t grid must lie in (0, 7/8]");
  }
  if (vstar.size() != game.num_states()) throw InputError("v* size mismatch");
  if (p_max < 1) throw InputError("p_max must be at least 1");

  const std::size_t ns = game.num_states();
  std::vector<double> drift(lambda_grid.size(), 0.0);
  parallel_for_each_index(lambda_grid.size(), [&](std::size_t k) {
    const double lambda = lambda_grid[k];
    const DiscountedSolution sol = provider(lambda);
    check_compatible(game, sol.x, sol.y);
    const auto chain = kernels::omp::induced_chain(game, sol.x, sol.y);
    std::set<std::size_t> stages;
    for (double t : t_grid) stages.insert(phi(lambda, t));
    // h = P^(M-1) v*, so h(s) = E_s[v*(state_M)].
    std::vector<double> h(vstar.begin(), vstar.end());
    std::size_t at_stage = 1;
    double worst = 0.0;
    for (std::size_t target : stages) {
      for (; at_stage < target; ++at_stage) h = kernels::omp::pull_back(chain, h);
      for (std::size_t s = 0; s < ns; ++s) {
        worst = std::max(worst, std::abs(h[s] - vstar[s]));
      }
    }
    drift[k] = worst;
  });

  // suffix[k] = max drift over grid points with lambda <= lambda_grid[k].
  std::vector<double> suffix(drift.size());
  double running = 0.0;
  for (std::size_t k = drift.size(); k-- > 0;) {
    running = std::max(running, drift[k]);
    suffix[k] = running;
  }

  MuSequence out;
  out.provenance = MuSequence::Provenance::kEmpirical;
  out.lambda_grid = lambda_grid;
  out.drift = drift;
  out.mu.reserve(p_max);
  for (std::size_t p = 1; p <= p_max; ++p) {
    const double bound = 1.0 / (static_cast<double>(p) * static_cast<double>(p));
    std::size_t chosen = lambda_grid.size();
    for (std::size_t k = 0; k < lambda_grid.size(); ++k) {
      if (suffix[k] <= bound) {
        chosen = k;
        break;
      }
    }
    if (chosen == lambda_grid.size()) {
      chosen = lambda_grid.size() - 1;
      out.approximate = true;
    }
    out.mu.push_back(std::min(lambda_grid[chosen], 0.5));
  }
  return out;
}

}  // namespace stochgame
