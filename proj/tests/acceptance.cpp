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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. The first argument is the path of the
// stochgame executable, used by the reproducibility check.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stochgame/adapted.hpp"
#include "stochgame/corpus.hpp"
#include "stochgame/evaluation.hpp"
#include "stochgame/matrix_game.hpp"
#include "stochgame/shapley.hpp"

using namespace stochgame;
namespace fs = std::filesystem;

namespace {

// Floating slack for "non-increasing" comparisons.
constexpr double kOrderSlack = 1e-12;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}

bool non_increasing(const std::vector<double>& v) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] > v[k - 1] + kOrderSlack) return false;
  }
  return true;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += fmt("%.3g", v[k]);
  }
  return "[" + out + "]";
}

// Big Match plus two seeded random games with mixed optimal play.
std::vector<corpus::CorpusEntry> certification_games() {
  return {corpus::big_match(), corpus::random_game(2, 2, 2, 1),
          corpus::random_game(3, 2, 2, 1)};
}

const std::vector<double> kTGrid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

ValueFunction vstar_of(const StochasticGame& game) {
  return limit_value_estimate(game, {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}, 1e-9).value;
}

Outcome matrix_oracle() {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    Matrix m(r, c);
    oracle::Mat o(r, std::vector<double>(c));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) o[i][j] = m(i, j) = u(rng);
    }
    const double v = oracle::support_enumeration_value(o);
    const auto sol = solve_matrix_game(m);
    worst = std::max({worst, std::abs(sol.value - v), v - row_guarantee(m, sol.row_strategy),
                      col_guarantee(m, sol.col_strategy) - v});
  }
  return {worst <= 1e-8, "200 matrices up to 4x4, worst error " + fmt("%.2e", worst)};
}

Outcome shapley_contraction() {
  const std::vector<double> lambdas = {0.5, 0.2, 0.1, 0.05, 0.01};
  double worst_ratio = 0.0, worst_excess = -1.0;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 50; ++k) {
    const auto game =
        corpus::random_game(2 + k % 4, 2 + k % 2, 2 + (k / 2) % 2, 500 + k).game;
    const double lambda = lambdas[k % lambdas.size()];
    const auto sol = discounted_value(game, lambda, 1e-8);
    worst_ratio = std::max(worst_ratio, sol.residual / (1e-8 * lambda));
    for (int pair = 0; pair < 4; ++pair) {
      ValueFunction v(game.num_states()), w(game.num_states());
      double dist = 0.0;
      for (std::size_t s = 0; s < v.size(); ++s) {
        v[s] = u(rng);
        w[s] = u(rng);
        dist = std::max(dist, std::abs(v[s] - w[s]));
      }
      const auto pv = shapley_operator(game, lambda, v);
      const auto pw = shapley_operator(game, lambda, w);
      double out = 0.0;
      for (std::size_t s = 0; s < v.size(); ++s) out = std::max(out, std::abs(pv[s] - pw[s]));
      worst_excess = std::max(worst_excess, out - (1.0 - lambda) * dist);
    }
  }
  return {worst_ratio <= 1.0 && worst_excess <= 1e-10,
          "50 solves, max residual/(tol*lambda) " + fmt("%.3f", worst_ratio) +
              "; 200 pairs, max contraction excess " + fmt("%.2e", worst_excess)};
}

Outcome finite_exactness() {
  double worst = 0.0;
  int games = 0;
  for (std::size_t ns = 1; ns <= 2; ++ns) {
    for (std::size_t ni = 1; ni <= 2; ++ni) {
      for (std::size_t nj = 1; nj <= 2; ++nj) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
          const auto game = corpus::random_game(ns, ni, nj, seed).game;
          ++games;
          const auto fin = finite_value(game, 4);
          for (std::size_t n = 1; n <= 4; ++n) {
            const auto ref = oracle::total_payoff_value(game, n);
            for (std::size_t s = 0; s < ns; ++s) {
              worst = std::max(worst, std::abs(fin.values[n - 1][s] - ref[s]));
            }
          }
        }
      }
    }
  }
  const auto mdp = corpus::single_player_mdp().game;
  const auto fin = finite_value(mdp, 20);
  double worst_mdp = 0.0;
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto ref = oracle::mdp_finite_value(mdp, n);
    for (std::size_t s = 0; s < 3; ++s) {
      worst_mdp = std::max(worst_mdp, std::abs(fin.values[n - 1][s] - ref[s]));
    }
  }
  return {worst <= 1e-10 && worst_mdp <= 1e-12,
          std::to_string(games) + " small games n<=4, worst " + fmt("%.2e", worst) +
              "; single-player n<=20, worst " + fmt("%.2e", worst_mdp)};
}

Outcome big_match_values() {
  const auto game = corpus::big_match().game;
  double worst = 0.0;
  for (double lambda : {1e-1, 1e-2, 1e-3}) {
    const double v = discounted_value(game, lambda, 1e-8).value[0];
    worst = std::max({worst, std::abs(v - 0.5), std::abs(v - oracle::big_match_discounted(lambda))});
  }
  const auto fin = finite_value(game, 1000);
  for (std::size_t n : {10, 100, 1000}) {
    const double v = fin.values[n - 1][0];
    worst = std::max({worst, std::abs(v - 0.5), std::abs(v - oracle::big_match_finite(n))});
  }
  return {worst <= 1e-5, "lambda in {1e-1,1e-2,1e-3}, n in {10,100,1000}, worst " +
                             fmt("%.2e", worst)};
}

Outcome asymptotic_optimality() {
  bool ok = true;
  std::string detail;
  for (const auto& entry : certification_games()) {
    std::vector<double> eps;
    for (std::size_t n : {50, 200, 800}) {
      const auto profile = adapted_profile(entry.game, n, default_block_length(n), 1e-9);
      eps.push_back(certify_epsilon_optimality(entry.game, profile.sigma, profile.rho, n).epsilon);
    }
    const bool here = non_increasing(eps) && eps[2] <= std::max(eps[0] / 2.0, 1e-6);
    ok = ok && here;
    detail += entry.name + " eps " + join(eps) + (here ? "" : " (violated)") + "; ";
  }
  return {ok, detail};
}

Outcome constant_payoff() {
  bool ok = true;
  std::string detail;
  for (const auto& entry : certification_games()) {
    const auto vstar = vstar_of(entry.game);
    std::vector<double> sup;
    for (std::size_t n : {100, 400, 1600}) {
      const auto profile = adapted_profile(entry.game, n, default_block_length(n), 1e-9);
      sup.push_back(constant_payoff_curve(entry.game, profile.sigma, profile.rho, 0, n, kTGrid,
                                          vstar)
                        .sup_deviation);
    }
    const bool here = non_increasing(sup) && sup[2] <= 0.1 * entry.game.payoff_bound();
    ok = ok && here;
    detail += entry.name + " sup " + join(sup) + (here ? "" : " (violated)") + "; ";
  }
  return {ok, detail};
}

Outcome value_drift() {
  bool ok = true;
  std::string detail;
  for (const auto& entry : certification_games()) {
    const auto vstar = vstar_of(entry.game);
    std::vector<double> sup;
    double bound = 0.0;
    for (std::size_t n : {100, 400, 1600}) {
      const auto profile = adapted_profile(entry.game, n, default_block_length(n), 1e-9);
      sup.push_back(value_drift_diagnostic(entry.game, profile, 0, kTGrid, vstar).sup_drift);
      bound = 4.0 / static_cast<double>(profile.schedule.p) * entry.game.payoff_bound();
    }
    const bool here = non_increasing(sup) && sup[2] <= bound;
    ok = ok && here;
    detail += entry.name + " drift " + join(sup) + (here ? "" : " (violated)") + "; ";
  }
  return {ok, detail};
}

Outcome phi_formula() {
  int mismatches = 0;
  for (int i = 1; i <= 50; ++i) {
    for (int j = 1; j <= 50; ++j) {
      const double lambda = i / 51.0, t = (j - 1) / 51.0;
      if (phi(lambda, t) != oracle::phi_scan(lambda, t)) ++mismatches;
    }
  }
  return {mismatches == 0, "2500 grid points, " + std::to_string(mismatches) + " mismatches"};
}

Outcome discounted_constant_payoff() {
  const auto game = corpus::big_match().game;
  const auto vstar = vstar_of(game);
  auto sup_at = [&](double lambda) {
    const auto sol = discounted_value(game, lambda, 1e-10);
    double sup = 0.0;
    for (double t : kTGrid) {
      sup = std::max(sup, std::abs(discounted_cumulative_payoff(game, sol.x, sol.y, 0, lambda, t) -
                                   t * vstar[0]));
    }
    return sup;
  };
  const double coarse = sup_at(1e-1), fine = sup_at(1e-3);
  return {fine <= coarse / 2.0,
          "sup at 1e-1 " + fmt("%.3e", coarse) + ", at 1e-3 " + fmt("%.3e", fine)};
}

Outcome block_mass() {
  using boost::multiprecision::cpp_int;
  std::size_t violations = 0;
  for (std::size_t a = 2; a <= 10000; ++a) {
    if (block_discount_mass(a, 1.0 / static_cast<double>(a)) > 0.875) ++violations;
  }
  // Rational form: 1 - (1 - 1/a)^(a+1) <= 7/8  iff  8 (a-1)^(a+1) >= a^(a+1).
  std::size_t rational_violations = 0;
  for (unsigned a = 2; a <= 300; ++a) {
    const cpp_int lhs = 8 * boost::multiprecision::pow(cpp_int(a - 1), a + 1);
    const cpp_int rhs = boost::multiprecision::pow(cpp_int(a), a + 1);
    if (lhs < rhs) ++rational_violations;
  }
  return {violations == 0 && rational_violations == 0,
          "a in [2, 10000]: " + std::to_string(violations) +
              " violations; exact rational check a <= 300: " +
              std::to_string(rational_violations) + " violations"};
}

Outcome monte_carlo() {
  struct Size {
    std::size_t s, i, j;
  };
  const Size sizes[] = {{2, 2, 2}, {3, 2, 2}, {3, 3, 3}, {4, 2, 3}, {2, 3, 2}};
  bool ok = true;
  double worst = 0.0;
  std::uint64_t seed = 900;
  for (const auto& sz : sizes) {
    const auto game = corpus::random_game(sz.s, sz.i, sz.j, seed++).game;
    const auto profile = adapted_profile(game, 30, default_block_length(30), 1e-9);
    const double exact = trajectory(game, profile.sigma, profile.rho, 0, 30).cumulative.back();
    const auto est = monte_carlo_payoff(game, profile.sigma, profile.rho, 0, 30, 10000, seed);
    const double z = std::abs(est.mean - exact) / est.standard_error;
    worst = std::max(worst, z);
    ok = ok && z <= 4.0;
  }
  return {ok, "5 games, 10^4 trials, worst |mean - exact| / se = " + fmt("%.2f", worst)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome reproducibility(const std::string& exe) {
  if (exe.empty()) return {false, "no executable path given"};
  const fs::path root = fs::temp_directory_path() / "stochgame_acceptance";
  fs::remove_all(root);
  const std::vector<std::string> commands = {
      "values --corpus big_match --n 10,100 --lambda 1e-1,1e-2,1e-3",
      "values --corpus single_player_mdp --n 20 --format json",
      "adapted --corpus big_match --n 50,200",
      "adapted --corpus random_3_2_2_seed1 --n 40 --a 5 --format json",
      "curve --corpus cyclic_two_state --n 100,400 --vstar-grid 1e-1,1e-2,1e-3 --lambda 1e-1",
      "certify --corpus random_2_2_2_seed1 --n 100 --vstar-grid 1e-1,1e-2,1e-3",
      "gen --states 3 --actions1 2 --actions2 4 --seed 11",
  };
  std::size_t files = 0, mismatches = 0, failures = 0;
  for (std::size_t k = 0; k < commands.size(); ++k) {
    const fs::path first = root / ("run" + std::to_string(k));
    const fs::path again = root / ("replay" + std::to_string(k));
    const std::string run = "\"" + exe + "\" " + commands[k] + " --out-dir \"" +
                            first.string() + "\" > /dev/null";
    const std::string replay = "\"" + exe + "\" replay \"" + (first / "manifest.json").string() +
                               "\" --out-dir \"" + again.string() + "\" > /dev/null";
    if (std::system(run.c_str()) != 0 || std::system(replay.c_str()) != 0) {
      ++failures;
      continue;
    }
    for (const auto& entry : fs::directory_iterator(first)) {
      const auto name = entry.path().filename();
      if (name == "manifest.json") continue;
      ++files;
      if (slurp(entry.path()) != slurp(again / name)) ++mismatches;
    }
  }
  return {failures == 0 && mismatches == 0 && files > 0,
          std::to_string(commands.size()) + " runs, " + std::to_string(files) +
              " files compared, " + std::to_string(mismatches) + " differ, " +
              std::to_string(failures) + " runs failed"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* name;
    double time_limit;  // seconds; 0 for none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "matrix solver agrees with support enumeration", 5, matrix_oracle},
      {2, "discounted fixed point and contraction", 30, shapley_contraction},
      {3, "finite-horizon values are exact", 0, finite_exactness},
      {4, "Big Match values equal 1/2", 60, big_match_values},
      {5, "adapted profiles are asymptotically optimal", 300, asymptotic_optimality},
      {6, "adapted profiles have constant payoff", 600, constant_payoff},
      {7, "expected limit value drifts slowly", 0, value_drift},
      {8, "phi closed form equals direct scan", 1, phi_formula},
      {9, "discounted payoff is spread evenly in time", 0, discounted_constant_payoff},
      {10, "block discount mass is at most 7/8", 0, block_mass},
      {11, "Monte Carlo agrees with exact trajectories", 0, monte_carlo},
      {12, "every command replays byte for byte", 0, [&] { return reproducibility(exe); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs > c.time_limit) {
      out.pass = false;
      out.detail += " (over the " + fmt("%.0f", c.time_limit) + " s budget)";
    }
    if (!out.pass) ++failed;
    std::cout << (out.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": "
              << out.detail << " (" << fmt("%.2f", secs) << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
