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

#include <cmath>

#include "doctest.h"
#include "stochgame/adapted.hpp"
#include "stochgame/corpus.hpp"
#include "stochgame/errors.hpp"
#include "stochgame/evaluation.hpp"
#include "stochgame/shapley.hpp"
#include "test_util.hpp"

using namespace stochgame;

TEST_CASE("block schedule with a trailing partial block") {
  const auto s = block_schedule(10, 3);
  CHECK(s.p == 3);
  REQUIRE(s.num_blocks() == 4);
  CHECK(s.discounts[0] == 1.0 / 10.0);
  CHECK(s.discounts[1] == 1.0 / 7.0);
  CHECK(s.discounts[2] == 1.0 / 4.0);
  CHECK(s.discounts[3] == 1.0);
  for (std::size_t m = 1; m <= 3; ++m) CHECK(s.block_of(m) == 0);
  for (std::size_t m = 4; m <= 6; ++m) CHECK(s.block_of(m) == 1);
  for (std::size_t m = 7; m <= 9; ++m) CHECK(s.block_of(m) == 2);
  CHECK(s.block_of(10) == 3);
  CHECK(s.block_length(0) == 3);
  CHECK(s.block_length(3) == 1);
}

TEST_CASE("block schedule edge cases") {
  const auto one = block_schedule(7, 7);
  CHECK(one.p == 1);
  CHECK(one.num_blocks() == 1);
  CHECK(one.discounts[0] == 1.0 / 7.0);
  const auto two = block_schedule(4, 2);
  CHECK(two.p == 2);
  CHECK(two.discounts == std::vector<double>{0.25, 0.5});
  CHECK_THROWS_AS(block_schedule(10, 1), InputError);
  CHECK_THROWS_AS(block_schedule(10, 11), InputError);
}

TEST_CASE("default block length") {
  CHECK(default_block_length(2) == 2);
  CHECK(default_block_length(4) == 2);
  CHECK(default_block_length(100) == 10);
  CHECK(default_block_length(101) == 11);
  CHECK(default_block_length(1600) == 40);
  CHECK_THROWS_AS(default_block_length(1), InputError);
}

TEST_CASE("block mass at lambda = 1/a") {
  CHECK(block_discount_mass(2, 0.5) == 0.875);
  for (std::size_t a = 2; a <= 10000; ++a) {
    CHECK(block_discount_mass(a, 1.0 / static_cast<double>(a)) <= 0.875);
  }
}

TEST_CASE("adapted profile plays the block discounted strategies") {
  const auto game = corpus::big_match().game;
  const auto profile = adapted_profile(game, 10, 3, 1e-10);
  const double lambdas[] = {1.0 / 10.0, 1.0 / 7.0, 1.0 / 4.0, 1.0};
  const std::size_t first[] = {1, 4, 7, 10}, last[] = {3, 6, 9, 10};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto sol = discounted_value(game, lambdas[k], 1e-10);
    for (std::size_t m = first[k]; m <= last[k]; ++m) {
      CHECK(profile.sigma.at(m) == sol.x);
      CHECK(profile.rho.at(m) == sol.y);
    }
  }
  CHECK(profile.sigma.horizon() == 10);
  CHECK(profile.source == "discounted_value");
}

TEST_CASE("single block profile is stationary") {
  const auto game = corpus::random_game(2, 2, 2, 3).game;
  const auto profile = adapted_profile(game, 4, 4, 1e-10);
  const auto sol = discounted_value(game, 0.25, 1e-10);
  CHECK(profile.sigma.segments().size() == 1);
  CHECK(profile.sigma.at(1) == sol.x);
  CHECK(profile.rho.at(4) == sol.y);
}

TEST_CASE("constant game profile pays the constant") {
  const auto game = testutil::constant_game(3, 2, 2, 0.6);
  const auto profile = adapted_profile(game, 9, 3, 1e-10);
  for (std::size_t s = 0; s < 3; ++s) {
    const auto traj = trajectory(game, profile.sigma, profile.rho, s, 9);
    CHECK(traj.cumulative.back() == doctest::Approx(0.6).epsilon(1e-14));
  }
}

TEST_CASE("profile summary fields") {
  const auto profile = adapted_profile(corpus::big_match().game, 10, 3, 1e-9);
  const auto j = profile_summary(profile);
  CHECK(j["n"] == 10);
  CHECK(j["a"] == 3);
  CHECK(j["p"] == 3);
  CHECK(j["discounts"].size() == 4);
  CHECK(j["source"] == "discounted_value");
  CHECK(j["tol"] == 1e-9);
}

TEST_CASE("block length selection from a mu sequence") {
  const auto half = MuSequence::analytic(50, [](std::size_t) { return 0.5; });
  CHECK(select_block_length(100, half) == 2);
  const auto root = MuSequence::analytic(
      50, [](std::size_t p) { return 1.0 / std::sqrt(static_cast<double>(p)); });
  CHECK(select_block_length(100, root) == 5);
  const auto tiny = MuSequence::analytic(50, [](std::size_t) { return 1e-9; });
  CHECK_THROWS_AS(select_block_length(100, tiny), NotReadyError);
  CHECK_THROWS_AS(select_block_length(1000, root), InputError);
  CHECK_THROWS_AS(MuSequence::analytic(5, [](std::size_t) { return 0.0; }), InputError);
  CHECK(MuSequence::analytic(3, [](std::size_t) { return 3.0; }).at(2) == 0.5);
  CHECK_THROWS_AS(root.at(0), InputError);
  CHECK_THROWS_AS(root.at(51), InputError);
}

TEST_CASE("selected block lengths are a vanishing fraction of the horizon") {
  const auto root = MuSequence::analytic(
      5000, [](std::size_t p) { return 1.0 / std::sqrt(static_cast<double>(p)); });
  for (double eps : {0.5, 0.2, 0.1}) {
    std::size_t threshold = 0;
    for (std::size_t n = 10000; n >= 2; --n) {
      if (static_cast<double>(select_block_length(n, root)) > eps * static_cast<double>(n)) {
        threshold = n;
        break;
      }
    }
    for (std::size_t n = std::max<std::size_t>(threshold + 1, 2); n <= 10000; n += 37) {
      CHECK(static_cast<double>(select_block_length(n, root)) <= eps * static_cast<double>(n));
    }
  }
}

TEST_CASE("mu file parsing") {
  const auto mu = MuSequence::from_json(R"({"mu": [0.5, 0.25, 0.1]})");
  CHECK(mu.p_max() == 3);
  CHECK(mu.at(3) == 0.1);
  CHECK_THROWS_AS(MuSequence::from_json("{"), ParseError);
  CHECK_THROWS_AS(MuSequence::from_json(R"({"nu": []})"), ParseError);
  CHECK_THROWS_AS(MuSequence::from_json(R"({"mu": [0.7]})"), InputError);
  CHECK_THROWS_AS(MuSequence::from_json(R"({"mu": ["x"]})"), ParseError);
}

TEST_CASE("empirical mu on drift-free games takes the largest grid value") {
  const std::vector<double> grid = {0.5, 0.25, 0.125, 0.0625};
  for (const auto& game :
       {testutil::constant_game(3, 2, 2, 0.4), testutil::constant_game(1, 2, 3, -1.0)}) {
    const ProfileProvider provider = [&](double l) { return discounted_value(game, l, 1e-10); };
    const ValueFunction vstar(game.num_states(), game.payoff(0, 0, 0));
    const auto mu = estimate_mu_sequence(game, provider, grid, default_mu_t_grid(), 6, vstar);
    CHECK(mu.p_max() == 6);
    for (double m : mu.mu) CHECK(m == 0.5);
    CHECK_FALSE(mu.approximate);
    CHECK(mu.provenance == MuSequence::Provenance::kEmpirical);
  }
}

TEST_CASE("empirical mu on Big Match meets its drift bound") {
  const auto game = corpus::big_match().game;
  std::vector<double> grid;
  for (int k = 1; k <= 12; ++k) grid.push_back(std::ldexp(1.0, -k));
  const ProfileProvider provider = [&](double l) { return discounted_value(game, l, 1e-10); };
  const ValueFunction vstar = {0.5, 0.0, 1.0};
  const auto ts = default_mu_t_grid();
  const auto mu = estimate_mu_sequence(game, provider, grid, ts, 10, vstar);
  for (std::size_t p = 2; p <= 10; ++p) CHECK(mu.at(p) <= mu.at(p - 1));
  for (std::size_t p = 1; p <= 10; ++p) {
    const double bound = 1.0 / static_cast<double>(p * p);
    bool holds = true;
    for (double l : grid) {
      if (l > mu.at(p)) continue;
      const auto sol = provider(l);
      const auto stat_x = MarkovStrategy::stationary(sol.x, 2000);
      const auto stat_y = MarkovStrategy::stationary(sol.y, 2000);
      for (std::size_t s = 0; s < 3; ++s) {
        const auto traj = trajectory(game, stat_x, stat_y, s, 2000, vstar);
        for (double t : ts) {
          const std::size_t m = phi(l, t);
          if (m > 2000) continue;
          holds = holds && std::abs(traj.value_curve[m - 1] - vstar[s]) <= bound + 1e-12;
        }
      }
    }
    CHECK((holds || (mu.approximate && mu.at(p) == grid.back())));
  }
  CHECK_THROWS_AS(estimate_mu_sequence(game, provider, {0.9}, ts, 3, vstar), InputError);
  CHECK_THROWS_AS(estimate_mu_sequence(game, provider, grid, {0.95}, 3, vstar), InputError);
}
