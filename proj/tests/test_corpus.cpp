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
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "stochgame/corpus.hpp"
#include "stochgame/errors.hpp"
#include "stochgame/shapley.hpp"

using namespace stochgame;

#ifndef STOCHGAME_GAMES_DIR
#error "STOCHGAME_GAMES_DIR must point at the games directory"
#endif

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("Big Match layout") {
  const auto entry = corpus::big_match();
  const auto& g = entry.game;
  CHECK(g.num_states() == 3);
  CHECK(g.num_actions1() == 2);
  CHECK(g.num_actions2() == 2);
  for (std::size_t s : {1, 2}) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) CHECK(g.next_state_law(s, i, j)[s] == 1.0);
    }
  }
  CHECK(g.next_state_law(0, 0, 0)[2] == 1.0);
  CHECK(g.next_state_law(0, 0, 1)[1] == 1.0);
  CHECK(g.next_state_law(0, 1, 0)[0] == 1.0);
  CHECK(g.next_state_law(0, 1, 1)[0] == 1.0);
}

TEST_CASE("Big Match facts agree on both routes") {
  const auto entry = corpus::big_match();
  const double by_lambda = discounted_value(entry.game, 0.01, 1e-9).value[0];
  const double by_n = finite_value(entry.game, 50).value()[0];
  CHECK(std::abs(by_lambda - 0.5) <= 1e-6);
  CHECK(std::abs(by_n - 0.5) <= 1e-6);
  CHECK(std::abs(by_lambda - by_n) <= 1e-5);
}

TEST_CASE("known facts carry provenance and hold") {
  for (const auto& name : corpus::names()) {
    const auto entry = corpus::by_name(name);
    const auto est = limit_value_estimate(entry.game, {1e-1, 1e-2, 1e-3, 1e-4}, 1e-10);
    for (const auto& fact : entry.known_facts) {
      CHECK(!fact.provenance.empty());
      CHECK(fact.quantity == "v*");
      CHECK(std::abs(est.value[entry.game.state_index(fact.state)] - fact.value) <= 1e-3);
    }
  }
}

TEST_CASE("single-player corpus game") {
  const auto g = corpus::single_player_mdp().game;
  CHECK(g.num_actions2() == 1);
  CHECK(g.num_states() == 3);
}

TEST_CASE("random games are deterministic and normalized") {
  const auto a = corpus::random_game(4, 3, 2, 123);
  const auto b = corpus::random_game(4, 3, 2, 123);
  CHECK(a.game == b.game);
  CHECK_FALSE(a.game == corpus::random_game(4, 3, 2, 124).game);
  for (std::size_t s = 0; s < 4; ++s) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        double total = 0.0;
        for (double p : a.game.next_state_law(s, i, j)) total += p;
        CHECK(std::abs(total - 1.0) <= 1e-12);
        CHECK(std::abs(a.game.payoff(s, i, j)) <= 1.0);
      }
    }
  }
  CHECK(corpus::by_name("random_4_3_2_seed123").game == a.game);
  CHECK_THROWS_AS(corpus::random_game(0, 1, 1, 1), InputError);
  CHECK_THROWS_AS(corpus::by_name("random_4_3_2_seed"), InputError);
  CHECK_THROWS_AS(corpus::by_name("nope"), InputError);
}

TEST_CASE("shipped game files match the corpus byte for byte") {
  const std::string dir = STOCHGAME_GAMES_DIR;
  for (const auto& name : corpus::names()) {
    CHECK(slurp(dir + "/" + name + ".json") == serialize_game(corpus::by_name(name).game));
  }
  CHECK(slurp(dir + "/random_2_2_2_seed7.json") ==
        serialize_game(corpus::random_game(2, 2, 2, 7).game));
}
