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

#ifndef STOCHGAME_CORPUS_HPP_
#define STOCHGAME_CORPUS_HPP_

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "stochgame/game.hpp"

namespace stochgame::corpus {

// A certified quantity about a corpus game, with how it was established.
struct KnownFact {
  std::string quantity;  // e.g. "v*"
  std::string state;
  double value = 0.0;
  std::string provenance;
};

struct CorpusEntry {
  std::string name;
  StochasticGame game;
  std::vector<KnownFact> known_facts;
};

// Classical Big Match: one active state with payoffs [[1, 0], [0, 1]]; the
// top row absorbs into the payoff-1 state (left column) or the payoff-0
// state (right column), the bottom row stays. v* = 1/2 at the active state.
CorpusEntry big_match();

// Three-state, two-action decision problem (player 2 has a single action).
CorpusEntry single_player_mdp();

// Two states joined by cyclic transitions. Player 1 can hold "north" at a
// stage payoff of 1/2 and player 2 can hold "south" at 0, so v* = (1/2, 0).
CorpusEntry cyclic_two_state();

// Payoffs uniform in [-1, 1], transition rows drawn uniformly from the
// simplex. Deterministic in (sizes, seed).
CorpusEntry random_game(std::size_t num_states, std::size_t num_actions1,
                        std::size_t num_actions2, std::uint64_t seed);

// Named entries: big_match, single_player_mdp, cyclic_two_state, and
// random_<S>_<I>_<J>_seed<N> for random_game(S, I, J, N).
CorpusEntry by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace stochgame::corpus

#endif  // STOCHGAME_CORPUS_HPP_
