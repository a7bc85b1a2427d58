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

#ifndef STOCHGAME_GAME_HPP_
#define STOCHGAME_GAME_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stochgame {

// A real-valued function on the state set: v_n, v_lambda, v* and the
// guarantee levels all use this representation.
using ValueFunction = std::vector<double>;

class StochasticGame;

// Probability vector over an action set.
class MixedAction {
 public:
  MixedAction() = default;
  // Throws InvariantError unless probs is nonnegative and sums to 1 within
  // 1e-12.
  explicit MixedAction(std::vector<double> probs);

  static MixedAction pure(std::size_t num_actions, std::size_t action);
  static MixedAction uniform(std::size_t num_actions);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t a) const { return probs_[a]; }
  const std::vector<double>& probs() const { return probs_; }

  bool operator==(const MixedAction&) const = default;

 private:
  std::vector<double> probs_;
};

// One mixed action per state.
class StationaryStrategy {
 public:
  StationaryStrategy() = default;
  explicit StationaryStrategy(std::vector<MixedAction> per_state);

  static StationaryStrategy uniform(std::size_t num_states,
                                    std::size_t num_actions);

  std::size_t num_states() const { return per_state_.size(); }
  std::size_t num_actions() const {
    return per_state_.empty() ? 0 : per_state_.front().size();
  }
  const MixedAction& operator[](std::size_t state) const {
    return per_state_[state];
  }

  bool operator==(const StationaryStrategy&) const = default;

 private:
  std::vector<MixedAction> per_state_;
};

// Stage- and state-dependent strategy over stages 1..horizon. Consecutive
// stages playing the same stationary strategy share one segment, so a
// block-constant strategy costs memory proportional to its block count.
class MarkovStrategy {
 public:
  struct Segment {
    std::size_t first_stage;  // 1-based, inclusive
    std::size_t last_stage;   // inclusive
    StationaryStrategy strategy;

    bool operator==(const Segment&) const = default;
  };

  MarkovStrategy() = default;

  static MarkovStrategy stationary(StationaryStrategy strategy,
                                   std::size_t horizon);

  // Extends the horizon by `stages` stages that all play `strategy`.
  void append(StationaryStrategy strategy, std::size_t stages = 1);

  std::size_t horizon() const { return horizon_; }
  // Stage is 1-based. Throws InputError outside [1, horizon].
  const StationaryStrategy& at(std::size_t stage) const;
  std::span<const Segment> segments() const { return segments_; }

  bool operator==(const MarkovStrategy&) const = default;

 private:
  std::size_t horizon_ = 0;
  std::vector<Segment> segments_;
};

// Law of the current state.
class StateDistribution {
 public:
  // Throws InvariantError unless nonnegative with mass 1 within 1e-10.
  explicit StateDistribution(std::vector<double> probs);

  static StateDistribution point_mass(std::size_t num_states,
                                      std::size_t state);
  static StateDistribution uniform(std::size_t num_states);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t s) const { return probs_[s]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  struct Unchecked {};
  StateDistribution(std::vector<double> probs, Unchecked)
      : probs_(std::move(probs)) {}
  friend StateDistribution advance_distribution(const StochasticGame&,
                                                const StateDistribution&,
                                                const StationaryStrategy&,
                                                const StationaryStrategy&);

  std::vector<double> probs_;
};

// Finite zero-sum stochastic game (states, actions1, actions2, g, q).
// Immutable once constructed; tensors are stored flat in row-major order:
// payoff[s][i][j] and transition[s][i][j][s'].
class StochasticGame {
 public:
  // Validates every invariant. Transition rows whose sum misses 1 by at most
  // 1e-9 are renormalized and reported through `warnings` when non-null;
  // larger deviations, negative or non-finite entries throw InvariantError
  // naming the offending (state, i, j).
  StochasticGame(std::string name, std::vector<std::string> states,
                 std::vector<std::string> actions1,
                 std::vector<std::string> actions2, std::vector<double> payoff,
                 std::vector<double> transition,
                 std::vector<std::string>* warnings = nullptr);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& actions1() const { return actions1_; }
  const std::vector<std::string>& actions2() const { return actions2_; }

  std::size_t num_states() const { return states_.size(); }
  std::size_t num_actions1() const { return actions1_.size(); }
  std::size_t num_actions2() const { return actions2_.size(); }

  double payoff(std::size_t s, std::size_t i, std::size_t j) const {
    return payoff_[(s * num_actions1() + i) * num_actions2() + j];
  }
  // Row-major |I| x |J| block of g at state s.
  std::span<const double> payoff_matrix(std::size_t s) const {
    const std::size_t block = num_actions1() * num_actions2();
    return {payoff_.data() + s * block, block};
  }
  // q(. | s, i, j).
  std::span<const double> next_state_law(std::size_t s, std::size_t i,
                                         std::size_t j) const {
    const std::size_t n = num_states();
    return {transition_.data() +
                ((s * num_actions1() + i) * num_actions2() + j) * n,
            n};
  }

  const std::vector<double>& payoff_data() const { return payoff_; }
  const std::vector<double>& transition_data() const { return transition_; }

  // max |g|.
  double payoff_bound() const { return payoff_bound_; }

  // Index of a state label; throws InputError when absent.
  std::size_t state_index(std::string_view label) const;

  bool operator==(const StochasticGame&) const = default;

 private:
  std::string name_;
  std::vector<std::string> states_;
  std::vector<std::string> actions1_;
  std::vector<std::string> actions2_;
  std::vector<double> payoff_;
  std::vector<double> transition_;
  double payoff_bound_ = 0.0;
};

// Parses the JSON game format. Throws ParseError (with line and column) on
// malformed text and InvariantError on model violations.
StochasticGame load_game(std::string_view text,
                         std::vector<std::string>* warnings = nullptr);
// Reads and parses a game file; a missing file is an InputError.
StochasticGame load_game_file(const std::string& path,
                              std::vector<std::string>* warnings = nullptr);
// Inverse of load_game: numbers are written in shortest round-trip form.
std::string serialize_game(const StochasticGame& game);

// Law of the next state when the current state has law d and players use
// (x, y).
StateDistribution advance_distribution(const StochasticGame& game,
                                       const StateDistribution& d,
                                       const StationaryStrategy& x,
                                       const StationaryStrategy& y);

// E[g] for one stage at state law d under (x, y).
double expected_stage_payoff(const StochasticGame& game,
                             const StateDistribution& d,
                             const StationaryStrategy& x,
                             const StationaryStrategy& y);

// Checks that strategies and distributions match the game's dimensions.
void check_compatible(const StochasticGame& game, const StationaryStrategy& x,
                      const StationaryStrategy& y);

}  // namespace stochgame

#endif  // STOCHGAME_GAME_HPP_
