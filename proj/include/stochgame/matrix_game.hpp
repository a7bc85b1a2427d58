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

#ifndef STOCHGAME_MATRIX_GAME_HPP_
#define STOCHGAME_MATRIX_GAME_HPP_

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "stochgame/game.hpp"

namespace stochgame {

// Dense row-major payoff matrix for the row (maximizing) player.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<double>& data() const { return data_; }

  // Reuses storage; contents are unspecified afterwards.
  void resize(std::size_t rows, std::size_t cols) {
    rows_ = rows;
    cols_ = cols;
    data_.resize(rows * cols);
  }

  // max |entry|.
  double magnitude() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct MatrixGameSolution {
  double value = 0.0;
  MixedAction row_strategy;
  MixedAction col_strategy;
  // Largest violation of the two guarantee inequalities by the returned
  // strategies, recomputed from the strategies themselves.
  double certificate_gap = 0.0;
};

// Value and one optimal mixed action per player. Pure saddle points are
// returned directly; otherwise the game is solved as a linear program by a
// dense tableau simplex with Bland's rule. The result is a deterministic
// function of the input bits. Throws InputError on empty or non-finite input.
MatrixGameSolution solve_matrix_game(const Matrix& m);

// Same value as solve_matrix_game (bit-identical), without strategies.
double value_only(const Matrix& m);

// min_j x^T M e_j.
double row_guarantee(const Matrix& m, const MixedAction& x);
// max_i e_i^T M y.
double col_guarantee(const Matrix& m, const MixedAction& y);

}  // namespace stochgame

#endif  // STOCHGAME_MATRIX_GAME_HPP_
