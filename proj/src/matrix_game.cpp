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

#include "stochgame/matrix_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "stochgame/errors.hpp"

namespace stochgame {
namespace {

constexpr double kPivotEps = 1e-12;
constexpr std::size_t kMaxPivots = 100000;

void check_input(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw InputError("matrix game needs at least one row and one column");
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!std::isfinite(m(r, c))) {
        throw InputError("non-finite matrix entry at (" + std::to_string(r) +
                         ", " + std::to_string(c) + ")");
      }
    }
  }
}

struct PureCheck {
  bool saddle = false;
  double value = 0.0;
  std::size_t row = 0;
  std::size_t col = 0;
};

// Pure saddle point: max_i min_j M == min_j max_i M.
PureCheck find_saddle(const Matrix& m) {
  PureCheck out;
  double maximin = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double row_min = m(r, 0);
    for (std::size_t c = 1; c < m.cols(); ++c) row_min = std::min(row_min, m(r, c));
    if (row_min > maximin) {
      maximin = row_min;
      out.row = r;
    }
  }
  double minimax = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double col_max = m(0, c);
    for (std::size_t r = 1; r < m.rows(); ++r) col_max = std::max(col_max, m(r, c));
    if (col_max < minimax) {
      minimax = col_max;
      out.col = c;
    }
  }
  out.saddle = (maximin == minimax);
  out.value = maximin;
  return out;
}

struct LpOutcome {
  double objective = 0.0;        // sum of z at the optimum
  std::vector<double> primal;    // z, one per column
  std::vector<double> dual;      // u, one per row
};

// max sum(z) s.t. A z <= 1, z >= 0, for A with all entries in [1, 2].
// Tableau columns: z (cols), slacks (rows), rhs. The last tableau row holds
// reduced costs and minus the objective.
LpOutcome simplex(const Matrix& a, bool want_strategies) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t width = cols + rows + 1;
  const std::size_t rhs = width - 1;
  std::vector<double> t((rows + 1) * width, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& {
    return t[r * width + c];
  };
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) at(r, c) = a(r, c);
    at(r, cols + r) = 1.0;
    at(r, rhs) = 1.0;
    basis[r] = cols + r;
  }
  for (std::size_t c = 0; c < cols; ++c) at(rows, c) = 1.0;

  for (std::size_t pivots = 0;; ++pivots) {
    if (pivots == kMaxPivots) throw Error("simplex pivot limit reached");
    // Bland: lowest-index improving column.
    std::size_t enter = width;
    for (std::size_t c = 0; c < rhs; ++c) {
      if (at(rows, c) > kPivotEps) {
        enter = c;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    double best_ratio = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
      const double coef = at(r, enter);
      if (coef <= kPivotEps) continue;
      const double ratio = at(r, rhs) / coef;
      if (leave == rows) {
        leave = r;
        best_ratio = ratio;
        continue;
      }
      const double slack = kPivotEps * (1.0 + std::abs(best_ratio));
      if (ratio < best_ratio - slack ||
          (ratio <= best_ratio + slack && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    // Bounded by construction: every column has a positive coefficient.
    if (leave == rows) throw Error("simplex found an unbounded direction");

    const double pivot = at(leave, enter);
    for (std::size_t c = 0; c < width; ++c) at(leave, c) /= pivot;
    at(leave, enter) = 1.0;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave) continue;
      const double factor = at(r, enter);
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c < width; ++c) at(r, c) -= factor * at(leave, c);
      at(r, enter) = 0.0;
    }
    basis[leave] = enter;
  }

  LpOutcome out;
  out.objective = -at(rows, rhs);
  if (want_strategies) {
    out.primal.assign(cols, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (basis[r] < cols) out.primal[basis[r]] = at(r, rhs);
    }
    out.dual.resize(rows);
    for (std::size_t r = 0; r < rows; ++r) out.dual[r] = -at(rows, cols + r);
  }
  return out;
}

MixedAction to_mixed(std::vector<double> weights) {
  double total = 0.0;
  for (double& w : weights) {
    w = std::max(w, 0.0);
    total += w;
  }
  for (double& w : weights) w /= total;
  return MixedAction(std::move(weights));
}

struct Solved {
  double value = 0.0;
  std::vector<double> row_weights;
  std::vector<double> col_weights;
  bool pure = false;
  std::size_t pure_row = 0;
  std::size_t pure_col = 0;
};

Solved solve_core(const Matrix& m, bool want_strategies) {
  check_input(m);
  Solved out;
  const PureCheck saddle = find_saddle(m);
  if (saddle.saddle) {
    out.value = saddle.value;
    out.pure = true;
    out.pure_row = saddle.row;
    out.pure_col = saddle.col;
    return out;
  }
  // No saddle point, so the entries are not all equal.
  const auto [lo_it, hi_it] = std::minmax_element(m.data().begin(), m.data().end());
  const double lo = *lo_it;
  const double range = *hi_it - lo;
  Matrix shifted(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      shifted(r, c) = (m(r, c) - lo) / range + 1.0;
    }
  }
  LpOutcome lp = simplex(shifted, want_strategies);
  const double shifted_value = 1.0 / lp.objective;
  out.value = lo + range * (shifted_value - 1.0);
  if (want_strategies) {
    out.row_weights = std::move(lp.dual);
    out.col_weights = std::move(lp.primal);
  }
  return out;
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

double Matrix::magnitude() const {
  double out = 0.0;
  for (double v : data_) out = std::max(out, std::abs(v));
  return out;
}

double row_guarantee(const Matrix& m, const MixedAction& x) {
  if (x.size() != m.rows()) throw InputError("row strategy size does not match the matrix");
  double out = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) s += x[r] * m(r, c);
    out = std::min(out, s);
  }
  return out;
}

double col_guarantee(const Matrix& m, const MixedAction& y) {
  if (y.size() != m.cols()) throw InputError("column strategy size does not match the matrix");
  double out = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * y[c];
    out = std::max(out, s);
  }
  return out;
}

MatrixGameSolution solve_matrix_game(const Matrix& m) {
  Solved core = solve_core(m, true);
  MatrixGameSolution out;
  out.value = core.value;
  if (core.pure) {
    out.row_strategy = MixedAction::pure(m.rows(), core.pure_row);
    out.col_strategy = MixedAction::pure(m.cols(), core.pure_col);
  } else {
    out.row_strategy = to_mixed(std::move(core.row_weights));
    out.col_strategy = to_mixed(std::move(core.col_weights));
  }
  out.certificate_gap =
      std::max({0.0, out.value - row_guarantee(m, out.row_strategy),
                col_guarantee(m, out.col_strategy) - out.value});
  if (out.certificate_gap > 1e-9 * std::max(1.0, m.magnitude())) {
    throw Error("matrix game certificate gap too large: " +
                std::to_string(out.certificate_gap));
  }
  return out;
}

double value_only(const Matrix& m) { return solve_core(m, false).value; }

}  // namespace stochgame
