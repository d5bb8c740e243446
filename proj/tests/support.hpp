/*
 * Copyright 2026 The tropeq authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "tropeq/matrix.hpp"
#include "tropeq/problem_io.hpp"
#include "tropeq/twosided.hpp"

namespace tq_test {

using namespace tropeq;

/** Shorthand matrix builder: whitespace rows, "." for the zero element. */
inline Matrix mat(const Semifield& sf, std::string_view text) {
  return parse_matrix_text(sf, text);
}

inline Vector vec(const Semifield& sf, const std::vector<std::string>& tokens) {
  std::vector<Scalar> entries;
  for (const std::string& token : tokens) entries.push_back(sf.parse(token));
  return col_vector(entries);
}

/**
 * Random matrix with integer max-plus entries drawn from [lo, hi] and ε with
 * probability eps_prob. No regularity guarantee.
 */
inline Matrix random_matrix(const Semifield& sf, std::mt19937_64& rng, std::size_t rows,
                            std::size_t cols, double eps_prob, int lo, int hi) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> value(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (coin(rng) >= eps_prob) m.at(i, j) = sf.num(value(rng));
    }
  }
  return m;
}

/** Forces one random finite entry into every all-ε row. */
inline void row_regularize(const Semifield& sf, std::mt19937_64& rng, Matrix& m, int lo,
                           int hi) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::uniform_int_distribution<std::size_t> column(0, m.cols() - 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool finite = false;
    for (std::size_t j = 0; j < m.cols(); ++j) finite = finite || m.at(i, j).is_finite();
    if (!finite) m.at(i, column(rng)) = sf.num(value(rng));
  }
}

inline Matrix random_row_regular(const Semifield& sf, std::mt19937_64& rng, std::size_t rows,
                                 std::size_t cols, double eps_prob, int lo, int hi) {
  Matrix m = random_matrix(sf, rng, rows, cols, eps_prob, lo, hi);
  row_regularize(sf, rng, m, lo, hi);
  return m;
}

/** Fully finite column vector with integer entries in [lo, hi]. */
inline Vector random_regular_vector(const Semifield& sf, std::mt19937_64& rng, std::size_t n,
                                    int lo, int hi) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < n; ++i) entries.push_back(sf.num(value(rng)));
  return col_vector(entries);
}

/** Uniformly random selection from a selection space. */
inline RowSelection random_selection(std::mt19937_64& rng, const SelectionSpace& space,
                                     RowSelection::Source source) {
  RowSelection sel;
  sel.source = source;
  for (const std::vector<std::size_t>& row : space.choices) {
    std::uniform_int_distribution<std::size_t> pick(0, row.size() - 1);
    sel.pick.push_back(row[pick(rng)]);
  }
  return sel;
}

struct PlantedInstance {
  Matrix a, b;
  Vector x, y;  // a known exact solution: A x = B y
};

/**
 * Feasible-by-construction max-plus instance. Draw a target vector c and
 * solution vectors x, y; every row of A gets one entry that attains c_i at
 * its chosen column and optional extra entries dominated by the target, so
 * A x = c holds exactly (same for B with y). Entries stay within small
 * integer magnitudes.
 */
inline PlantedInstance planted_instance(const Semifield& sf, std::mt19937_64& rng,
                                        std::size_t m, std::size_t n, std::size_t k) {
  std::uniform_int_distribution<int> solution_entry(-1, 1);
  std::uniform_int_distribution<int> target_entry(-2, 2);
  std::uniform_int_distribution<int> slack(1, 3);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  PlantedInstance out;
  std::vector<int> x(n), y(k), c(m);
  for (std::size_t j = 0; j < n; ++j) x[j] = solution_entry(rng);
  for (std::size_t j = 0; j < k; ++j) y[j] = solution_entry(rng);
  for (std::size_t i = 0; i < m; ++i) c[i] = target_entry(rng);

  auto fill_side = [&](std::size_t cols, const std::vector<int>& sol) {
    Matrix side(m, cols);
    for (std::size_t i = 0; i < m; ++i) {
      std::uniform_int_distribution<std::size_t> column(0, cols - 1);
      std::size_t attain = column(rng);
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == attain) {
          side.at(i, j) = sf.num(c[i] - sol[j]);  // attains the target exactly
        } else if (coin(rng) < 0.5) {
          side.at(i, j) = sf.num(c[i] - sol[j] - slack(rng));  // strictly dominated
        }
      }
    }
    return side;
  };

  out.a = fill_side(n, x);
  out.b = fill_side(k, y);
  std::vector<Scalar> xs, ys;
  for (int v : x) xs.push_back(sf.num(v));
  for (int v : y) ys.push_back(sf.num(v));
  out.x = col_vector(xs);
  out.y = col_vector(ys);
  return out;
}

/**
 * Random coupled-inequality instance (a: k x n, b: n x k) that satisfies the
 * trace condition, found by rejection sampling.
 */
inline std::pair<Matrix, Matrix> feasible_pair_system(const Semifield& sf,
                                                      std::mt19937_64& rng, std::size_t n,
                                                      std::size_t k) {
  for (;;) {
    Matrix a = random_matrix(sf, rng, k, n, 0.3, -3, 1);
    Matrix b = random_matrix(sf, rng, n, k, 0.3, -3, 1);
    TraceCertificate cert = trace_fn_certificate(sf, mat_mul(sf, a, b));
    if (cert.feasible) return {a, b};
  }
}

}  // namespace tq_test
