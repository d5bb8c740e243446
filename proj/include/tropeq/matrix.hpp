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

#include <cstddef>
#include <vector>

#include "tropeq/semifield.hpp"

namespace tropeq {

/**
 * Dense matrix over semifield scalars, row-major. A fresh matrix is filled
 * with ε (the zero matrix). Equality is exact and entrywise, ε included.
 */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), d_(rows * cols) {}

  static Matrix identity(const Semifield& sf, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = sf.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return d_.empty(); }

  Scalar& at(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> d_;
};

/** Column vectors are one-column matrices. */
using Vector = Matrix;

/** Builds a column vector from scalars. */
Vector col_vector(const std::vector<Scalar>& entries);

/** Entrywise ⊕. Shapes must match. */
Matrix mat_add(const Semifield& sf, const Matrix& a, const Matrix& b);

/** Semifield matrix product: (ab)_ij = ⊕_k a_ik ⊗ b_kj. Inner sizes must match. */
Matrix mat_mul(const Semifield& sf, const Matrix& a, const Matrix& b);

/** Entrywise x ⊗ a_ij. */
Matrix scalar_mul(const Semifield& sf, const Scalar& x, const Matrix& a);

/**
 * Conjugate transpose: (a⁻)_ij = inverse of a_ji for finite entries, ε
 * otherwise. An all-ε matrix has no conjugate (domain error).
 */
Matrix conjugate(const Semifield& sf, const Matrix& a);

/** ⊕ over the diagonal of a square matrix. */
Scalar trace(const Semifield& sf, const Matrix& a);

/**
 * Trace function Tr(a) = ⊕_{p=1..n} trace(a^p) for a square matrix of order
 * n, with powers computed iteratively. Full value, no early exit.
 */
Scalar trace_fn(const Semifield& sf, const Matrix& a);

/**
 * Feasibility certificate for the trace condition Tr(a) ≤ unit. Accumulates
 * trace(a^p) in power order and stops at the first partial value that
 * exceeds the unit. When feasible the value equals trace_fn(a); when not,
 * it is the first partial accumulation that crossed the unit (the value
 * checks against two-sided solvability reports for infeasible selections).
 */
struct TraceCertificate {
  Scalar value;
  bool feasible;
};
TraceCertificate trace_fn_certificate(const Semifield& sf, const Matrix& a);

/** Thrown when a Kleene star is requested for a matrix whose powers diverge. */
class StarDivergence : public Error {
 public:
  StarDivergence(const Semifield& sf, const Scalar& tr)
      : Error("kleene star diverges: trace function value " + sf.format(tr) +
              " exceeds the unit"),
        tr_(tr) {}
  const Scalar& tr() const { return tr_; }

 private:
  Scalar tr_;
};

/**
 * Kleene star a* = I ⊕ a ⊕ a² ⊕ ... ⊕ a^{n-1}, defined when Tr(a) ≤ unit
 * (otherwise throws StarDivergence). Computed by repeatedly squaring
 * (I ⊕ a); the overshoot past power n-1 is harmless under the trace
 * condition because longer walks never beat the accumulated shorter ones.
 */
Matrix kleene_star(const Semifield& sf, const Matrix& a);

/** True when every row has at least one finite entry. */
bool is_row_regular(const Matrix& a);

/** True when every row has exactly one finite entry. */
bool is_row_monomial(const Matrix& a);

/** True when every entry is finite (for vectors: a regular vector). */
bool is_regular(const Matrix& a);

/** Entrywise ⊕-order comparison (mode-aware). */
bool mat_leq(const Semifield& sf, const Matrix& a, const Matrix& b);

/** Entrywise equality under the semifield's comparison mode. */
bool mat_eq(const Semifield& sf, const Matrix& a, const Matrix& b);

/** Horizontal concatenation [a | b]; row counts must match. */
Matrix hstack(const Matrix& a, const Matrix& b);

/** Vertical concatenation [a ; b]; column counts must match. */
Matrix vstack(const Matrix& a, const Matrix& b);

/** Copies the selected columns, in the given order. */
Matrix take_columns(const Matrix& a, const std::vector<std::size_t>& cols);

/** Copies the leading rows [0, count). */
Matrix take_rows(const Matrix& a, std::size_t count);

}  // namespace tropeq
