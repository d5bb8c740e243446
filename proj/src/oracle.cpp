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

#include "tropeq/oracle.hpp"

#include <cstdlib>
#include <string>

namespace tropeq {

namespace {

void require_column(const Matrix& v, std::size_t rows, const char* what) {
  if (v.cols() != 1 || v.rows() != rows) {
    throw ShapeError(std::string(what) + ": expected a column vector of size " +
                     std::to_string(rows) + ", got " + std::to_string(v.rows()) + "x" +
                     std::to_string(v.cols()));
  }
}

void require_exact_integer_max_plus(const Semifield& sf, const Matrix& a, const Matrix& b) {
  if (sf.kind() != SemifieldKind::MaxPlus) {
    throw DomainError("grid oracle supports the max-plus semifield only");
  }
  if (!sf.exact()) throw DomainError("grid oracle requires exact comparison mode");
  for (const Matrix* m : {&a, &b}) {
    for (std::size_t i = 0; i < m->rows(); ++i) {
      for (std::size_t j = 0; j < m->cols(); ++j) {
        const Scalar& s = m->at(i, j);
        if (s.is_finite() && !s.value().is_integer()) {
          throw DomainError("grid oracle requires integer entries, found " + s.value().str());
        }
      }
    }
  }
}

/** Sweeps coordinates x[from..n) over the grid, recursing; x[0] stays at the unit. */
void sweep(const Semifield& sf, const Matrix& a, const Matrix& b, long bound, Vector& x,
           std::size_t from, std::uint64_t& candidates,
           std::vector<std::pair<Vector, Vector>>& witnesses) {
  const std::size_t n = a.cols();
  if (from == n) {
    ++candidates;
    Vector c = mat_mul(sf, a, x);
    Vector y = principal_y(sf, b, c);
    // An ε coordinate of the principal y can only come from an all-ε column
    // of b (c is fully finite here). Such a coordinate is unconstrained, so
    // lift it to the unit: b y is unchanged and the witness stays regular.
    for (std::size_t j = 0; j < y.rows(); ++j) {
      if (y.at(j, 0).is_eps()) y.at(j, 0) = sf.one();
    }
    if (mat_mul(sf, b, y) == c) witnesses.emplace_back(x, y);
    return;
  }
  for (long value = -bound; value <= bound; ++value) {
    x.at(from, 0) = sf.num(value);
    sweep(sf, a, b, bound, x, from + 1, candidates, witnesses);
  }
}

}  // namespace

VerifyResult verify_solution(const Semifield& sf, const Matrix& a, const Matrix& b,
                             const Vector& x, const Vector& y) {
  if (a.rows() != b.rows()) throw ShapeError("verify_solution: row counts differ");
  require_column(x, a.cols(), "verify_solution x");
  require_column(y, b.cols(), "verify_solution y");

  VerifyResult out;
  out.lhs = mat_mul(sf, a, x);
  out.rhs = mat_mul(sf, b, y);
  out.regular_x = is_regular(x);
  out.regular_y = is_regular(y);
  out.equal = true;
  for (std::size_t i = 0; i < out.lhs.rows(); ++i) {
    if (!sf.eq(out.lhs.at(i, 0), out.rhs.at(i, 0))) {
      out.equal = false;
      out.mismatch_row = static_cast<std::ptrdiff_t>(i);
      break;
    }
  }
  return out;
}

Vector principal_y(const Semifield& sf, const Matrix& b, const Vector& c) {
  require_column(c, b.rows(), "principal_y c");
  Vector y(b.cols(), 1);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    Scalar best;
    bool seen = false;
    for (std::size_t i = 0; i < b.rows(); ++i) {
      if (b.at(i, j).is_eps()) continue;
      Scalar candidate = sf.mul(sf.inv(b.at(i, j)), c.at(i, 0));
      best = seen ? sf.meet(best, candidate) : candidate;
      seen = true;
    }
    y.at(j, 0) = seen ? best : Scalar::eps();
  }
  return y;
}

Vector principal_parameters(const Semifield& sf, const Matrix& g, const Vector& z) {
  return principal_y(sf, g, z);
}

bool in_family(const Semifield& sf, const Matrix& g, const Vector& z) {
  require_column(z, g.rows(), "in_family z");
  Vector w = principal_parameters(sf, g, z);
  return mat_mul(sf, g, w) == z;
}

bool membership_test(const Semifield& sf, const SolutionBasis& basis, const Vector& x,
                     const Vector& y) {
  if (!sf.exact()) throw DomainError("membership test requires exact comparison mode");
  require_column(x, basis.gxu.rows(), "membership_test x");
  require_column(y, basis.gyv.rows(), "membership_test y");
  return in_family(sf, basis.stacked(), vstack(x, y));
}

long default_grid_bound(const Matrix& a, const Matrix& b) {
  long largest = 0;
  for (const Matrix* m : {&a, &b}) {
    for (std::size_t i = 0; i < m->rows(); ++i) {
      for (std::size_t j = 0; j < m->cols(); ++j) {
        const Scalar& s = m->at(i, j);
        if (s.is_finite()) {
          std::int64_t num = s.value().num() < 0 ? -s.value().num() : s.value().num();
          std::int64_t den = s.value().den();
          long mag = static_cast<long>((num + den - 1) / den);  // ceil(|entry|)
          if (mag > largest) largest = mag;
        }
      }
    }
  }
  return 2 * largest + 2;
}

GridResult grid_oracle(const Semifield& sf, const Matrix& a, const Matrix& b, long bound,
                       Exec exec) {
  if (a.rows() == 0 || a.cols() == 0 || b.cols() == 0 || a.rows() != b.rows()) {
    throw ShapeError("grid oracle: matrices must be non-empty with equal row counts");
  }
  require_exact_integer_max_plus(sf, a, b);
  if (bound < 0) throw DomainError("grid oracle bound must be non-negative");
  (void)exec;  // without OpenMP both policies run the same loop

  const std::size_t n = a.cols();
  GridResult out;

  if (n == 1) {
    Vector x(1, 1);
    x.at(0, 0) = sf.one();
    sweep(sf, a, b, bound, x, 1, out.candidates, out.witnesses);
    out.found = !out.witnesses.empty();
    return out;
  }

  // One slice of the sweep per value of the first free coordinate; slices
  // are merged in coordinate order, so the result is the same for both
  // execution policies.
  const long width = 2 * bound + 1;
  std::vector<std::vector<std::pair<Vector, Vector>>> found(width);
  std::vector<std::uint64_t> candidates(width, 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel)
#endif
  for (long slice = 0; slice < width; ++slice) {
    Vector x(n, 1);
    x.at(0, 0) = sf.one();
    x.at(1, 0) = sf.num(slice - bound);
    sweep(sf, a, b, bound, x, 2, candidates[slice], found[slice]);
  }

  for (long slice = 0; slice < width; ++slice) {
    out.candidates += candidates[slice];
    out.witnesses.insert(out.witnesses.end(), found[slice].begin(), found[slice].end());
  }
  out.found = !out.witnesses.empty();
  return out;
}

}  // namespace tropeq
