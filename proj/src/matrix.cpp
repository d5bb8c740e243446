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

#include "tropeq/matrix.hpp"

#include <string>

namespace tropeq {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()) + " differ");
  }
}

void require_square(const Matrix& a, const char* op) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw ShapeError(std::string(op) + ": requires a non-empty square matrix, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

}  // namespace

Vector col_vector(const std::vector<Scalar>& entries) {
  Vector v(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) v.at(i, 0) = entries[i];
  return v;
}

Matrix mat_add(const Semifield& sf, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_add");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = sf.add(a.at(i, j), b.at(i, j));
  return out;
}

Matrix mat_mul(const Semifield& sf, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("mat_mul: inner sizes differ, " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_eps()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj.is_eps()) continue;
        out.at(i, j) = sf.add(out.at(i, j), sf.mul(aik, bkj));
      }
    }
  }
  return out;
}

Matrix scalar_mul(const Semifield& sf, const Scalar& x, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = sf.mul(x, a.at(i, j));
  return out;
}

Matrix conjugate(const Semifield& sf, const Matrix& a) {
  bool any_finite = false;
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_finite()) {
        out.at(j, i) = sf.inv(a.at(i, j));
        any_finite = true;
      }
    }
  }
  if (!any_finite) throw DomainError("conjugate of the zero matrix is undefined");
  return out;
}

Scalar trace(const Semifield& sf, const Matrix& a) {
  require_square(a, "trace");
  Scalar t = sf.zero();
  for (std::size_t i = 0; i < a.rows(); ++i) t = sf.add(t, a.at(i, i));
  return t;
}

Scalar trace_fn(const Semifield& sf, const Matrix& a) {
  require_square(a, "trace_fn");
  Scalar acc = trace(sf, a);
  Matrix power = a;
  for (std::size_t p = 2; p <= a.rows(); ++p) {
    power = mat_mul(sf, power, a);
    acc = sf.add(acc, trace(sf, power));
  }
  return acc;
}

TraceCertificate trace_fn_certificate(const Semifield& sf, const Matrix& a) {
  require_square(a, "trace_fn_certificate");
  Scalar acc = trace(sf, a);
  if (!sf.leq(acc, sf.one())) return {acc, false};
  Matrix power = a;
  for (std::size_t p = 2; p <= a.rows(); ++p) {
    power = mat_mul(sf, power, a);
    acc = sf.add(acc, trace(sf, power));
    if (!sf.leq(acc, sf.one())) return {acc, false};
  }
  return {acc, true};
}

Matrix kleene_star(const Semifield& sf, const Matrix& a) {
  require_square(a, "kleene_star");
  TraceCertificate cert = trace_fn_certificate(sf, a);
  if (!cert.feasible) throw StarDivergence(sf, cert.value);
  Matrix p = mat_add(sf, Matrix::identity(sf, a.rows()), a);
  for (std::size_t reach = 1; reach + 1 < a.rows(); reach *= 2) p = mat_mul(sf, p, p);
  return p;
}

bool is_row_regular(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool finite = false;
    for (std::size_t j = 0; j < a.cols() && !finite; ++j) finite = a.at(i, j).is_finite();
    if (!finite) return false;
  }
  return true;
}

bool is_row_monomial(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::size_t finite = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) finite += a.at(i, j).is_finite() ? 1 : 0;
    if (finite != 1) return false;
  }
  return true;
}

bool is_regular(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j).is_eps()) return false;
  return true;
}

bool mat_leq(const Semifield& sf, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_leq");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!sf.leq(a.at(i, j), b.at(i, j))) return false;
  return true;
}

bool mat_eq(const Semifield& sf, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_eq");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!sf.eq(a.at(i, j), b.at(i, j))) return false;
  return true;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw ShapeError("hstack: row counts differ, " + std::to_string(a.rows()) + " vs " +
                     std::to_string(b.rows()));
  }
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) {
    throw ShapeError("vstack: column counts differ, " + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.cols()));
  }
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

Matrix take_columns(const Matrix& a, const std::vector<std::size_t>& cols) {
  Matrix out(a.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= a.cols()) throw ShapeError("take_columns: index out of range");
    for (std::size_t i = 0; i < a.rows(); ++i) out.at(i, j) = a.at(i, cols[j]);
  }
  return out;
}

Matrix take_rows(const Matrix& a, std::size_t count) {
  if (count > a.rows()) throw ShapeError("take_rows: count out of range");
  Matrix out(count, a.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  return out;
}

}  // namespace tropeq
