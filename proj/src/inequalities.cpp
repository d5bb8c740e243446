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

#include "tropeq/inequalities.hpp"

#include <string>

namespace tropeq {

namespace {

void require_pair_shapes(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0 || a.cols() == 0) throw ShapeError("pair system: empty matrix");
  if (a.rows() != b.cols() || a.cols() != b.rows()) {
    throw ShapeError("pair system: need a of shape k x n and b of shape n x k, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

ConeSolution solve_x_leq(const Semifield& sf, const Matrix& a) {
  TraceCertificate cert = trace_fn_certificate(sf, a);
  ConeSolution out;
  out.feasible = cert.feasible;
  out.tr_value = cert.value;
  if (cert.feasible) out.generator = kleene_star(sf, a);
  return out;
}

PairSolution solve_pair_system(const Semifield& sf, const Matrix& a, const Matrix& b) {
  require_pair_shapes(a, b);
  Matrix ab = mat_mul(sf, a, b);  // k x k
  Matrix ba = mat_mul(sf, b, a);  // n x n
  TraceCertificate cert = trace_fn_certificate(sf, ab);

  PairSolution out;
  out.feasible = cert.feasible;
  out.tr_value = cert.value;
  if (!cert.feasible) return out;

  out.gyv = kleene_star(sf, ab);
  out.gxu = kleene_star(sf, ba);
  out.gxv = mat_mul(sf, b, out.gyv);
  out.gyu = mat_mul(sf, a, out.gxu);
  return out;
}

Matrix pair_block_matrix(const Semifield& sf, const Matrix& a, const Matrix& b) {
  require_pair_shapes(a, b);
  (void)sf;
  const std::size_t n = a.cols();
  const std::size_t k = a.rows();
  Matrix c(n + k, n + k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) c.at(i, n + j) = b.at(i, j);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) c.at(n + i, j) = a.at(i, j);
  return c;
}

Matrix block_kleene(const Semifield& sf, const Matrix& a, const Matrix& b) {
  PairSolution s = solve_pair_system(sf, a, b);
  if (!s.feasible) throw StarDivergence(sf, s.tr_value);
  return vstack(hstack(s.gxu, s.gxv), hstack(s.gyu, s.gyv));
}

std::vector<bool> regular_columns(const PairSolution& s) {
  Matrix stacked = vstack(hstack(s.gxu, s.gxv), hstack(s.gyu, s.gyv));
  std::vector<bool> out(stacked.cols(), true);
  for (std::size_t j = 0; j < stacked.cols(); ++j)
    for (std::size_t i = 0; i < stacked.rows(); ++i)
      if (stacked.at(i, j).is_eps()) {
        out[j] = false;
        break;
      }
  return out;
}

}  // namespace tropeq
