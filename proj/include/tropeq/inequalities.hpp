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

#include <vector>

#include "tropeq/matrix.hpp"

namespace tropeq {

/**
 * Result of solving a x ≤ x for a square matrix a. Feasible exactly when
 * the trace condition Tr(a) ≤ unit holds; then every regular solution is
 * x = generator ⊗ u (generator = a*) for a parameter vector u, and the
 * family is complete. Infeasible results carry the certificate value.
 */
struct ConeSolution {
  bool feasible = false;
  Scalar tr_value;
  Matrix generator;  // a* when feasible, empty otherwise
};

ConeSolution solve_x_leq(const Semifield& sf, const Matrix& a);

/**
 * Result of the coupled inequalities a x ≤ y, b y ≤ x with a of shape
 * k x n and b of shape n x k. Feasible exactly when Tr(ab) ≤ unit
 * (equivalently Tr(ba) ≤ unit); then the complete solution family is
 *
 *   x = gxu u ⊕ gxv v,   y = gyu u ⊕ gyv v
 *
 * with gxu = (ba)*, gxv = b(ab)*, gyu = a(ba)*, gyv = (ab)*.
 */
struct PairSolution {
  bool feasible = false;
  Scalar tr_value;
  Matrix gxu, gxv, gyu, gyv;
};

PairSolution solve_pair_system(const Semifield& sf, const Matrix& a, const Matrix& b);

/**
 * The four solution blocks assembled into one (n+k)-order matrix
 * [[gxu, gxv], [gyu, gyv]]. Mathematically this equals the Kleene star of
 * the block matrix c = [[0, b], [a, 0]], which is what the test suite
 * computes as the independent cross-check: this function goes through the
 * per-block formulas, the check stars the assembled block matrix directly.
 * Throws StarDivergence when the trace condition fails.
 */
Matrix block_kleene(const Semifield& sf, const Matrix& a, const Matrix& b);

/** Builds the block matrix [[0, b], [a, 0]] of order n + k. */
Matrix pair_block_matrix(const Semifield& sf, const Matrix& a, const Matrix& b);

/**
 * Flags, per column of the stacked generator [[gxu, gxv], [gyu, gyv]],
 * whether that column alone produces a regular (fully finite) x and y.
 * Any selection of parameters that covers every row with finite entries
 * works; taking all parameters equal to the unit always does.
 */
std::vector<bool> regular_columns(const PairSolution& s);

}  // namespace tropeq
