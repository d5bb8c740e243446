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

#include <cstdint>
#include <utility>
#include <vector>

#include "tropeq/twosided.hpp"

namespace tropeq {

/** Outcome of substituting a candidate pair into A x = B y. */
struct VerifyResult {
  bool equal = false;
  std::ptrdiff_t mismatch_row = -1;  // first differing row (0-based), -1 when equal
  Vector lhs, rhs;                   // A x and B y
  bool regular_x = false;
  bool regular_y = false;
};

/** Substitutes (x, y) and compares A x with B y under the comparison mode. */
VerifyResult verify_solution(const Semifield& sf, const Matrix& a, const Matrix& b,
                             const Vector& x, const Vector& y);

/**
 * Residuation: the greatest y with B y ≤ c, computed per coordinate as the
 * meet of inv(B[i][j]) ⊗ c[i] over the finite entries of column j (ε when
 * the column has none). B y = c is solvable exactly when this principal y
 * attains equality.
 */
Vector principal_y(const Semifield& sf, const Matrix& b, const Vector& c);

/** Residuation against an arbitrary generator matrix: greatest w with G w ≤ z. */
Vector principal_parameters(const Semifield& sf, const Matrix& g, const Vector& z);

/** True when z is exactly reproduced by re-expanding its principal parameters. */
bool in_family(const Semifield& sf, const Matrix& g, const Vector& z);

/**
 * True when (x, y) belongs to the basis family, decided by residuation
 * against the stacked generator. Exact mode only.
 */
bool membership_test(const Semifield& sf, const SolutionBasis& basis, const Vector& x,
                     const Vector& y);

struct GridResult {
  bool found = false;
  std::vector<std::pair<Vector, Vector>> witnesses;  // lexicographic x order
  std::uint64_t candidates = 0;
};

/**
 * Brute-force existence oracle for max-plus problems with integer entries
 * (exact mode only): sweeps every integer x with x₁ = unit and the other
 * coordinates in [-bound, bound], computes c = A x, takes the principal y
 * (with coordinates left unconstrained by an all-ε column of B lifted to
 * the unit so the witness stays regular), and records (x, y) when B y = c.
 * Independent of the solver's algebra — it never looks at selections or
 * Kleene stars.
 */
GridResult grid_oracle(const Semifield& sf, const Matrix& a, const Matrix& b, long bound,
                       Exec exec = Exec::Serial);

/** Default sweep bound: 2 · (largest |finite entry| of A and B) + 2. */
long default_grid_bound(const Matrix& a, const Matrix& b);

}  // namespace tropeq
