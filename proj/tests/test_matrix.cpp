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

#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tropeq/matrix.hpp"

using namespace tropeq;
using tq_test::mat;

namespace {

/** Literal power sum I ⊕ a ⊕ a² ⊕ ... ⊕ a^{n-1}: the star reference. */
Matrix naive_star(const Semifield& sf, const Matrix& a) {
  Matrix acc = Matrix::identity(sf, a.rows());
  Matrix power = Matrix::identity(sf, a.rows());
  for (std::size_t p = 1; p + 1 <= a.rows(); ++p) {
    power = mat_mul(sf, power, a);
    acc = mat_add(sf, acc, power);
  }
  return acc;
}

}  // namespace

TEST_CASE("matrix basics: construction, identity, access") {
  Semifield sf = Semifield::max_plus();
  Matrix m(2, 3);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(m.at(i, j).is_eps());
  }
  Matrix id = Matrix::identity(sf, 3);
  CHECK(id.at(0, 0) == sf.one());
  CHECK(id.at(0, 1) == sf.zero());
  CHECK(Matrix().empty());
  CHECK(mat(sf, "1 2\n3 4") == mat(sf, "1 2\n3 4"));
  CHECK(mat(sf, "1 2\n3 4") != mat(sf, "1 2\n3 ."));
}

TEST_CASE("stacking and slicing helpers") {
  Semifield sf = Semifield::max_plus();
  Matrix a = mat(sf, "1 2\n3 4");
  Matrix b = mat(sf, "5\n6");
  Matrix h = hstack(a, b);
  CHECK(h == mat(sf, "1 2 5\n3 4 6"));
  Matrix v = vstack(a, mat(sf, "7 8"));
  CHECK(v == mat(sf, "1 2\n3 4\n7 8"));
  CHECK(take_columns(h, {2, 0}) == mat(sf, "5 1\n6 3"));
  CHECK(take_rows(v, 2) == a);
  CHECK_THROWS_AS(hstack(a, mat(sf, "1")), ShapeError);
  CHECK_THROWS_AS(vstack(a, mat(sf, "1\n2")), ShapeError);
}

TEST_CASE("addition and multiplication on hand-checked values") {
  Semifield sf = Semifield::max_plus();
  Matrix a = mat(sf, "1 .\n. 2");
  Matrix b = mat(sf, "0 3\n1 .");
  CHECK(mat_add(sf, a, b) == mat(sf, "1 3\n1 2"));
  // (ab)_11 = max(1+0, ε) = 1; (ab)_12 = max(1+3, ε) = 4; row 2: (3, ε).
  CHECK(mat_mul(sf, a, b) == mat(sf, "1 4\n3 ."));
  CHECK(scalar_mul(sf, sf.num(2), a) == mat(sf, "3 .\n. 4"));
  CHECK_THROWS_AS(mat_add(sf, a, mat(sf, "1")), ShapeError);
  CHECK_THROWS_AS(mat_mul(sf, a, mat(sf, "1 2 3")), ShapeError);

  Semifield mt = Semifield::min_times();
  Matrix c = mat(mt, "2 .\n. 1/2");
  Matrix d = mat(mt, "4\n1");
  CHECK(mat_mul(mt, c, d) == mat(mt, "8\n1/2"));
  CHECK(mat_add(mt, d, mat(mt, "3\n2")) == mat(mt, "3\n1"));
}

TEST_CASE("identity is neutral for the product") {
  std::mt19937_64 rng(23);
  Semifield sf = Semifield::max_plus();
  for (int i = 0; i < 200; ++i) {
    Matrix m = tq_test::random_matrix(sf, rng, 3, 4, 0.3, -5, 5);
    CHECK(mat_mul(sf, Matrix::identity(sf, 3), m) == m);
    CHECK(mat_mul(sf, m, Matrix::identity(sf, 4)) == m);
  }
}

TEST_CASE("conjugate transposes and inverts entrywise") {
  Semifield sf = Semifield::max_plus();
  Matrix b1 = mat(sf, ". 1\n3 .\n3 .");
  CHECK(conjugate(sf, b1) == mat(sf, ". -3 -3\n-1 . ."));
  CHECK_THROWS_AS(conjugate(sf, mat(sf, ". .\n. .")), DomainError);

  std::mt19937_64 rng(29);
  for (int i = 0; i < 500; ++i) {
    Matrix m = tq_test::random_row_regular(sf, rng, 3, 3, 0.4, -5, 5);
    CHECK(conjugate(sf, conjugate(sf, m)) == m);
  }
}

TEST_CASE("worked 3x2 system: sparsified factors and their products") {
  Semifield sf = Semifield::max_plus();
  Matrix a = mat(sf, "3 . 0\n1 1 0\n. 1 2");
  Matrix b = mat(sf, "1 1\n3 2\n3 1");
  // Row-monomial sparsifications: keep diagonal of A, and column 2,1,1 of B.
  Matrix a1 = mat(sf, "3 . .\n. 1 .\n. . 2");
  Matrix b1 = mat(sf, ". 1\n3 .\n3 .");

  Matrix a1c = conjugate(sf, a1);
  Matrix b1c = conjugate(sf, b1);
  CHECK(a1c == mat(sf, "-3 . .\n. -1 .\n. . -2"));
  CHECK(b1c == mat(sf, ". -3 -3\n-1 . ."));

  CHECK(mat_mul(sf, a1c, b) == mat(sf, "-2 -2\n2 1\n1 -1"));
  CHECK(mat_mul(sf, b1c, a) == mat(sf, "-2 -2 -1\n2 . -1"));
  CHECK(mat_mul(sf, a, a1c) == mat(sf, "0 . -2\n-2 0 -2\n. 0 0"));
  CHECK(mat_mul(sf, b, b1c) == mat(sf, "0 -2 -2\n1 0 0\n0 0 0"));

  Matrix aabb = mat_mul(sf, mat_mul(sf, a, a1c), mat_mul(sf, b, b1c));
  CHECK(aabb == mat(sf, "0 -2 -2\n1 0 0\n1 0 0"));
  CHECK(trace_fn(sf, aabb) == sf.one());

  Matrix inner_x = mat_mul(sf, mat_mul(sf, a1c, b), mat_mul(sf, b1c, a));
  CHECK(inner_x == mat(sf, "0 -4 -3\n3 0 1\n1 -1 0"));
  Matrix inner_y = mat_mul(sf, mat_mul(sf, b1c, a), mat_mul(sf, a1c, b));
  CHECK(inner_y == mat(sf, "0 -1\n0 0"));

  CHECK(kleene_star(sf, inner_x) == mat(sf, "0 -4 -3\n3 0 1\n2 -1 0"));
  CHECK(kleene_star(sf, inner_y) == mat(sf, "0 -1\n0 0"));
}

TEST_CASE("worked 3x2 system: a failing sparsification and its certificate") {
  Semifield sf = Semifield::max_plus();
  Matrix a = mat(sf, "3 . 0\n1 1 0\n. 1 2");
  Matrix b = mat(sf, "1 1\n3 2\n3 1");
  Matrix a1 = mat(sf, "3 . .\n1 . .\n. . 2");  // keep column 1, 1, 3
  Matrix b1 = mat(sf, "1 .\n3 .\n3 .");        // keep column 1, 1, 1

  Matrix product = mat_mul(sf, mat_mul(sf, a, conjugate(sf, a1)),
                           mat_mul(sf, b, conjugate(sf, b1)));
  CHECK(mat_mul(sf, a, conjugate(sf, a1)) == mat(sf, "0 2 -2\n-2 0 -2\n. . 0"));
  CHECK(mat_mul(sf, b, conjugate(sf, b1)) == mat(sf, "0 -2 -2\n2 0 0\n2 0 0"));
  CHECK(product == mat(sf, "4 2 2\n2 0 0\n2 0 0"));

  // The full trace function keeps compounding (4, then 8, then 12)...
  CHECK(trace_fn(sf, product) == sf.num(12));
  // ...while the certificate stops at the first partial value over the unit.
  TraceCertificate cert = trace_fn_certificate(sf, product);
  CHECK_FALSE(cert.feasible);
  CHECK(cert.value == sf.num(4));

  TraceCertificate good = trace_fn_certificate(sf, mat(sf, "0 -2\n1 0"));
  CHECK(good.feasible);
  CHECK(good.value == sf.num(0));
}

TEST_CASE("trace function certificate agrees with the full value when feasible") {
  std::mt19937_64 rng(31);
  Semifield sf = Semifield::max_plus();
  int feasible_seen = 0;
  for (int i = 0; i < 2000; ++i) {
    Matrix m = tq_test::random_matrix(sf, rng, 3, 3, 0.4, -3, 1);
    TraceCertificate cert = trace_fn_certificate(sf, m);
    CAPTURE(i);
    if (cert.feasible) {
      ++feasible_seen;
      CHECK(cert.value == trace_fn(sf, m));
      CHECK(sf.leq(cert.value, sf.one()));
    } else {
      CHECK_FALSE(sf.leq(cert.value, sf.one()));
    }
  }
  CHECK(feasible_seen > 200);  // the sampler must exercise both branches
}

TEST_CASE("kleene star equals the literal power sum whenever it converges") {
  std::mt19937_64 rng(37);
  Semifield sf = Semifield::max_plus();
  int converged = 0;
  for (int i = 0; i < 2000; ++i) {
    std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    Matrix m = tq_test::random_matrix(sf, rng, n, n, 0.4, -3, 1);
    CAPTURE(i);
    CAPTURE(n);
    if (trace_fn_certificate(sf, m).feasible) {
      ++converged;
      Matrix star = kleene_star(sf, m);
      CHECK(star == naive_star(sf, m));
      // a* is idempotent: absorbing another factor changes nothing.
      CHECK(mat_mul(sf, star, star) == star);
      CHECK(mat_add(sf, star, Matrix::identity(sf, n)) == star);
    } else {
      CHECK_THROWS_AS(kleene_star(sf, m), StarDivergence);
    }
  }
  CHECK(converged > 400);
}

TEST_CASE("kleene star rejects divergent matrices with the offending value") {
  Semifield sf = Semifield::max_plus();
  try {
    kleene_star(sf, mat(sf, "1"));
    FAIL("expected StarDivergence");
  } catch (const StarDivergence& e) {
    CHECK(e.tr() == sf.num(1));
  }
  CHECK(kleene_star(sf, mat(sf, ". .\n. .")) == Matrix::identity(sf, 2));
  CHECK_THROWS_AS(kleene_star(sf, mat(sf, "1 2 3")), ShapeError);
  CHECK_THROWS_AS(trace(sf, mat(sf, "1 2 3")), ShapeError);
}

TEST_CASE("regularity predicates") {
  Semifield sf = Semifield::max_plus();
  CHECK(is_row_regular(mat(sf, "1 .\n. 2")));
  CHECK_FALSE(is_row_regular(mat(sf, "1 .\n. .")));
  CHECK(is_row_monomial(mat(sf, "1 .\n. 2")));
  CHECK_FALSE(is_row_monomial(mat(sf, "1 1\n. 2")));
  CHECK_FALSE(is_row_monomial(mat(sf, "1 .\n. .")));
  CHECK(is_regular(mat(sf, "1 2\n3 4")));
  CHECK_FALSE(is_regular(mat(sf, "1 2\n. 4")));
}

TEST_CASE("entrywise order respects the comparison mode") {
  Semifield exact(SemifieldKind::MaxPlus);
  Semifield tolerant(SemifieldKind::MaxPlus, CompareMode::Tolerant, 0.01);
  Matrix a = mat(exact, "1 2");
  Matrix b = mat(exact, "1.001 2");
  CHECK(mat_leq(exact, a, b));
  CHECK_FALSE(mat_eq(exact, a, b));
  CHECK(mat_eq(tolerant, a, b));
  CHECK(mat_leq(tolerant, b, a));  // within tolerance both directions hold
  CHECK_FALSE(mat_eq(tolerant, a, mat(exact, "1.1 2")));
}
