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
#include <functional>
#include <optional>
#include <vector>

#include "tropeq/inequalities.hpp"
#include "tropeq/matrix.hpp"

namespace tropeq {

/**
 * Two-sided equation solver: computes the complete solution set of
 *
 *   A ⊗ x = B ⊗ y
 *
 * for row-regular A (m x n) and B (m x k) over an idempotent semifield.
 * Every row-monomial sparsification pair (A₁, B₁) — keep exactly one finite
 * entry per row on each side — induces the feasibility condition
 *
 *   Tr(A A₁⁻ B B₁⁻) = unit        (the value is never below the unit)
 *
 * and each pair that passes contributes a parametric solution family
 *
 *   x = gxu u ⊕ gxv v,   y = gyu u ⊕ gyv v
 *
 * with gxu = (A₁⁻ B B₁⁻ A)*, gxv = A₁⁻ B (B₁⁻ A A₁⁻ B)*,
 * gyu = B₁⁻ A (A₁⁻ B B₁⁻ A)*, gyv = (B₁⁻ A A₁⁻ B)*. The union of the
 * families over all passing pairs is the complete solution set.
 */

/** How solve_all walks the selection space. */
enum class Strategy { Exhaustive, Backtracking };

/** Whether the data-parallel kernels run serially or under OpenMP. */
enum class Exec { Serial, Parallel };

/** Sets the OpenMP thread count (no-op when built without OpenMP). */
void set_threads(int n);

/** One kept column index per row of the source matrix. */
struct RowSelection {
  enum class Source { A, B };
  Source source = Source::A;
  std::vector<std::size_t> pick;  // 0-based column index per row

  bool operator==(const RowSelection&) const = default;
};

/** The row-monomial matrix keeping entry (i, pick[i]) of each row of m. */
Matrix materialize(const Semifield& sf, const Matrix& m, const RowSelection& sel);

/** A fully evaluated sparsification pair. */
struct SelectionPair {
  RowSelection sel_a, sel_b;
  Scalar tr_value;  // feasibility certificate of Tr(A A₁⁻ B B₁⁻)
  bool feasible = false;
};

/** Per-row candidate columns (finite entries) and odometer arithmetic. */
struct SelectionSpace {
  std::vector<std::vector<std::size_t>> choices;  // ascending per row

  std::uint64_t total() const;
  std::vector<std::size_t> unrank(std::uint64_t rank) const;  // row 0 most significant
};

/** Candidate columns per row; requires a row-regular matrix. */
SelectionSpace selection_space(const Matrix& m);

/**
 * Feasibility certificate value for one selection pair: the trace function
 * of A A₁⁻ B B₁⁻ accumulated power by power, stopping at the first partial
 * value above the unit. The selection is feasible exactly when the result
 * equals the unit.
 */
Scalar check_condition(const Semifield& sf, const Matrix& a, const Matrix& b,
                       const RowSelection& sel_a, const RowSelection& sel_b);

/** A default-parameter sample drawn from a basis, with its verification. */
struct Witness {
  Matrix x, y;
  bool regular_x = false;
  bool regular_y = false;
  bool verified = false;  // A x equals B y under the semifield's comparison mode
};

/** Column-reduced view of a basis family (same family, fewer generators). */
struct ReducedBasis {
  std::vector<std::size_t> kept_columns;  // indices into the stacked generator
  Matrix gen_x;                           // rows 0..n-1 of the kept columns
  Matrix gen_y;                           // rows n..n+k-1
};

/** One feasible selection pair together with its solution family. */
struct SolutionBasis {
  SelectionPair pair;
  Matrix gxu, gxv, gyu, gyv;
  std::optional<Witness> witness;        // filled by solve_all
  std::optional<ReducedBasis> reduced;   // filled by solve_all when dedupe is on

  /** [[gxu, gxv], [gyu, gyv]] — columns generate (x; y) jointly. */
  Matrix stacked() const { return vstack(hstack(gxu, gxv), hstack(gyu, gyv)); }
};

/** Thrown when a basis is requested for a selection pair that fails the condition. */
class InfeasibleSelection : public Error {
 public:
  InfeasibleSelection(const Semifield& sf, const Scalar& tr)
      : Error("selection pair fails the feasibility condition: certificate value " +
              sf.format(tr) + " exceeds the unit"),
        tr_(tr) {}
  const Scalar& tr() const { return tr_; }

 private:
  Scalar tr_;
};

/**
 * Solution family for one feasible selection pair (raw generator blocks,
 * no witness or reduction). Throws InfeasibleSelection when the condition
 * fails, DomainError for invalid selections.
 */
SolutionBasis build_basis(const Semifield& sf, const Matrix& a, const Matrix& b,
                          const RowSelection& sel_a, const RowSelection& sel_b);

/**
 * x = gxu u ⊕ gxv v and y = gyu u ⊕ gyv v for parameter column vectors
 * u (size n) and v (size k). The parameters must not both be all-ε.
 */
std::pair<Vector, Vector> sample_solution(const Semifield& sf, const SolutionBasis& basis,
                                          const Vector& u, const Vector& v);

/**
 * Streams evaluated selection pairs in deterministic order (serial).
 * Exhaustive yields every pair, row-major lexicographic with sel_a as the
 * outer key. Backtracking prunes a partial selection over leading rows as
 * soon as the prefix subsystem's certificate exceeds the unit — sound
 * because prefix products are entrywise dominated by any full extension —
 * and yields exactly the full-depth pairs that survive.
 */
void enumerate_selections(const Semifield& sf, const Matrix& a, const Matrix& b,
                          Strategy strategy,
                          const std::function<void(const SelectionPair&)>& yield);

struct SolveOptions {
  Strategy strategy = Strategy::Backtracking;
  bool dedupe = true;  // column reduction per basis + cross-basis subsumption
  Exec exec = Exec::Parallel;
};

/** A basis dropped by deduplication, with the retained basis that covers it. */
struct RedundantBasis {
  SolutionBasis basis;
  std::size_t subsumed_by;  // index into SolveReport::bases
};

struct SolveReport {
  bool feasible = false;
  std::vector<SolutionBasis> bases;        // retained, canonical selection order
  std::vector<RedundantBasis> redundant;   // subsumed families (kept for inspection)
  std::uint64_t selections_total = 0;
  std::uint64_t selections_examined = 0;   // full-depth pairs whose condition was evaluated
  std::uint64_t selections_pruned = 0;     // full-depth pairs skipped under pruned prefixes
  std::optional<Witness> witness;          // first retained basis's sample
};

/**
 * Complete solve: enumerate selection pairs with the chosen strategy,
 * build a solution family per feasible pair (sorted canonically by
 * selection), verify one default-parameter witness per family, and — when
 * dedupe is on — column-reduce each family and move families subsumed by
 * another (every stacked generator column reproducible via residuation)
 * into the redundant list. Both strategies and both Exec policies produce
 * identical reports.
 */
SolveReport solve_all(const Semifield& sf, const Matrix& a, const Matrix& b,
                      const SolveOptions& options = {});

namespace detail {

/**
 * M M₁⁻ for M₁ = materialize(m, pick), restricted to the leading
 * prefix_rows rows: entry (r, s) = m[r, pick[s]] ⊗ inv(m[s, pick[s]]).
 * Used by the enumeration kernels; agrees with the explicit
 * materialize/conjugate/mat_mul route.
 */
Matrix self_conj_product(const Semifield& sf, const Matrix& m,
                         const std::vector<std::size_t>& pick, std::size_t prefix_rows);

}  // namespace detail

}  // namespace tropeq
