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

#include "tropeq/twosided.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tropeq/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropeq {

namespace {

void require_problem(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0 || a.cols() == 0 || b.cols() == 0) {
    throw ShapeError("two-sided system: empty matrix");
  }
  if (a.rows() != b.rows()) {
    throw ShapeError("two-sided system: row counts differ, " + std::to_string(a.rows()) +
                     " vs " + std::to_string(b.rows()));
  }
  if (!is_row_regular(a)) throw DomainError("left matrix is not row-regular");
  if (!is_row_regular(b)) throw DomainError("right matrix is not row-regular");
}

void require_selection(const Matrix& m, const RowSelection& sel, const char* side) {
  if (sel.pick.size() != m.rows()) {
    throw DomainError(std::string("selection for ") + side + " has " +
                      std::to_string(sel.pick.size()) + " rows, matrix has " +
                      std::to_string(m.rows()));
  }
  for (std::size_t i = 0; i < sel.pick.size(); ++i) {
    if (sel.pick[i] >= m.cols()) {
      throw DomainError(std::string("selection for ") + side + " row " + std::to_string(i + 1) +
                        ": column index " + std::to_string(sel.pick[i] + 1) + " out of range");
    }
    if (m.at(i, sel.pick[i]).is_eps()) {
      throw DomainError(std::string("selection for ") + side + " row " + std::to_string(i + 1) +
                        ": column " + std::to_string(sel.pick[i] + 1) + " holds the zero element");
    }
  }
}

/** Certificate for one pair via the m-side product (A A₁⁻)(B B₁⁻). */
TraceCertificate pair_certificate(const Semifield& sf, const Matrix& a, const Matrix& b,
                                  const std::vector<std::size_t>& pick_a,
                                  const std::vector<std::size_t>& pick_b,
                                  std::size_t prefix_rows) {
  Matrix p = detail::self_conj_product(sf, a, pick_a, prefix_rows);
  Matrix q = detail::self_conj_product(sf, b, pick_b, prefix_rows);
  return trace_fn_certificate(sf, mat_mul(sf, p, q));
}

bool selection_less(const SelectionPair& lhs, const SelectionPair& rhs) {
  if (lhs.sel_a.pick != rhs.sel_a.pick) return lhs.sel_a.pick < rhs.sel_a.pick;
  return lhs.sel_b.pick < rhs.sel_b.pick;
}

/** Product of per-row choice counts for rows >= depth on both sides. */
std::uint64_t subtree_mass(const SelectionSpace& sa, const SelectionSpace& sb,
                           std::size_t depth) {
  __int128 acc = 1;
  for (std::size_t r = depth; r < sa.choices.size(); ++r) {
    acc *= static_cast<__int128>(sa.choices[r].size()) * sb.choices[r].size();
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw DomainError("selection space too large to enumerate");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

struct EnumerationResult {
  std::vector<SelectionPair> feasible;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
};

/** Serial exhaustive walk in rank order; reports every full-depth pair. */
void walk_exhaustive(const Semifield& sf, const Matrix& a, const Matrix& b,
                     const SelectionSpace& sa, const SelectionSpace& sb,
                     std::uint64_t begin, std::uint64_t end,
                     const std::function<void(const SelectionPair&)>& yield) {
  const std::uint64_t tb = sb.total();
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    SelectionPair pair;
    pair.sel_a = {RowSelection::Source::A, sa.unrank(rank / tb)};
    pair.sel_b = {RowSelection::Source::B, sb.unrank(rank % tb)};
    TraceCertificate cert =
        pair_certificate(sf, a, b, pair.sel_a.pick, pair.sel_b.pick, a.rows());
    pair.tr_value = cert.value;
    pair.feasible = cert.feasible;
    yield(pair);
  }
}

/**
 * Depth-first walk with prefix pruning, rows advancing together on both
 * sides. Prunes strictly below full depth; full-depth pairs that survive
 * are reported whether or not they pass.
 */
void walk_backtracking(const Semifield& sf, const Matrix& a, const Matrix& b,
                       const SelectionSpace& sa, const SelectionSpace& sb,
                       std::vector<std::size_t>& pick_a, std::vector<std::size_t>& pick_b,
                       std::size_t depth, std::uint64_t& pruned,
                       const std::function<void(const SelectionPair&)>& yield) {
  const std::size_t m = a.rows();
  for (std::size_t ca : sa.choices[depth]) {
    pick_a[depth] = ca;
    for (std::size_t cb : sb.choices[depth]) {
      pick_b[depth] = cb;
      TraceCertificate cert = pair_certificate(sf, a, b, pick_a, pick_b, depth + 1);
      if (depth + 1 == m) {
        SelectionPair pair;
        pair.sel_a = {RowSelection::Source::A, pick_a};
        pair.sel_b = {RowSelection::Source::B, pick_b};
        pair.tr_value = cert.value;
        pair.feasible = cert.feasible;
        yield(pair);
      } else if (!cert.feasible) {
        pruned += subtree_mass(sa, sb, depth + 1);
      } else {
        walk_backtracking(sf, a, b, sa, sb, pick_a, pick_b, depth + 1, pruned, yield);
      }
    }
  }
}

EnumerationResult enumerate_serial(const Semifield& sf, const Matrix& a, const Matrix& b,
                                   Strategy strategy) {
  EnumerationResult out;
  enumerate_selections(sf, a, b, strategy, [&](const SelectionPair& pair) {
    ++out.examined;
    if (pair.feasible) out.feasible.push_back(pair);
  });
  SelectionSpace sa = selection_space(a);
  SelectionSpace sb = selection_space(b);
  out.pruned = subtree_mass(sa, sb, 0) - out.examined;
  return out;
}

EnumerationResult enumerate_parallel(const Semifield& sf, const Matrix& a, const Matrix& b,
                                     Strategy strategy) {
  const SelectionSpace sa = selection_space(a);
  const SelectionSpace sb = selection_space(b);
  const std::uint64_t total = subtree_mass(sa, sb, 0);

  EnumerationResult out;
  if (strategy == Strategy::Exhaustive) {
    // Split the flattened rank space into contiguous chunks; each chunk's
    // hits stay in rank order, so concatenation in chunk order is already
    // the canonical order.
    const std::uint64_t chunks64 = std::min<std::uint64_t>(total, 64);
    const int chunks = static_cast<int>(chunks64);
    std::vector<std::vector<SelectionPair>> found(chunks);
    std::vector<std::uint64_t> examined(chunks, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int c = 0; c < chunks; ++c) {
      const std::uint64_t begin = total * c / chunks;
      const std::uint64_t end = total * (c + 1) / chunks;
      walk_exhaustive(sf, a, b, sa, sb, begin, end, [&](const SelectionPair& pair) {
        ++examined[c];
        if (pair.feasible) found[c].push_back(pair);
      });
    }
    for (int c = 0; c < chunks; ++c) {
      out.examined += examined[c];
      out.feasible.insert(out.feasible.end(), found[c].begin(), found[c].end());
    }
  } else {
    // Split the search tree at the first row: one branch per choice pair.
    const std::size_t na = sa.choices[0].size();
    const std::size_t nb = sb.choices[0].size();
    const int branches = static_cast<int>(na * nb);
    std::vector<std::vector<SelectionPair>> found(branches);
    std::vector<std::uint64_t> examined(branches, 0);
    std::vector<std::uint64_t> pruned(branches, 0);
    const std::size_t m = a.rows();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int br = 0; br < branches; ++br) {
      std::vector<std::size_t> pick_a(m), pick_b(m);
      pick_a[0] = sa.choices[0][br / nb];
      pick_b[0] = sb.choices[0][br % nb];
      auto sink = [&](const SelectionPair& pair) {
        ++examined[br];
        if (pair.feasible) found[br].push_back(pair);
      };
      TraceCertificate cert = pair_certificate(sf, a, b, pick_a, pick_b, 1);
      if (m == 1) {
        SelectionPair pair;
        pair.sel_a = {RowSelection::Source::A, pick_a};
        pair.sel_b = {RowSelection::Source::B, pick_b};
        pair.tr_value = cert.value;
        pair.feasible = cert.feasible;
        sink(pair);
      } else if (!cert.feasible) {
        pruned[br] += subtree_mass(sa, sb, 1);
      } else {
        walk_backtracking(sf, a, b, sa, sb, pick_a, pick_b, 1, pruned[br], sink);
      }
    }
    for (int br = 0; br < branches; ++br) {
      out.examined += examined[br];
      out.pruned += pruned[br];
      out.feasible.insert(out.feasible.end(), found[br].begin(), found[br].end());
    }
  }
  if (strategy == Strategy::Exhaustive) {
    out.pruned = 0;
  } else {
    out.pruned = total - out.examined;
  }
  return out;
}

/** Column reduction: drop a stacked-generator column when the remaining ones reproduce it. */
ReducedBasis reduce_columns(const Semifield& sf, const SolutionBasis& basis) {
  const Matrix stacked = basis.stacked();
  const std::size_t n = basis.gxu.rows();
  std::vector<std::size_t> kept(stacked.cols());
  for (std::size_t j = 0; j < stacked.cols(); ++j) kept[j] = j;

  for (std::size_t j = 0; j < stacked.cols(); ++j) {
    auto it = std::find(kept.begin(), kept.end(), j);
    if (it == kept.end()) continue;
    std::vector<std::size_t> rest;
    for (std::size_t c : kept)
      if (c != j) rest.push_back(c);
    if (rest.empty()) continue;
    Matrix candidate = take_columns(stacked, rest);
    Vector column = take_columns(stacked, {j});
    if (in_family(sf, candidate, column)) kept.erase(std::find(kept.begin(), kept.end(), j));
  }

  ReducedBasis out;
  out.kept_columns = kept;
  Matrix gen = take_columns(stacked, kept);
  out.gen_x = take_rows(gen, n);
  Matrix gen_y(gen.rows() - n, gen.cols());
  for (std::size_t i = n; i < gen.rows(); ++i)
    for (std::size_t j = 0; j < gen.cols(); ++j) gen_y.at(i - n, j) = gen.at(i, j);
  out.gen_y = gen_y;
  return out;
}

/** Every stacked column of inner reproducible from outer's stacked generator. */
bool subsumed(const Semifield& sf, const Matrix& inner_stacked, const Matrix& outer_stacked) {
  for (std::size_t j = 0; j < inner_stacked.cols(); ++j) {
    if (!in_family(sf, outer_stacked, take_columns(inner_stacked, {j}))) return false;
  }
  return true;
}

}  // namespace

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

Matrix materialize(const Semifield& sf, const Matrix& m, const RowSelection& sel) {
  (void)sf;
  require_selection(m, sel, sel.source == RowSelection::Source::A ? "A" : "B");
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) out.at(i, sel.pick[i]) = m.at(i, sel.pick[i]);
  return out;
}

std::uint64_t SelectionSpace::total() const {
  __int128 acc = 1;
  for (const auto& row : choices) {
    acc *= static_cast<__int128>(row.size());
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw DomainError("selection space too large to enumerate");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<std::size_t> SelectionSpace::unrank(std::uint64_t rank) const {
  std::vector<std::size_t> pick(choices.size());
  for (std::size_t r = choices.size(); r-- > 0;) {
    const std::size_t base = choices[r].size();
    pick[r] = choices[r][rank % base];
    rank /= base;
  }
  return pick;
}

SelectionSpace selection_space(const Matrix& m) {
  if (!is_row_regular(m)) throw DomainError("selection space requires a row-regular matrix");
  SelectionSpace out;
  out.choices.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j).is_finite()) out.choices[i].push_back(j);
  return out;
}

namespace detail {

Matrix self_conj_product(const Semifield& sf, const Matrix& m,
                         const std::vector<std::size_t>& pick, std::size_t prefix_rows) {
  Matrix out(prefix_rows, prefix_rows);
  for (std::size_t s = 0; s < prefix_rows; ++s) {
    const Scalar entry_inv = sf.inv(m.at(s, pick[s]));
    for (std::size_t r = 0; r < prefix_rows; ++r) {
      out.at(r, s) = sf.mul(m.at(r, pick[s]), entry_inv);
    }
  }
  return out;
}

}  // namespace detail

Scalar check_condition(const Semifield& sf, const Matrix& a, const Matrix& b,
                       const RowSelection& sel_a, const RowSelection& sel_b) {
  require_problem(a, b);
  require_selection(a, sel_a, "A");
  require_selection(b, sel_b, "B");
  Matrix a1 = materialize(sf, a, sel_a);
  Matrix b1 = materialize(sf, b, sel_b);
  Matrix product = mat_mul(sf, mat_mul(sf, a, conjugate(sf, a1)),
                           mat_mul(sf, b, conjugate(sf, b1)));
  return trace_fn_certificate(sf, product).value;
}

SolutionBasis build_basis(const Semifield& sf, const Matrix& a, const Matrix& b,
                          const RowSelection& sel_a, const RowSelection& sel_b) {
  require_problem(a, b);
  require_selection(a, sel_a, "A");
  require_selection(b, sel_b, "B");
  Matrix a1c = conjugate(sf, materialize(sf, a, sel_a));  // n x m
  Matrix b1c = conjugate(sf, materialize(sf, b, sel_b));  // k x m
  PairSolution ps = solve_pair_system(sf, mat_mul(sf, b1c, a), mat_mul(sf, a1c, b));
  if (!ps.feasible) throw InfeasibleSelection(sf, ps.tr_value);

  SolutionBasis basis;
  basis.pair.sel_a = sel_a;
  basis.pair.sel_b = sel_b;
  basis.pair.tr_value = ps.tr_value;
  basis.pair.feasible = true;
  basis.gxu = ps.gxu;
  basis.gxv = ps.gxv;
  basis.gyu = ps.gyu;
  basis.gyv = ps.gyv;
  return basis;
}

std::pair<Vector, Vector> sample_solution(const Semifield& sf, const SolutionBasis& basis,
                                          const Vector& u, const Vector& v) {
  if (u.cols() != 1 || v.cols() != 1 || u.rows() != basis.gxu.cols() ||
      v.rows() != basis.gxv.cols()) {
    throw ShapeError("sample_solution: parameter vectors must be columns of sizes " +
                     std::to_string(basis.gxu.cols()) + " and " +
                     std::to_string(basis.gxv.cols()));
  }
  bool any_finite = false;
  for (std::size_t i = 0; i < u.rows() && !any_finite; ++i) any_finite = u.at(i, 0).is_finite();
  for (std::size_t i = 0; i < v.rows() && !any_finite; ++i) any_finite = v.at(i, 0).is_finite();
  if (!any_finite) throw DomainError("sample_solution: parameters must not both be all-zero");

  Vector x = mat_add(sf, mat_mul(sf, basis.gxu, u), mat_mul(sf, basis.gxv, v));
  Vector y = mat_add(sf, mat_mul(sf, basis.gyu, u), mat_mul(sf, basis.gyv, v));
  return {x, y};
}

void enumerate_selections(const Semifield& sf, const Matrix& a, const Matrix& b,
                          Strategy strategy,
                          const std::function<void(const SelectionPair&)>& yield) {
  require_problem(a, b);
  SelectionSpace sa = selection_space(a);
  SelectionSpace sb = selection_space(b);
  if (strategy == Strategy::Exhaustive) {
    walk_exhaustive(sf, a, b, sa, sb, 0, subtree_mass(sa, sb, 0), yield);
  } else {
    std::vector<std::size_t> pick_a(a.rows()), pick_b(b.rows());
    std::uint64_t pruned = 0;
    walk_backtracking(sf, a, b, sa, sb, pick_a, pick_b, 0, pruned, yield);
  }
}

SolveReport solve_all(const Semifield& sf, const Matrix& a, const Matrix& b,
                      const SolveOptions& options) {
  require_problem(a, b);
  SelectionSpace sa = selection_space(a);
  SelectionSpace sb = selection_space(b);

  EnumerationResult enumeration = options.exec == Exec::Parallel
                                      ? enumerate_parallel(sf, a, b, options.strategy)
                                      : enumerate_serial(sf, a, b, options.strategy);

  SolveReport report;
  report.selections_total = subtree_mass(sa, sb, 0);
  report.selections_examined = enumeration.examined;
  report.selections_pruned = enumeration.pruned;

  std::sort(enumeration.feasible.begin(), enumeration.feasible.end(), selection_less);

  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  std::vector<SolutionBasis> bases;
  bases.reserve(enumeration.feasible.size());
  Vector ones_u(n, 1), ones_v(k, 1);
  for (std::size_t i = 0; i < n; ++i) ones_u.at(i, 0) = sf.one();
  for (std::size_t i = 0; i < k; ++i) ones_v.at(i, 0) = sf.one();

  for (const SelectionPair& pair : enumeration.feasible) {
    SolutionBasis basis = build_basis(sf, a, b, pair.sel_a, pair.sel_b);
    basis.pair.tr_value = pair.tr_value;

    // Unit parameters sum every generator column; the star blocks carry the
    // unit on their diagonals, so the sample is always regular.
    auto [x, y] = sample_solution(sf, basis, ones_u, ones_v);
    Witness w;
    w.x = x;
    w.y = y;
    w.regular_x = is_regular(x);
    w.regular_y = is_regular(y);
    VerifyResult vr = verify_solution(sf, a, b, x, y);
    w.verified = vr.equal;
    basis.witness = w;
    bases.push_back(std::move(basis));
  }

  report.feasible = !bases.empty();

  if (!options.dedupe) {
    report.bases = std::move(bases);
  } else {
    for (SolutionBasis& basis : bases) basis.reduced = reduce_columns(sf, basis);

    const std::size_t count = bases.size();
    std::vector<Matrix> stacked;
    stacked.reserve(count);
    for (const SolutionBasis& basis : bases) stacked.push_back(basis.stacked());

    // sub[i][j]: family i sits inside family j (checked column by column).
    std::vector<std::vector<bool>> sub(count, std::vector<bool>(count, false));
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j)
        if (i != j) sub[i][j] = subsumed(sf, stacked[i], stacked[j]);

    // Drop a family strictly inside another, and later copies of equal
    // families; containment is transitive, so survivors are maximal.
    std::vector<bool> keep(count, true);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count && keep[i]; ++j)
        if (i != j && sub[i][j] && (!sub[j][i] || j < i)) keep[i] = false;

    std::vector<std::size_t> retained_index(count, 0);
    for (std::size_t i = 0, next = 0; i < count; ++i)
      if (keep[i]) retained_index[i] = next++;

    for (std::size_t i = 0; i < count; ++i) {
      if (keep[i]) {
        report.bases.push_back(std::move(bases[i]));
      } else {
        std::size_t host = 0;
        for (std::size_t j = 0; j < count; ++j)
          if (keep[j] && sub[i][j]) {
            host = retained_index[j];
            break;
          }
        report.redundant.push_back({std::move(bases[i]), host});
      }
    }
  }

  if (report.feasible) report.witness = report.bases.front().witness;
  return report;
}

}  // namespace tropeq
