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

// Times the OpenMP selection-enumeration and grid-sweep kernels against the
// serial reference implementation on reproducible random instances, and
// checks that both lanes produce identical results while it is at it.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tropeq/oracle.hpp"
#include "tropeq/twosided.hpp"

namespace {

using namespace tropeq;

Matrix random_row_regular(const Semifield& sf, std::mt19937_64& rng, std::size_t rows,
                          std::size_t cols, double eps_prob, int magnitude) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> value(-magnitude, magnitude);
  std::uniform_int_distribution<std::size_t> column(0, cols - 1);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    bool finite = false;
    for (std::size_t j = 0; j < cols; ++j) {
      if (coin(rng) >= eps_prob) {
        m.at(i, j) = sf.make(Rational(value(rng)));
        finite = true;
      }
    }
    if (!finite) m.at(i, column(rng)) = sf.make(Rational(value(rng)));
  }
  return m;
}

bool same_report(const SolveReport& lhs, const SolveReport& rhs) {
  if (lhs.feasible != rhs.feasible || lhs.bases.size() != rhs.bases.size() ||
      lhs.redundant.size() != rhs.redundant.size() ||
      lhs.selections_examined != rhs.selections_examined ||
      lhs.selections_pruned != rhs.selections_pruned) {
    return false;
  }
  for (std::size_t i = 0; i < lhs.bases.size(); ++i) {
    const SolutionBasis& a = lhs.bases[i];
    const SolutionBasis& b = rhs.bases[i];
    if (a.pair.sel_a != b.pair.sel_a || a.pair.sel_b != b.pair.sel_b || a.gxu != b.gxu ||
        a.gxv != b.gxv || a.gyu != b.gyu || a.gyv != b.gyv) {
      return false;
    }
  }
  return true;
}

template <typename Fn>
double median_ms(int repetitions, Fn&& fn) {
  std::vector<double> samples;
  for (int r = 0; r < repetitions; ++r) {
    auto begin = std::chrono::steady_clock::now();
    fn();
    samples.push_back(
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - begin)
            .count());
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

void print_row(const char* label, double serial_ms, double parallel_ms) {
  std::printf("%-22s %10.2f ms %10.2f ms %8.2fx\n", label, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel benchmark: serial reference vs OpenMP"};
  std::uint64_t seed = 20260822;
  std::size_t rows = 5, cols_a = 5, cols_b = 4;
  double eps_prob = 0.45;
  int magnitude = 4, repetitions = 3, threads = 0;
  long grid_bound = 7;
  std::size_t grid_cols = 5;
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--rows", rows, "equation count m");
  app.add_option("--cols-a", cols_a, "unknowns n");
  app.add_option("--cols-b", cols_b, "unknowns k");
  app.add_option("--eps-prob", eps_prob, "probability of an eps entry");
  app.add_option("--magnitude", magnitude, "entry magnitude bound");
  app.add_option("--repetitions", repetitions, "timing repetitions (median reported)");
  app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");
  app.add_option("--grid-bound", grid_bound, "grid sweep half-width");
  CLI11_PARSE(app, argc, argv);

  if (threads > 0) set_threads(threads);

  Semifield sf(SemifieldKind::MaxPlus);
  std::mt19937_64 rng(seed);
  Matrix a = random_row_regular(sf, rng, rows, cols_a, eps_prob, magnitude);
  Matrix b = random_row_regular(sf, rng, rows, cols_b, eps_prob, magnitude);

  SelectionSpace space_a = selection_space(a), space_b = selection_space(b);
  std::printf("instance: %zux%zu vs %zux%zu, %llu selection pairs, seed %llu\n", rows, cols_a,
              rows, cols_b,
              static_cast<unsigned long long>(space_a.total() * space_b.total()),
              static_cast<unsigned long long>(seed));
  std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  bool agree = true;
  for (Strategy strategy : {Strategy::Exhaustive, Strategy::Backtracking}) {
    SolveOptions serial_opts{strategy, true, Exec::Serial};
    SolveOptions parallel_opts{strategy, true, Exec::Parallel};
    SolveReport serial_report = solve_all(sf, a, b, serial_opts);
    SolveReport parallel_report = solve_all(sf, a, b, parallel_opts);
    agree = agree && same_report(serial_report, parallel_report);
    double serial_ms = median_ms(repetitions, [&] { solve_all(sf, a, b, serial_opts); });
    double parallel_ms = median_ms(repetitions, [&] { solve_all(sf, a, b, parallel_opts); });
    print_row(strategy == Strategy::Exhaustive ? "solve exhaustive" : "solve backtracking",
              serial_ms, parallel_ms);
  }

  // Smaller instance for the exponential grid sweep.
  Matrix ga = random_row_regular(sf, rng, 3, grid_cols, 0.3, 2);
  Matrix gb = random_row_regular(sf, rng, 3, 3, 0.3, 2);
  GridResult grid_serial = grid_oracle(sf, ga, gb, grid_bound, Exec::Serial);
  GridResult grid_parallel = grid_oracle(sf, ga, gb, grid_bound, Exec::Parallel);
  agree = agree && grid_serial.found == grid_parallel.found &&
          grid_serial.witnesses == grid_parallel.witnesses &&
          grid_serial.candidates == grid_parallel.candidates;
  double gs = median_ms(repetitions, [&] { grid_oracle(sf, ga, gb, grid_bound, Exec::Serial); });
  double gp =
      median_ms(repetitions, [&] { grid_oracle(sf, ga, gb, grid_bound, Exec::Parallel); });
  print_row("grid oracle", gs, gp);

  std::printf("serial and parallel results %s\n", agree ? "agree" : "DISAGREE");
  return agree ? 0 : 1;
}
