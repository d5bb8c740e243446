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

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropeq/oracle.hpp"
#include "tropeq/problem_io.hpp"
#include "tropeq/twosided.hpp"

namespace {

using nlohmann::json;
using namespace tropeq;

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;

struct CommonOptions {
  std::string path;
  std::string mode = "exact";
  double tolerance = 1e-9;
};

Semifield make_semifield(SemifieldKind kind, const CommonOptions& opts) {
  return Semifield(kind, opts.mode == "float" ? CompareMode::Tolerant : CompareMode::Exact,
                   opts.tolerance);
}

Vector parse_vector_option(const Semifield& sf, const std::string& csv, const char* what) {
  std::vector<Scalar> entries;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string token = comma == std::string::npos ? csv.substr(pos)
                                                   : csv.substr(pos, comma - pos);
    std::size_t begin = token.find_first_not_of(" \t");
    if (begin == std::string::npos) {
      throw ParseError(std::string(what) + ": empty entry in '" + csv + "'");
    }
    std::size_t end = token.find_last_not_of(" \t");
    entries.push_back(sf.parse(token.substr(begin, end - begin + 1)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return col_vector(entries);
}

RowSelection parse_selection_option(const std::vector<std::size_t>& one_based,
                                    RowSelection::Source source) {
  RowSelection sel;
  sel.source = source;
  for (std::size_t v : one_based) {
    if (v == 0) throw DomainError("selection indices are 1-based");
    sel.pick.push_back(v - 1);
  }
  return sel;
}

std::string vector_line(const Semifield& sf, const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.rows(); ++i) {
    if (i) out += ' ';
    out += sf.format(v.at(i, 0));
  }
  return out + "]";
}

std::string selection_line(const std::vector<std::size_t>& pick) {
  std::string out = "(";
  for (std::size_t i = 0; i < pick.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(pick[i] + 1);
  }
  return out + ")";
}

json vector_tokens_json(const Semifield& sf, const Vector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.rows(); ++i) out.push_back(sf.format(v.at(i, 0)));
  return out;
}

json selection_json(const RowSelection& sel) {
  json out = json::array();
  for (std::size_t p : sel.pick) out.push_back(p + 1);
  return out;
}

json witness_json(const Semifield& sf, const Witness& w) {
  return json{{"x", vector_tokens_json(sf, w.x)},
              {"y", vector_tokens_json(sf, w.y)},
              {"regular_x", w.regular_x},
              {"regular_y", w.regular_y},
              {"verified", w.verified}};
}

json basis_json(const Semifield& sf, const SolutionBasis& basis) {
  json out{{"sel_a", selection_json(basis.pair.sel_a)},
           {"sel_b", selection_json(basis.pair.sel_b)},
           {"certificate", sf.format(basis.pair.tr_value)},
           {"gxu", matrix_tokens(sf, basis.gxu)},
           {"gxv", matrix_tokens(sf, basis.gxv)},
           {"gyu", matrix_tokens(sf, basis.gyu)},
           {"gyv", matrix_tokens(sf, basis.gyv)}};
  if (basis.witness) out["witness"] = witness_json(sf, *basis.witness);
  if (basis.reduced) {
    json cols = json::array();
    for (std::size_t c : basis.reduced->kept_columns) cols.push_back(c + 1);
    out["reduced"] = json{{"kept_columns", cols},
                          {"gen_x", matrix_tokens(sf, basis.reduced->gen_x)},
                          {"gen_y", matrix_tokens(sf, basis.reduced->gen_y)}};
  }
  return out;
}

void print_matrix_block(const Semifield& sf, const std::string& label, const Matrix& m) {
  std::cout << "  " << label << ":\n";
  std::string text = format_matrix_text(sf, m);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::cout << "    " << text.substr(pos, nl - pos) << "\n";
    pos = nl + 1;
  }
}

int run_solve(const CommonOptions& common, const std::string& strategy_name, bool no_dedupe,
              bool serial, int threads, bool verbose, const std::string& report_path) {
  Problem problem = parse_problem_text(read_text_file(common.path));
  validate_problem(problem);
  Semifield sf = make_semifield(problem.kind, common);

  SolveOptions options;
  options.strategy =
      strategy_name == "exhaustive" ? Strategy::Exhaustive : Strategy::Backtracking;
  options.dedupe = !no_dedupe;
  options.exec = serial ? Exec::Serial : Exec::Parallel;
  if (threads > 0) set_threads(threads);

  auto started = std::chrono::steady_clock::now();
  SolveReport report = solve_all(sf, problem.a, problem.b, options);
  double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();

  std::cout << "semifield: " << sf.name() << "   mode: " << common.mode << "\n";
  std::cout << "A: " << problem.a.rows() << "x" << problem.a.cols() << ", B: " << problem.b.rows()
            << "x" << problem.b.cols() << "\n";
  std::cout << "selections: total " << report.selections_total << ", examined "
            << report.selections_examined << ", pruned " << report.selections_pruned
            << ", feasible " << report.bases.size() + report.redundant.size() << "\n";
  std::cout << "verdict: " << (report.feasible ? "feasible" : "infeasible") << "\n";

  if (report.feasible) {
    const Witness& w = *report.witness;
    VerifyResult vr = verify_solution(sf, problem.a, problem.b, w.x, w.y);
    std::cout << "witness: x = " << vector_line(sf, w.x) << ", y = " << vector_line(sf, w.y)
              << "   (A x = B y = " << vector_line(sf, vr.lhs) << ")\n";
    std::cout << "bases: " << report.bases.size() << " retained, " << report.redundant.size()
              << " redundant\n";
    for (std::size_t i = 0; i < report.bases.size(); ++i) {
      const SolutionBasis& basis = report.bases[i];
      std::cout << "basis " << i + 1 << ": A columns " << selection_line(basis.pair.sel_a.pick)
                << ", B columns " << selection_line(basis.pair.sel_b.pick) << ", certificate "
                << sf.format(basis.pair.tr_value);
      if (basis.reduced) {
        std::cout << ", generator columns " << basis.stacked().cols() << " -> "
                  << basis.reduced->kept_columns.size();
        Vector t = principal_parameters(sf, basis.reduced ? vstack(basis.reduced->gen_x,
                                                                   basis.reduced->gen_y)
                                                          : basis.stacked(),
                                        vstack(basis.witness->x, basis.witness->y));
        std::cout << "; witness parameters t = " << vector_line(sf, t);
      }
      std::cout << "\n";
      if (verbose) {
        print_matrix_block(sf, "gxu", basis.gxu);
        print_matrix_block(sf, "gxv", basis.gxv);
        print_matrix_block(sf, "gyu", basis.gyu);
        print_matrix_block(sf, "gyv", basis.gyv);
      }
    }
  }

  if (!report_path.empty()) {
    json j{{"schema_version", 1},
           {"generator", "tropeq"},
           {"semifield", sf.name()},
           {"mode", common.mode},
           {"strategy", strategy_name},
           {"dedupe", !no_dedupe},
           {"problem",
            json{{"a", matrix_tokens(sf, problem.a)}, {"b", matrix_tokens(sf, problem.b)}}},
           {"feasible", report.feasible},
           {"selections", json{{"total", report.selections_total},
                               {"examined", report.selections_examined},
                               {"pruned", report.selections_pruned},
                               {"feasible_count",
                                report.bases.size() + report.redundant.size()}}},
           {"timing_ms", elapsed_ms}};
    if (common.mode == "float") j["tolerance"] = common.tolerance;
    if (report.witness) j["witness"] = witness_json(sf, *report.witness);
    json bases = json::array();
    for (const SolutionBasis& basis : report.bases) bases.push_back(basis_json(sf, basis));
    j["bases"] = bases;
    json redundant = json::array();
    for (const RedundantBasis& r : report.redundant) {
      json entry = basis_json(sf, r.basis);
      entry["subsumed_by"] = r.subsumed_by + 1;
      redundant.push_back(entry);
    }
    j["redundant_bases"] = redundant;

    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw Error("cannot write report to '" + report_path + "'");
    out << j.dump(2) << "\n";
  }

  return report.feasible ? kExitFeasible : kExitInfeasible;
}

int run_check(const CommonOptions& common, const std::vector<std::size_t>& sel_a,
              const std::vector<std::size_t>& sel_b) {
  Problem problem = parse_problem_text(read_text_file(common.path));
  validate_problem(problem);
  Semifield sf = make_semifield(problem.kind, common);

  RowSelection a = parse_selection_option(sel_a, RowSelection::Source::A);
  RowSelection b = parse_selection_option(sel_b, RowSelection::Source::B);
  Scalar value = check_condition(sf, problem.a, problem.b, a, b);
  bool feasible = sf.eq(value, sf.one());
  std::cout << "certificate: " << sf.format(value) << "\n";
  std::cout << "verdict: " << (feasible ? "feasible" : "infeasible") << "\n";
  return feasible ? kExitFeasible : kExitInfeasible;
}

int run_star(const CommonOptions& common) {
  MatrixFile file = parse_matrices_text(read_text_file(common.path));
  if (file.matrices.size() != 1) {
    throw ParseError("star expects a file with exactly one matrix, found " +
                     std::to_string(file.matrices.size()));
  }
  Semifield sf = make_semifield(file.kind, common);
  try {
    Matrix star = kleene_star(sf, file.matrices[0]);
    std::cout << format_matrix_text(sf, star);
  } catch (const StarDivergence& e) {
    std::cout << "diverges: trace function value " << sf.format(e.tr())
              << " exceeds the unit\n";
    return kExitInfeasible;
  }
  return kExitFeasible;
}

int run_verify(const CommonOptions& common, const std::string& x_csv, const std::string& y_csv) {
  Problem problem = parse_problem_text(read_text_file(common.path));
  validate_problem(problem);
  Semifield sf = make_semifield(problem.kind, common);

  Vector x = parse_vector_option(sf, x_csv, "--x");
  Vector y = parse_vector_option(sf, y_csv, "--y");
  VerifyResult vr = verify_solution(sf, problem.a, problem.b, x, y);
  std::cout << "A x = " << vector_line(sf, vr.lhs) << "\n";
  std::cout << "B y = " << vector_line(sf, vr.rhs) << "\n";
  std::cout << "x regular: " << (vr.regular_x ? "yes" : "no")
            << ", y regular: " << (vr.regular_y ? "yes" : "no") << "\n";
  if (vr.equal) {
    std::cout << "result: exact-equal\n";
    return kExitFeasible;
  }
  std::cout << "result: mismatch at row " << vr.mismatch_row + 1 << "\n";
  return kExitInfeasible;
}

int run_oracle(const CommonOptions& common, long bound, bool serial) {
  Problem problem = parse_problem_text(read_text_file(common.path));
  validate_problem(problem);
  Semifield sf(problem.kind);  // the oracle is exact-mode by definition

  long effective = bound >= 0 ? bound : default_grid_bound(problem.a, problem.b);
  GridResult result =
      grid_oracle(sf, problem.a, problem.b, effective, serial ? Exec::Serial : Exec::Parallel);
  std::cout << "bound: " << effective << ", candidates: " << result.candidates << "\n";
  std::cout << "verdict: " << (result.found ? "witness found" : "no witness") << "\n";
  const std::size_t shown = std::min<std::size_t>(result.witnesses.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    std::cout << "witness " << i + 1 << ": x = " << vector_line(sf, result.witnesses[i].first)
              << ", y = " << vector_line(sf, result.witnesses[i].second) << "\n";
  }
  if (result.witnesses.size() > shown) {
    std::cout << "... " << result.witnesses.size() - shown << " more\n";
  }
  return result.found ? kExitFeasible : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-sided linear equation solver over idempotent semifields"};
  app.set_version_flag("--version", "tropeq 0.1.0");
  app.require_subcommand(1);

  CommonOptions common;

  auto add_mode_flags = [&common](CLI::App* cmd) {
    cmd->add_option("--mode", common.mode, "comparison mode")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    cmd->add_option("--tolerance", common.tolerance,
                    "absolute comparison tolerance for float mode")
        ->capture_default_str();
  };

  // solve
  auto* solve = app.add_subcommand("solve", "solve A x = B y completely");
  std::string strategy = "backtracking";
  bool no_dedupe = false, serial = false, verbose = false;
  int threads = 0;
  std::string report_path;
  solve->add_option("problem", common.path, "problem file")->required();
  solve->add_option("--strategy", strategy, "selection enumeration strategy")
      ->check(CLI::IsMember({"exhaustive", "backtracking"}))
      ->capture_default_str();
  solve->add_flag("--no-dedupe", no_dedupe, "keep all bases; skip column reduction");
  solve->add_flag("--serial", serial, "run the enumeration kernel serially");
  solve->add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");
  solve->add_flag("--verbose", verbose, "print generator matrices");
  solve->add_option("--report", report_path, "write a JSON report to this path");
  add_mode_flags(solve);

  // check
  auto* check = app.add_subcommand("check", "evaluate the condition for one selection pair");
  std::vector<std::size_t> sel_a, sel_b;
  check->add_option("problem", common.path, "problem file")->required();
  check->add_option("--sel-a", sel_a, "kept column per row of A (1-based, comma separated)")
      ->required()
      ->delimiter(',');
  check->add_option("--sel-b", sel_b, "kept column per row of B (1-based, comma separated)")
      ->required()
      ->delimiter(',');
  add_mode_flags(check);

  // star
  auto* star = app.add_subcommand("star", "Kleene star of a square matrix");
  star->add_option("matrix", common.path, "matrix file")->required();
  add_mode_flags(star);

  // verify
  auto* verify = app.add_subcommand("verify", "substitute a candidate pair into A x = B y");
  std::string x_csv, y_csv;
  verify->add_option("problem", common.path, "problem file")->required();
  verify->add_option("--x", x_csv, "candidate x (comma separated scalars)")->required();
  verify->add_option("--y", y_csv, "candidate y (comma separated scalars)")->required();
  add_mode_flags(verify);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force grid search (exact max-plus only)");
  long bound = -1;
  bool oracle_serial = false;
  oracle->add_option("problem", common.path, "problem file")->required();
  oracle->add_option("--bound", bound, "half-width of the integer sweep (default: derived)");
  oracle->add_flag("--serial", oracle_serial, "run the sweep serially");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (solve->parsed()) {
      return run_solve(common, strategy, no_dedupe, serial, threads, verbose, report_path);
    }
    if (check->parsed()) return run_check(common, sel_a, sel_b);
    if (star->parsed()) return run_star(common);
    if (verify->parsed()) return run_verify(common, x_csv, y_csv);
    if (oracle->parsed()) return run_oracle(common, bound, oracle_serial);
  } catch (const tropeq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
