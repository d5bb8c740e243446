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

#include <string>
#include <string_view>
#include <vector>

#include "tropeq/matrix.hpp"

namespace tropeq {

/**
 * Text formats.
 *
 * Matrix file: an optional leading block of `#` comment lines, one of which
 * may declare the semifield as `# semifield: max-plus` (or `min-times`;
 * max-plus is the default), then one line per row of whitespace-separated
 * scalar tokens, with a blank line between matrices. Comments are not
 * allowed once matrix rows begin.
 * Scalar tokens are rational literals ("3", "-2", "1/4", "2.5") or the
 * zero element spelled ".", "eps", "-inf" (max-plus) / "+inf" (min-times).
 *
 * Problem file: the same format with exactly two matrices, the left-hand A
 * followed by the right-hand B.
 */

struct MatrixFile {
  SemifieldKind kind = SemifieldKind::MaxPlus;
  std::vector<Matrix> matrices;
};

struct Problem {
  SemifieldKind kind = SemifieldKind::MaxPlus;
  Matrix a, b;
};

/** Parses any number of matrices; throws ParseError with 1-based positions. */
MatrixFile parse_matrices_text(std::string_view text);

/** Parses a problem file (exactly two matrices with equal row counts). */
Problem parse_problem_text(std::string_view text);

/** Parses one matrix from header-less row text (test and tool convenience). */
Matrix parse_matrix_text(const Semifield& sf, std::string_view text);

/**
 * Row-regularity validation with a CLI-grade message
 * ("row-regularity violated at row 2 of B"). Throws DomainError.
 */
void validate_problem(const Problem& problem);

/** Canonical text, one token per entry; parsing it back is exact. */
std::string format_matrix_text(const Semifield& sf, const Matrix& m);

/** Canonical problem file text (header + A + blank line + B). */
std::string format_problem_text(const Problem& problem);

/** Matrix entries as canonical tokens, row-major (report serialization). */
std::vector<std::vector<std::string>> matrix_tokens(const Semifield& sf, const Matrix& m);

/** Reads a whole file; throws Error when unreadable. */
std::string read_text_file(const std::string& path);

}  // namespace tropeq
