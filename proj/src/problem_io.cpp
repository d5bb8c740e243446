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

#include "tropeq/problem_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tropeq {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_row(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Matrix rows_to_matrix(const Semifield& sf, const std::vector<std::vector<Token>>& rows,
                      const std::vector<std::size_t>& line_numbers) {
  const std::size_t cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw ParseError("row has " + std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(cols),
                       line_numbers[i], rows[i].empty() ? 1 : rows[i].back().column);
    }
    for (std::size_t j = 0; j < cols; ++j) {
      try {
        m.at(i, j) = sf.parse(rows[i][j].text);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_numbers[i], rows[i][j].column);
      }
    }
  }
  return m;
}

}  // namespace

MatrixFile parse_matrices_text(std::string_view text) {
  MatrixFile out;
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }

  // Leading header: blank lines and '#' comments may precede the matrices,
  // and one comment may declare the semifield.
  std::size_t first = 0;
  bool kind_seen = false;
  while (first < lines.size()) {
    std::string_view line = trim(lines[first]);
    if (line.empty()) {
      ++first;
      continue;
    }
    if (line.front() != '#') break;
    std::string_view header = line;
    header.remove_prefix(1);
    header = trim(header);
    constexpr std::string_view key = "semifield:";
    if (header.substr(0, key.size()) == key) {
      if (kind_seen) {
        throw ParseError("duplicate semifield declaration", first + 1, 1);
      }
      std::string_view name = trim(header.substr(key.size()));
      auto kind = Semifield::kind_from_name(name);
      if (!kind) {
        throw ParseError("unknown semifield '" + std::string(name) +
                             "' (use max-plus or min-times)",
                         first + 1, 1);
      }
      out.kind = *kind;
      kind_seen = true;
    }
    ++first;
  }

  Semifield sf(out.kind);
  std::vector<std::vector<Token>> rows;
  std::vector<std::size_t> row_lines;
  auto flush = [&]() {
    if (rows.empty()) return;
    out.matrices.push_back(rows_to_matrix(sf, rows, row_lines));
    rows.clear();
    row_lines.clear();
  };

  for (std::size_t li = first; li < lines.size(); ++li) {
    std::string_view line = trim(lines[li]);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      throw ParseError("comments are only allowed in the leading header", li + 1, 1);
    }
    rows.push_back(split_row(lines[li]));
    row_lines.push_back(li + 1);
  }
  flush();

  if (out.matrices.empty()) throw ParseError("no matrix rows found");
  return out;
}

Problem parse_problem_text(std::string_view text) {
  MatrixFile file = parse_matrices_text(text);
  if (file.matrices.size() != 2) {
    throw ParseError("problem file must hold exactly two matrices separated by a blank line, "
                     "found " +
                     std::to_string(file.matrices.size()));
  }
  Problem p;
  p.kind = file.kind;
  p.a = file.matrices[0];
  p.b = file.matrices[1];
  if (p.a.rows() != p.b.rows()) {
    throw ParseError("matrices must have the same number of rows, got " +
                     std::to_string(p.a.rows()) + " and " + std::to_string(p.b.rows()));
  }
  return p;
}

Matrix parse_matrix_text(const Semifield& sf, std::string_view text) {
  std::vector<std::vector<Token>> rows;
  std::vector<std::size_t> row_lines;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    ++line_no;
    if (!trim(line).empty()) {
      rows.push_back(split_row(line));
      row_lines.push_back(line_no);
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (rows.empty()) throw ParseError("no matrix rows found");
  return rows_to_matrix(sf, rows, row_lines);
}

void validate_problem(const Problem& problem) {
  const Matrix* matrices[2] = {&problem.a, &problem.b};
  const char* names[2] = {"A", "B"};
  for (int which = 0; which < 2; ++which) {
    const Matrix& matrix = *matrices[which];
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
      bool finite = false;
      for (std::size_t j = 0; j < matrix.cols() && !finite; ++j)
        finite = matrix.at(i, j).is_finite();
      if (!finite) {
        throw DomainError("row-regularity violated at row " + std::to_string(i + 1) + " of " +
                          names[which]);
      }
    }
  }
}

std::string format_matrix_text(const Semifield& sf, const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += sf.format(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_problem_text(const Problem& problem) {
  Semifield sf(problem.kind);
  return "# semifield: " + sf.name() + "\n" + format_matrix_text(sf, problem.a) + "\n" +
         format_matrix_text(sf, problem.b);
}

std::vector<std::vector<std::string>> matrix_tokens(const Semifield& sf, const Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = sf.format(m.at(i, j));
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace tropeq
