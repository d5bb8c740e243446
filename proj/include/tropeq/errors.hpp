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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropeq {

/** Base class for all library errors. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Operand dimensions do not fit the operation. */
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

/**
 * A value or argument is outside the domain of the operation:
 * inverting the zero element, a non-positive min-times carrier value,
 * an invalid row selection, parameters that are identically zero, ...
 */
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/** Malformed text input; carries a 1-based source position when known. */
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(render(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string render(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    std::string where = "line " + std::to_string(line);
    if (column != 0) where += ", column " + std::to_string(column);
    return where + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace tropeq
