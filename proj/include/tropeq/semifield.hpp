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
#include <optional>
#include <string>
#include <string_view>

#include "tropeq/errors.hpp"

namespace tropeq {

/**
 * Exact rational number with a normalized int64 numerator/denominator.
 *
 * Invariants: den > 0, gcd(|num|, den) = 1. All arithmetic runs through
 * 128-bit intermediates; results that do not fit back into int64 throw
 * std::overflow_error instead of wrapping.
 */
class Rational {
 public:
  constexpr Rational() = default;
  explicit Rational(std::int64_t n) : num_(n) {}
  Rational(std::int64_t n, std::int64_t d);

  /** Accepts integer ("3", "-2"), fraction ("1/4"), or decimal ("2.5") literals. */
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator-() const;
  Rational operator*(const Rational& o) const;
  Rational reciprocal() const;

  /** Integer power; negative exponents go through the reciprocal. */
  Rational pow_int(long long p) const;

  /** Exact three-way comparison: negative, zero, or positive. */
  int cmp(const Rational& o) const;
  bool operator==(const Rational& o) const = default;
  bool operator<(const Rational& o) const { return cmp(o) < 0; }

  double to_double() const;
  /** Canonical text: "3", "-2", "1/4". parse(str()) reproduces the value exactly. */
  std::string str() const;

 private:
  static Rational make128(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/**
 * Semifield element: either the zero element (the neutral of ⊕, written ε)
 * or a finite rational carrier value. The default-constructed scalar is ε.
 */
class Scalar {
 public:
  constexpr Scalar() = default;

  static Scalar eps() { return Scalar(); }
  static Scalar from(const Rational& v) {
    Scalar s;
    s.v_ = v;
    s.finite_ = true;
    return s;
  }

  bool is_eps() const { return !finite_; }
  bool is_finite() const { return finite_; }

  /** Carrier value; calling this on ε is a programming error. */
  const Rational& value() const {
    if (!finite_) throw DomainError("attempted to read the carrier value of the zero element");
    return v_;
  }

  bool operator==(const Scalar& o) const = default;

 private:
  Rational v_{};
  bool finite_ = false;
};

enum class SemifieldKind { MaxPlus, MinTimes };
enum class CompareMode { Exact, Tolerant };

/**
 * An idempotent semifield over rational carrier values with a distinguished
 * zero element ε. Two instances are provided:
 *
 *   max-plus : carrier = rationals, ⊕ = max, ⊗ = +, ε = -inf, unit = 0
 *   min-times: carrier = positive rationals, ⊕ = min, ⊗ = ×, ε = +inf, unit = 1
 *
 * ⊕ is idempotent and selective (always returns one of its arguments), so
 * "a ≤ b iff a ⊕ b = b" is a total order with ε as the least element; in
 * min-times that order is the reverse of the numeric one. Every finite
 * element is ⊗-invertible and inversion is antitone.
 *
 * The comparison mode only affects leq/eq verdicts: Tolerant treats values
 * within an absolute tolerance as equal. Arithmetic (⊕ selection included)
 * always uses exact order so results stay deterministic.
 */
class Semifield {
 public:
  explicit Semifield(SemifieldKind kind, CompareMode mode = CompareMode::Exact,
                     double tolerance = 1e-9)
      : kind_(kind), mode_(mode), tol_(tolerance) {}

  static Semifield max_plus() { return Semifield(SemifieldKind::MaxPlus); }
  static Semifield min_times() { return Semifield(SemifieldKind::MinTimes); }

  SemifieldKind kind() const { return kind_; }
  CompareMode mode() const { return mode_; }
  double tolerance() const { return tol_; }
  bool exact() const { return mode_ == CompareMode::Exact; }

  Scalar zero() const { return Scalar::eps(); }
  Scalar one() const;

  /** Wraps a rational as a scalar, validating the carrier (min-times requires > 0). */
  Scalar make(const Rational& v) const;
  /** Convenience for integer carrier values. */
  Scalar num(std::int64_t n) const { return make(Rational(n)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  /** Multiplicative inverse; ε has none. */
  Scalar inv(const Scalar& a) const;
  /**
   * Integer power: x^0 = unit for finite x, ε^p = ε for p >= 1;
   * ε with exponent <= 0 is a domain error.
   */
  Scalar pow(const Scalar& a, long long p) const;

  /** Order induced by ⊕ (a ≤ b iff a ⊕ b = b); tolerance-aware in Tolerant mode. */
  bool leq(const Scalar& a, const Scalar& b) const;
  bool eq(const Scalar& a, const Scalar& b) const;
  /** Greatest lower bound in the ⊕-order (the argument ⊕ would discard). */
  Scalar meet(const Scalar& a, const Scalar& b) const;

  /**
   * Parses one scalar token. ε is spelled "." or "eps", plus "-inf" in
   * max-plus and "+inf" in min-times; anything else must be a rational
   * literal inside the carrier.
   */
  Scalar parse(std::string_view token) const;
  /** Canonical token: "." for ε, otherwise the rational literal. */
  std::string format(const Scalar& a) const;

  std::string name() const;
  static std::optional<SemifieldKind> kind_from_name(std::string_view name);

 private:
  bool leq_core(const Scalar& a, const Scalar& b) const;  // exact, mode-independent

  SemifieldKind kind_;
  CompareMode mode_;
  double tol_;
};

}  // namespace tropeq
