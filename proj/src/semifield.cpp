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

#include "tropeq/semifield.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace tropeq {

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational arithmetic overflowed the 64-bit carrier range");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t parse_int64(std::string_view s, const char* what) {
  std::int64_t out = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;  // from_chars rejects a leading '+'
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return out;
}

}  // namespace

Rational Rational::make128(__int128 n, __int128 d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  __int128 g = gcd128(n, d);
  Rational r;
  r.num_ = narrow(n / g);
  r.den_ = narrow(d / g);
  return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  *this = make128(static_cast<__int128>(n), static_cast<__int128>(d));
}

Rational Rational::operator+(const Rational& o) const {
  return make128(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                 static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<__int128>(num_));
  r.den_ = den_;
  return r;
}

Rational Rational::operator*(const Rational& o) const {
  return make128(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw DomainError("reciprocal of zero");
  return make128(static_cast<__int128>(den_), static_cast<__int128>(num_));
}

Rational Rational::pow_int(long long p) const {
  if (p < 0) return reciprocal().pow_int(-p);
  Rational acc(1);
  Rational base = *this;
  while (p > 0) {
    if (p & 1) acc = acc * base;
    p >>= 1;
    if (p > 0) base = base * base;
  }
  return acc;
}

int Rational::cmp(const Rational& o) const {
  __int128 lhs = static_cast<__int128>(num_) * o.den_;
  __int128 rhs = static_cast<__int128>(o.num_) * den_;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar token");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t n = parse_int64(text.substr(0, slash), "numerator");
    std::string_view den_part = text.substr(slash + 1);
    std::int64_t d = parse_int64(den_part, "denominator");
    if (d <= 0) throw ParseError("denominator must be a positive integer in '" +
                                 std::string(text) + "'");
    return Rational(n, d);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    if (dot == 0 || (dot == 1 && (text[0] == '-' || text[0] == '+'))) {
      throw ParseError("decimal literal needs digits before the point: '" + std::string(text) +
                       "'");
    }
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) throw ParseError("decimal literal needs digits after the point: '" +
                                       std::string(text) + "'");
    if (frac.size() > 18) throw ParseError("decimal literal has too many fractional digits: '" +
                                           std::string(text) + "'");
    bool neg = text[0] == '-';
    std::int64_t whole = parse_int64(text.substr(0, dot), "decimal literal");
    std::int64_t frac_digits = parse_int64(frac, "decimal literal");
    if (frac_digits < 0) throw ParseError("malformed decimal literal '" + std::string(text) + "'");
    __int128 den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    __int128 num = static_cast<__int128>(whole) * den;
    num += neg ? -static_cast<__int128>(frac_digits) : static_cast<__int128>(frac_digits);
    return make128(num, den);
  }

  return Rational(parse_int64(text, "scalar literal"));
}

Scalar Semifield::one() const {
  return Scalar::from(Rational(kind_ == SemifieldKind::MaxPlus ? 0 : 1));
}

Scalar Semifield::make(const Rational& v) const {
  if (kind_ == SemifieldKind::MinTimes && v.cmp(Rational(0)) <= 0) {
    throw DomainError("min-times carrier values must be positive, got " + v.str());
  }
  return Scalar::from(v);
}

bool Semifield::leq_core(const Scalar& a, const Scalar& b) const {
  if (a.is_eps()) return true;
  if (b.is_eps()) return false;
  int c = a.value().cmp(b.value());
  // min-times order is the reverse of the numeric order.
  return kind_ == SemifieldKind::MaxPlus ? c <= 0 : c >= 0;
}

Scalar Semifield::add(const Scalar& a, const Scalar& b) const {
  return leq_core(a, b) ? b : a;  // selective: returns the ⊕-larger argument
}

Scalar Semifield::mul(const Scalar& a, const Scalar& b) const {
  if (a.is_eps() || b.is_eps()) return Scalar::eps();
  return kind_ == SemifieldKind::MaxPlus ? Scalar::from(a.value() + b.value())
                                         : Scalar::from(a.value() * b.value());
}

Scalar Semifield::inv(const Scalar& a) const {
  if (a.is_eps()) throw DomainError("the zero element has no multiplicative inverse");
  return kind_ == SemifieldKind::MaxPlus ? Scalar::from(-a.value())
                                         : Scalar::from(a.value().reciprocal());
}

Scalar Semifield::pow(const Scalar& a, long long p) const {
  if (a.is_eps()) {
    if (p >= 1) return Scalar::eps();
    throw DomainError("the zero element cannot be raised to exponent " + std::to_string(p));
  }
  if (p == 0) return one();
  return kind_ == SemifieldKind::MaxPlus ? Scalar::from(a.value() * Rational(p))
                                         : Scalar::from(a.value().pow_int(p));
}

bool Semifield::eq(const Scalar& a, const Scalar& b) const {
  if (a.is_eps() || b.is_eps()) return a.is_eps() == b.is_eps();
  if (a.value() == b.value()) return true;
  if (mode_ == CompareMode::Tolerant) {
    return std::fabs(a.value().to_double() - b.value().to_double()) <= tol_;
  }
  return false;
}

bool Semifield::leq(const Scalar& a, const Scalar& b) const {
  return leq_core(a, b) || (mode_ == CompareMode::Tolerant && eq(a, b));
}

Scalar Semifield::meet(const Scalar& a, const Scalar& b) const {
  return leq_core(a, b) ? a : b;
}

Scalar Semifield::parse(std::string_view token) const {
  if (token == "." || token == "eps") return Scalar::eps();
  if (token == "-inf") {
    if (kind_ == SemifieldKind::MaxPlus) return Scalar::eps();
    throw ParseError("'-inf' is the max-plus zero; min-times spells it '+inf', '.' or 'eps'");
  }
  if (token == "+inf") {
    if (kind_ == SemifieldKind::MinTimes) return Scalar::eps();
    throw ParseError("'+inf' is the min-times zero; max-plus spells it '-inf', '.' or 'eps'");
  }
  try {
    return make(Rational::parse(token));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string Semifield::format(const Scalar& a) const {
  return a.is_eps() ? "." : a.value().str();
}

std::string Semifield::name() const {
  return kind_ == SemifieldKind::MaxPlus ? "max-plus" : "min-times";
}

std::optional<SemifieldKind> Semifield::kind_from_name(std::string_view name) {
  if (name == "max-plus" || name == "maxplus") return SemifieldKind::MaxPlus;
  if (name == "min-times" || name == "mintimes") return SemifieldKind::MinTimes;
  return std::nullopt;
}

}  // namespace tropeq
