// Copyright 2026 The bubblecalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <utility>

#include "bubblecalc/laurent_poly.hpp"

namespace bubblecalc {

// Ordinary polynomial helpers over Q. Arguments must have no negative exponents.
namespace poly {

/// a = q*b + r with deg r < deg b. Throws std::domain_error if b is zero.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace poly

/// Ratio of Laurent polynomials in N, always held in canonical form:
/// numerator and denominator are ordinary polynomials with no common factor,
/// the denominator has integer coefficients with content 1 and a positive
/// leading coefficient. Zero is 0/1. Two values are equal iff their canonical
/// forms are identical.
class RationalFunc {
 public:
  RationalFunc() : den_(1) {}
  RationalFunc(const LaurentPoly& p);  // NOLINT
  RationalFunc(const Rational& c) : RationalFunc(LaurentPoly(c)) {}  // NOLINT
  RationalFunc(int c) : RationalFunc(LaurentPoly(c)) {}  // NOLINT
  /// Throws std::domain_error on a zero denominator.
  RationalFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is a monomial, i.e. the value is a Laurent polynomial.
  bool is_laurent() const { return den_.is_monomial(); }
  /// Throws std::domain_error unless is_laurent().
  LaurentPoly to_laurent() const;

  RationalFunc& operator+=(const RationalFunc& o);
  RationalFunc& operator-=(const RationalFunc& o);
  RationalFunc& operator*=(const RationalFunc& o);
  RationalFunc& operator/=(const RationalFunc& o);
  RationalFunc operator-() const;
  friend RationalFunc operator+(RationalFunc a, const RationalFunc& b) { return a += b; }
  friend RationalFunc operator-(RationalFunc a, const RationalFunc& b) { return a -= b; }
  friend RationalFunc operator*(RationalFunc a, const RationalFunc& b) { return a *= b; }
  friend RationalFunc operator/(RationalFunc a, const RationalFunc& b) { return a /= b; }
  friend bool operator==(const RationalFunc& a, const RationalFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Substitutes N -> N^p (p >= 1); the result stays canonical.
  RationalFunc substitute_power(int p) const;
  /// Throws std::domain_error if the denominator vanishes at x.
  Rational evaluate(const Rational& x) const;

  /// "(N^1)/(N^2 + 1)"; plain polynomial form when the denominator is 1.
  std::string to_string() const;

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace bubblecalc
