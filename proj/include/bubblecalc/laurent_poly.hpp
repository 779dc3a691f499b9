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

#include <map>
#include <string>
#include <utility>

#include "bubblecalc/combinatorics.hpp"

namespace bubblecalc {

/// Exact Laurent polynomial in the single symbol N with rational coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT

  static LaurentPoly monomial(const Rational& coeff, int exp);
  static LaurentPoly power(int exp) { return monomial(1, exp); }  // N^exp

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Terms& terms() const { return terms_; }
  Rational coefficient(int exp) const;
  /// Throws std::domain_error on the zero polynomial.
  int max_exponent() const;
  int min_exponent() const;

  /// Adds c·N^exp in place.
  void add_term(int exp, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplies by N^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes N -> N^p (p >= 1).
  LaurentPoly substitute_power(int p) const;
  /// Value at N = x; x must be nonzero when negative exponents are present.
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;

  /// "N^3 + N^1", "2*N^3 - 1/2*N^-1", "5". The zero polynomial prints "0".
  std::string to_string() const;

 private:
  Terms terms_;
};

struct LeadingTerm {
  int exponent;
  Rational coefficient;
  friend bool operator==(const LeadingTerm&, const LeadingTerm&) = default;
};

/// Term of maximal exponent; throws std::domain_error on zero.
LeadingTerm leading_term(const LaurentPoly& p);

/// Exact rational as "p/q" (or "p" for integers).
std::string rational_to_string(const Rational& q);
/// Parses "p/q", "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

}  // namespace bubblecalc
