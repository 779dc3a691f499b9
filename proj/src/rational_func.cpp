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

#include "bubblecalc/rational_func.hpp"

#include <stdexcept>

namespace bubblecalc {

namespace poly {

namespace {

void require_polynomial(const LaurentPoly& p) {
  if (!p.is_zero() && p.min_exponent() < 0) {
    throw std::invalid_argument("polynomial operation on a negative power of N");
  }
}

LaurentPoly monic(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / leading_term(p).coefficient);
}

}  // namespace

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  require_polynomial(a);
  require_polynomial(b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto [db, lb] = leading_term(b);
  LaurentPoly q;
  LaurentPoly r = a;
  while (!r.is_zero() && r.max_exponent() >= db) {
    const auto [dr, lr] = leading_term(r);
    const Rational c = lr / lb;
    q.add_term(dr - db, c);
    for (const auto& [e, cb] : b.terms()) r.add_term(e + dr - db, -c * cb);
  }
  return {std::move(q), std::move(r)};
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = monic(a);
  LaurentPoly y = monic(b);
  while (!y.is_zero()) {
    LaurentPoly r = monic(divmod(x, y).second);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace poly

RationalFunc::RationalFunc(const LaurentPoly& p) : num_(p), den_(1) {
  if (!num_.is_zero() && num_.min_exponent() < 0) canonicalize();
}

RationalFunc::RationalFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

void RationalFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Clear negative powers: num/den = N^s * num'/den' with num', den' having N^0 terms.
  const int s = num_.min_exponent() - den_.min_exponent();
  num_ = num_.shifted(-num_.min_exponent());
  den_ = den_.shifted(-den_.min_exponent());

  if (den_.max_exponent() > 0 && num_.max_exponent() > 0) {
    LaurentPoly g = poly::gcd(num_, den_);
    if (g.max_exponent() > 0) {
      num_ = poly::divmod(num_, g).first;
      den_ = poly::divmod(den_, g).first;
    }
  }
  if (s > 0) num_ = num_.shifted(s);
  if (s < 0) den_ = den_.shifted(-s);

  // Scale the denominator to a primitive integer polynomial with positive lead.
  BigInt lcm_den = 1;
  for (const auto& [e, c] : den_.terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  BigInt content = 0;
  for (const auto& [e, c] : den_.terms()) {
    BigInt v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(lcm_den, content);
  scale.canonicalize();
  if (leading_term(den_).coefficient < 0) scale = -scale;
  if (scale != 1) {
    num_ *= scale;
    den_ *= scale;
  }
}

LaurentPoly RationalFunc::to_laurent() const {
  if (!is_laurent()) throw std::domain_error("rational function is not a Laurent polynomial: " + to_string());
  const auto [e, c] = leading_term(den_);
  return (num_ * Rational(1 / c)).shifted(-e);
}

RationalFunc& RationalFunc::operator+=(const RationalFunc& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunc& RationalFunc::operator-=(const RationalFunc& o) { return *this += -o; }

RationalFunc& RationalFunc::operator*=(const RationalFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RationalFunc& RationalFunc::operator/=(const RationalFunc& o) {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

RationalFunc RationalFunc::operator-() const {
  RationalFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunc RationalFunc::substitute_power(int p) const {
  RationalFunc r;
  r.num_ = num_.substitute_power(p);
  r.den_ = den_.substitute_power(p);
  return r;
}

Rational RationalFunc::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_.evaluate(x) / d;
}

std::string RationalFunc::to_string() const {
  if (den_ == LaurentPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace bubblecalc
