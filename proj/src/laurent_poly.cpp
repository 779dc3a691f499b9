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

#include "bubblecalc/laurent_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace bubblecalc {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int exp) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

Rational LaurentPoly::coefficient(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  return terms_.rbegin()->first;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  return terms_.begin()->first;
}

void LaurentPoly::add_term(int exp, const Rational& coeff) {
  Rational c = coeff;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int p) const {
  if (p < 1) throw std::invalid_argument("substitute_power: power must be >= 1");
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e * p, c);
  return r;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (x == 0 && !terms_.empty() && min_exponent() < 0) {
    throw std::domain_error("evaluate: negative power at N = 0");
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational xp = 1;
    mpz_pow_ui(xp.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    mpz_pow_ui(xp.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    xp.canonicalize();
    if (e < 0) xp = 1 / xp;
    sum += c * xp;
  }
  return sum;
}

double LaurentPoly::evaluate(double x) const {
  double sum = 0;
  for (const auto& [e, c] : terms_) sum += c.get_d() * std::pow(x, e);
  return sum;
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational string");
  for (char ch : s) {
    if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9'))) {
      throw std::invalid_argument("malformed rational: " + s);
    }
  }
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("malformed rational: " + s);
  q.canonicalize();
  return q;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += rational_to_string(mag);
      continue;
    }
    if (mag != 1) s += rational_to_string(mag) + "*";
    s += "N^" + std::to_string(e);
  }
  return s;
}

LeadingTerm leading_term(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("leading_term of the zero polynomial");
  const auto& [e, c] = *p.terms().rbegin();
  return {e, c};
}

}  // namespace bubblecalc
