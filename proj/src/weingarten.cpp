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

#include "bubblecalc/weingarten.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "bubblecalc/combinatorics.hpp"

namespace bubblecalc {

Dimension Dimension::parse(const std::string& text) {
  if (text == "N") return symbol(1);
  if (text.rfind("N^", 0) == 0) {
    try {
      std::size_t used = 0;
      const int p = std::stoi(text.substr(2), &used);
      if (used == text.size() - 2 && p >= 1) return symbol(p);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("malformed dimension: " + text);
  }
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used == text.size() && v >= 1) return numeric(v);
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("malformed dimension: " + text + " (expected N, N^p or a positive integer)");
}

LaurentPoly Dimension::as_poly() const {
  return symbolic ? LaurentPoly::power(power) : LaurentPoly(Rational(value));
}

std::string Dimension::to_string() const {
  if (!symbolic) return std::to_string(value);
  return power == 1 ? "N" : "N^" + std::to_string(power);
}

std::size_t ConjugacyClassTable::index_of(const Partition& p) const {
  auto it = std::find(classes.begin(), classes.end(), p);
  if (it == classes.end()) throw std::invalid_argument(p.to_string() + " is not a partition of " + std::to_string(n));
  return static_cast<std::size_t>(it - classes.begin());
}

ConjugacyClassTable class_table(int n) {
  if (n < 1) throw std::invalid_argument("class_table: n must be >= 1");
  ConjugacyClassTable t;
  t.n = n;
  t.classes = partitions_of(n);
  for (const auto& p : t.classes) t.class_sizes.push_back(class_size(p));
  return t;
}

namespace {

// Cycle counts of σ_a τ⁻¹ aggregated per class of τ.
std::vector<std::vector<std::map<int, std::uint64_t>>> gram_histogram(const ConjugacyClassTable& t) {
  const std::size_t k = t.classes.size();
  std::vector<Permutation> reps;
  for (const auto& p : t.classes) reps.push_back(Permutation::from_cycle_lengths(p.parts));
  std::vector<std::vector<std::map<int, std::uint64_t>>> hist(k, std::vector<std::map<int, std::uint64_t>>(k));
  for_each_permutation(t.n, [&](const Permutation& tau) {
    const std::size_t b = t.index_of(cycle_type(tau));
    const Permutation tau_inv = tau.inverse();
    for (std::size_t a = 0; a < k; ++a) ++hist[a][b][cycles_of_product(reps[a].images(), tau_inv.images())];
  });
  return hist;
}

template <class Field>
std::vector<Field> solve(std::vector<std::vector<Field>> a, std::vector<Field> rhs) {
  const std::size_t k = a.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a[piv][col] == Field(0)) ++piv;
    if (piv == k) throw std::domain_error("singular Gram matrix");
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = col + 1; r < k; ++r) {
      if (a[r][col] == Field(0)) continue;
      const Field f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < k; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Field> x(k);
  for (std::size_t i = k; i-- > 0;) {
    Field s = rhs[i];
    for (std::size_t c = i + 1; c < k; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

// Weingarten values as rational functions of the dimension symbol x (N^1).
std::shared_ptr<const std::vector<RationalFunc>> symbolic_values(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const std::vector<RationalFunc>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const auto t = class_table(n);
  const auto g = gram_matrix(n);
  std::vector<std::vector<RationalFunc>> a;
  for (const auto& row : g) a.emplace_back(row.begin(), row.end());
  std::vector<RationalFunc> rhs(t.classes.size(), RationalFunc(0));
  rhs[t.identity_index()] = RationalFunc(1);
  auto values = std::make_shared<const std::vector<RationalFunc>>(solve(std::move(a), std::move(rhs)));
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(values)).first->second;
}

std::vector<Rational> numeric_values(int n, long m) {
  const auto t = class_table(n);
  const auto hist = gram_histogram(t);
  const std::size_t k = t.classes.size();
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (const auto& [cyc, count] : hist[i][j]) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(cyc));
        a[i][j] += Rational(p * BigInt(static_cast<unsigned long>(count)));
      }
    }
  }
  std::vector<Rational> rhs(k, Rational(0));
  rhs[t.identity_index()] = 1;
  return solve(std::move(a), std::move(rhs));
}

void check_bounds(int n, const WeingartenOptions& opts) {
  if (n < 1) throw std::invalid_argument("Weingarten functions need n >= 1");
  if (n > opts.n_max) {
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds the configured Weingarten bound n_max = " +
                            std::to_string(opts.n_max));
  }
}

}  // namespace

std::vector<std::vector<LaurentPoly>> gram_matrix(int n) {
  const auto t = class_table(n);
  const auto hist = gram_histogram(t);
  std::vector<std::vector<LaurentPoly>> g(hist.size(), std::vector<LaurentPoly>(hist.size()));
  for (std::size_t a = 0; a < hist.size(); ++a) {
    for (std::size_t b = 0; b < hist.size(); ++b) {
      for (const auto& [cyc, count] : hist[a][b]) g[a][b].add_term(cyc, Rational(BigInt(static_cast<unsigned long>(count))));
    }
  }
  return g;
}

WeingartenTable weingarten_table(int n, const Dimension& dim, const WeingartenOptions& opts) {
  check_bounds(n, opts);
  WeingartenTable table;
  table.n = n;
  table.dim = dim;
  table.classes = class_table(n);
  if (dim.symbolic) {
    if (dim.power < 1) throw std::invalid_argument("symbolic dimension power must be >= 1");
    for (const auto& v : *symbolic_values(n)) table.values.push_back(v.substitute_power(dim.power));
  } else {
    if (dim.value < n) {
      throw std::domain_error("numeric dimension " + std::to_string(dim.value) + " < n = " + std::to_string(n) +
                              ": Gram matrix is singular");
    }
    for (const auto& v : numeric_values(n, dim.value)) table.values.emplace_back(v);
  }
  return table;
}

RationalFunc weingarten_exact(const Partition& cls, const Dimension& dim, const WeingartenOptions& opts) {
  return weingarten_table(cls.size(), dim, opts).value(cls);
}

Rational weingarten_exact(const Partition& cls, long dim, const WeingartenOptions& opts) {
  return weingarten_exact(cls, Dimension::numeric(dim), opts).numerator().coefficient(0);
}

AsymptoticMonomial weingarten_asymptotic(const Partition& cls) {
  const int n = cls.size();
  Rational coeff = 1;
  for (int j : cls.parts) {
    Rational f(catalan(j - 1));
    if ((j - 1) % 2 == 1) f = -f;
    coeff *= f;
  }
  return {cls.length() - 2 * n, coeff};
}

std::vector<std::vector<Rational>> group_gram_matrix(int n, long m) {
  const auto total = static_cast<std::size_t>(factorial(n));
  std::vector<Permutation> perms;
  perms.reserve(total);
  for_each_permutation(n, [&](const Permutation& p) { perms.push_back(p); });
  std::vector<std::vector<Rational>> g(total, std::vector<Rational>(total));
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      BigInt p;
      const int cyc = compose(perms[i], perms[j].inverse()).cycle_count();
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(cyc));
      g[i][j] = Rational(p);
    }
  }
  return g;
}

std::vector<std::vector<Rational>> group_weingarten_matrix(int n, long m, const WeingartenOptions& opts) {
  const auto table = weingarten_table(n, Dimension::numeric(m), opts);
  const auto total = static_cast<std::size_t>(factorial(n));
  std::vector<Permutation> perms;
  perms.reserve(total);
  for_each_permutation(n, [&](const Permutation& p) { perms.push_back(p); });
  std::vector<std::vector<Rational>> w(total, std::vector<Rational>(total));
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      w[i][j] = table.value(cycle_type(compose(perms[i], perms[j].inverse()))).numerator().coefficient(0);
    }
  }
  return w;
}

}  // namespace bubblecalc
