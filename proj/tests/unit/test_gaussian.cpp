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

#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bubblecalc/gaussian.hpp"
#include "bubblecalc/tree.hpp"

using namespace bubblecalc;

namespace {

const LaurentPoly N = LaurentPoly::power(1);
const ColorSplit kSplit(4, {2, 4});

Bubble edge_bubble(int k, int l) {
  CornerLabeledTree t;
  t.root.labels = {k, 0};
  TreeVertex child;
  child.labels = {l};
  t.root.children = {child};
  return tree_to_bubble(t);
}

LaurentPoly from_coeffs(const std::vector<long long>& c) {
  LaurentPoly p;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e]) p.add_term(static_cast<int>(e), Rational(static_cast<long>(c[e])));
  }
  return p;
}

// Relabel whites by a and blacks by b: τ'_c = b ∘ τ_c ∘ a⁻¹.
Bubble relabel(const Bubble& x, const Permutation& a, const Permutation& b) {
  std::vector<Permutation> maps;
  for (const auto& t : x.color_maps()) maps.push_back(compose(b, t, a.inverse()));
  return Bubble(std::move(maps));
}

}  // namespace

TEST_CASE("small expectations") {
  const Bubble dipole = necklace(kSplit, 1);
  CHECK(gaussian_expectation(dipole) == N.shifted(3));
  const auto dd = dominant_contractions(dipole);
  CHECK(dd.exponent == 4);
  CHECK(dd.count == 1);

  const Bubble b11 = edge_bubble(1, 1);
  CHECK(gaussian_expectation(b11) == N.shifted(6) + N.shifted(4));
  const auto scaled = expectation_with_scaling(b11, 2);
  CHECK(scaled.alpha == 2);
  CHECK(scaled.scaled == N.shifted(2) + N);
  CHECK(leading_term(scaled.scaled) == LeadingTerm{3, 1});

  CHECK(dominant_contractions(edge_bubble(2, 1)).count == 2);
  CHECK(dominant_contractions(necklace(kSplit, 2)).count == 2);
}

TEST_CASE("agreement with an independent Wick enumeration") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 4;
    const int n = 1 + trial % 6;
    const Bubble b = testing_oracle::random_bubble(d, n, rng);
    CHECK(gaussian_expectation(b) == from_coeffs(testing_oracle::wick_polynomial(testing_oracle::images_of(b))));
  }
  for (int k = 1; k <= 6; ++k) {
    const Bubble b = necklace(kSplit, k);
    CHECK(gaussian_expectation(b) == from_coeffs(testing_oracle::wick_polynomial(testing_oracle::images_of(b))));
  }
}

TEST_CASE("per-color dimensions") {
  const Bubble dipole = necklace(kSplit, 1);
  const std::vector<long> dims{2, 3, 4, 5};
  CHECK(per_color_dimensions(dipole, dims) == 120);
  CHECK(per_color_dimensions(edge_bubble(1, 1), std::vector<long>{2, 2, 2, 2}) == 160);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 5;
    const Bubble b = testing_oracle::random_bubble(4, n, rng);
    CHECK(per_color_dimensions(b, std::vector<long>{1, 1, 1, 1}) == BigInt(static_cast<unsigned long>(factorial(n))));
    const auto poly = gaussian_expectation(b);
    for (long n0 : {2L, 3L, 5L}) {
      CHECK(Rational(per_color_dimensions(b, std::vector<long>(4, n0))) == poly.evaluate(Rational(n0)));
    }
  }
  CHECK_THROWS(per_color_dimensions(dipole, std::vector<long>{1, 2}));
}

TEST_CASE("expectations are invariant under relabeling vertices") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 6;
    const Bubble b = testing_oracle::random_bubble(4, n, rng);
    const Permutation a(testing_oracle::random_images(static_cast<std::size_t>(n), rng));
    const Permutation c(testing_oracle::random_images(static_cast<std::size_t>(n), rng));
    CHECK(gaussian_expectation(relabel(b, a, c)) == gaussian_expectation(b));
  }
}

TEST_CASE("positivity") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Bubble b = testing_oracle::random_bubble(4, 1 + trial % 6, rng);
    const auto p = gaussian_expectation(b);
    CHECK(leading_term(p).coefficient > 0);
    for (int n0 = 1; n0 <= 6; ++n0) CHECK(p.evaluate(Rational(n0)) > 0);
  }
}

TEST_CASE("thread count does not change the result") {
  std::mt19937_64 rng(4);
  const Bubble b = testing_oracle::random_bubble(4, 7, rng);
  const auto ref = gaussian_expectation(b, {9, 1});
  for (unsigned t : {2u, 3u, 8u}) CHECK(gaussian_expectation(b, {9, t}) == ref);
  const std::vector<long> dims{2, 3, 2, 3};
  CHECK(per_color_dimensions(b, dims, {9, 8}) == per_color_dimensions(b, dims, {9, 1}));
}

TEST_CASE("refusal above the bound carries a cost estimate") {
  const Bubble big = necklace(kSplit, 12);
  try {
    gaussian_expectation(big);
    FAIL("expected refusal");
  } catch (const OracleBoundExceeded& e) {
    CHECK(e.n() == 12);
    CHECK(e.pairings() == doctest::Approx(479001600.0));
    CHECK(e.estimated_seconds() > 0);
    CHECK(std::string(e.what()).find("Monte Carlo") != std::string::npos);
  }
  CHECK_THROWS_AS(gaussian_expectation(Bubble(std::vector<Permutation>(4, Permutation::identity(2)))),
                  std::invalid_argument);
}

TEST_CASE("rescale shifts by alpha times n") {
  const auto r = rescale(N.shifted(6) + N.shifted(4), 2, 3);
  CHECK(r.scaled == N + N.shifted(-2));
  CHECK(r.raw == N.shifted(6) + N.shifted(4));
}
