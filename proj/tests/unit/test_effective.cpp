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

#include "bubblecalc/effective.hpp"
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

const ScalingDiagnostics& find(const std::vector<ScalingDiagnostics>& all, const Permutation& s, const Permutation& t) {
  for (const auto& d : all) {
    if (d.sigma == s && d.tau == t) return d;
  }
  throw std::logic_error("pair not found");
}

}  // namespace

TEST_CASE("necklaces reduce to a single power sum") {
  for (int k = 1; k <= 5; ++k) {
    const auto e = effective_observable(necklace(kSplit, k), kSplit);
    REQUIRE(e.terms.size() == 1);
    CHECK(e.coefficient({k}) == RationalFunc(1));
    CHECK(e.row_power == 2);
    CHECK(e.column_power == 2);
    const auto w = wishart_moment_exact({k}, Dimension::symbol(2), Dimension::symbol(2));
    CHECK(laguerre_reconstruct(e) == w);
  }
  CHECK(laguerre_reconstruct(effective_observable(necklace(kSplit, 1), kSplit)) == N.shifted(3));
}

TEST_CASE("the two-chain bubble averages to N/(N^2+1)(p_k p_l + p_{k+l})") {
  const RationalFunc expected(N, N.shifted(1) + 1);
  for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {1, 3}, {3, 2}}) {
    CAPTURE(k);
    CAPTURE(l);
    const auto e = effective_observable(edge_bubble(k, l), kSplit);
    CHECK(e.terms.size() == 2);
    CHECK(e.coefficient({k, l}) == expected);
    CHECK(e.coefficient({k + l}) == expected);
  }
  const auto e11 = effective_observable(edge_bubble(1, 1), kSplit);
  CHECK(e11.to_string() == "(N^1)/(N^2 + 1)*p_1*p_1 + (N^1)/(N^2 + 1)*p_2");
  CHECK(laguerre_reconstruct(e11) == N.shifted(6) + N.shifted(4));
}

TEST_CASE("Wishart moments") {
  const Dimension r = Dimension::numeric(3), c = Dimension::numeric(5);
  CHECK(wishart_moment_exact({1}, r, c) == LaurentPoly(15));
  CHECK(wishart_moment_exact({2}, r, c) == LaurentPoly(3 * 5 * (3 + 5)));
  CHECK(wishart_moment_exact({1, 1}, r, c) == LaurentPoly(9 * 25 + 15));
  CHECK(wishart_moment_exact({2}, Dimension::symbol(1), Dimension::symbol(1)) == N.shifted(2) * Rational(2));
  CHECK(wishart_moment_exact({}, r, c) == LaurentPoly(1));
  CHECK_THROWS_AS(wishart_moment_exact({5, 5}, r, c), std::out_of_range);
  CHECK_THROWS_AS(wishart_moment_exact({0}, r, c), std::invalid_argument);
}

TEST_CASE("single-trace Wishart moments match necklace Wick sums with per-color dimensions") {
  for (int k = 1; k <= 5; ++k) {
    for (const auto& dims : std::vector<std::vector<long>>{{2, 3, 1, 2}, {3, 2, 2, 1}, {2, 2, 2, 2}}) {
      const auto w = wishart_moment_exact({k}, Dimension::numeric(dims[0] * dims[2]), Dimension::numeric(dims[1] * dims[3]));
      CHECK(w == LaurentPoly(Rational(per_color_dimensions(necklace(kSplit, k), dims))));
    }
  }
}

TEST_CASE("Wishart leading coefficients") {
  for (int l = 1; l <= 5; ++l) {
    const auto sq = leading_term(wishart_moment_exact({l}, Dimension::symbol(1), Dimension::symbol(1)));
    CHECK(sq.exponent == l + 1);
    CHECK(sq.coefficient == Rational(catalan(l)));
    CHECK(wishart_moment_leading(l, Balance::square) == catalan(l));
  }
  for (int l = 1; l <= 4; ++l) {
    const auto un = leading_term(wishart_moment_exact({l}, Dimension::symbol(1), Dimension::symbol(3)));
    CHECK(un.coefficient == 1);
    CHECK(wishart_moment_leading(l, Balance::unbalanced) == 1);
  }
  CHECK(wishart_moment_leading(3, Balance::square) == 5);
  CHECK(wishart_moment_leading(1, Balance::square) == 1);
}

TEST_CASE("angular and Wick routes agree on random chain-expressible bubbles") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 6;
    const Bubble b = testing_oracle::random_chain_bubble(n, rng);
    const auto e = effective_observable(b, kSplit);
    for (const auto& [powers, c] : e.terms) {
      int s = 0;
      for (int p : powers) s += p;
      CHECK(s == n);
      CHECK(std::is_sorted(powers.rbegin(), powers.rend()));
    }
    CHECK(laguerre_reconstruct(e) == gaussian_expectation(b));
  }
}

TEST_CASE("angular and Wick routes agree on tree bubbles") {
  for_each_tree(3, 5, [](const CornerLabeledTree& t) {
    const Bubble b = tree_to_bubble(t);
    CHECK(laguerre_reconstruct(effective_observable(b, kSplit)) == gaussian_expectation(b));
  });
}

TEST_CASE("single row color: d = 3 split {2,3}") {
  const ColorSplit split(3, {2, 3});
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 5;
    const testing_oracle::Images rho = testing_oracle::random_images(static_cast<std::size_t>(n), rng);
    const Bubble b({Permutation(testing_oracle::random_images(static_cast<std::size_t>(n), rng)), Permutation(rho),
                    Permutation(rho)});
    if (!validate(b).ok()) continue;
    const auto e = effective_observable(b, split);
    CHECK(e.row_power == 1);
    CHECK(laguerre_reconstruct(e) == gaussian_expectation(b));
  }
}

TEST_CASE("non-expressible bubbles are refused with the violated condition") {
  const Bubble b({Permutation::identity(2), Permutation::identity(2), Permutation::identity(2), Permutation({1, 0})});
  try {
    effective_observable(b, kSplit);
    FAIL("expected refusal");
  } catch (const NotChainExpressibleError& e) {
    CHECK(e.detail().color_a == 2);
    CHECK(e.detail().color_b == 4);
  }
}

TEST_CASE("scaling diagnostics of the (1,1) bubble") {
  const auto diag = scaling_diagnostics(edge_bubble(1, 1), kSplit);
  REQUIRE(diag.size() == 4);
  const Permutation id = Permutation::identity(2), sw({1, 0});

  const auto& a = find(diag, id, id);
  CHECK(a.row_faces == std::vector<int>{1, 2});
  CHECK(a.f_box == 2);
  CHECK(a.f0 == 2);
  CHECK(a.exponent == 3);

  const auto& b = find(diag, sw, id);
  CHECK(b.row_faces == std::vector<int>{2, 1});
  CHECK(b.f_box == 2);
  CHECK(b.f0 == 1);
  CHECK(b.exponent == 2 + 1 + 2 * 2 + 2 * (1 - 4));

  const auto& c = find(diag, sw, sw);
  CHECK(c.row_faces == std::vector<int>{2, 1});
  CHECK(c.f_box == 1);
  CHECK(c.f0 == 2);
  CHECK(c.exponent == 2 + 1 + 2 * 1 + 2 * (2 - 4));

  for (const auto& d : diag) {
    CHECK(d.f0 == cycle_type(compose(d.sigma, d.tau.inverse())).length());
    CHECK(d.exponent == d.row_faces[0] + d.row_faces[1] + 2 * d.f_box + 2 * (d.f0 - 4));
  }
}

TEST_CASE("maximal diagnostics exponent is the scaled leading exponent") {
  for_each_tree(3, 5, [](const CornerLabeledTree& t) {
    const Bubble b = tree_to_bubble(t);
    const auto chains = require_chains(b, kSplit);
    if (chains.chain_count() > 4) return;
    int best = -1000;
    for (const auto& d : scaling_diagnostics(chains, kSplit)) best = std::max(best, d.exponent);
    const auto scaled = rescale(laguerre_reconstruct(effective_observable(chains, kSplit)), b.n(), 2).scaled;
    CHECK(best == leading_term(scaled).exponent);
  });
  const Bubble seven({Permutation::rotation(7, 1), Permutation::identity(7), Permutation::rotation(7, 2),
                      Permutation::identity(7)});
  CHECK(require_chains(seven, kSplit).chain_count() == 7);
  CHECK_THROWS_AS(scaling_diagnostics(seven, kSplit), std::out_of_range);
}

TEST_CASE("thread count does not change expansions") {
  std::mt19937_64 rng(77);
  const Bubble b = testing_oracle::random_chain_bubble(6, rng);
  const auto chains = require_chains(b, kSplit);
  const auto ref = effective_observable(chains, kSplit, {{}, 1});
  for (unsigned t : {2u, 8u}) {
    const auto e = effective_observable(chains, kSplit, {{}, t});
    CHECK(e.terms == ref.terms);
  }
  CHECK(wishart_moment_exact({3, 2, 2}, Dimension::symbol(1), Dimension::symbol(2), {9, 8}) ==
        wishart_moment_exact({3, 2, 2}, Dimension::symbol(1), Dimension::symbol(2), {9, 1}));
}
