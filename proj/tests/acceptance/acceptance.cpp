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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. Tolerances and time limits are fixed below.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "bubblecalc/effective.hpp"
#include "bubblecalc/gaussian.hpp"
#include "bubblecalc/montecarlo.hpp"
#include "bubblecalc/tree.hpp"
#include "bubblecalc/weingarten.hpp"

using namespace bubblecalc;

namespace {

constexpr double kStandardErrors = 5.0;  // Monte Carlo concordance band
constexpr std::uint64_t kSamples = 100000;
constexpr std::uint64_t kSeed = 20260101;

const LaurentPoly N = LaurentPoly::power(1);
const ColorSplit kSplit(4, {2, 4});

struct Outcome {
  bool pass = true;
  std::string detail;  // first failure, if any
  std::string digest;  // exact outputs, compared across thread counts

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  std::string name;
  double seconds_limit;
  std::function<Outcome(unsigned threads)> run;
};

TreeVertex vertex(int color, std::vector<int> labels, std::vector<TreeVertex> children = {}) {
  TreeVertex v;
  v.color = color;
  v.labels = std::move(labels);
  v.children = std::move(children);
  return v;
}

Bubble edge_bubble(int k, int l) { return tree_to_bubble(CornerLabeledTree{vertex(1, {k, 0}, {vertex(1, {l})})}); }

Rational ipow(long m, int e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(e));
  return Rational(p);
}

Outcome weingarten_two(unsigned) {
  Outcome o;
  const LaurentPoly m2 = N.shifted(1);
  const RationalFunc one_one = weingarten_exact(Partition{1, 1}, Dimension::symbol(1));
  const RationalFunc two = weingarten_exact(Partition{2}, Dimension::symbol(1));
  o.expect(one_one == RationalFunc(LaurentPoly(1), m2 - 1), "Wg(1,1) != 1/(m^2-1): " + one_one.to_string());
  o.expect(two == RationalFunc(LaurentPoly(-1), N * (m2 - 1)), "Wg(2) != -1/(m(m^2-1)): " + two.to_string());
  // m = N²: 1/(N⁴−1) and −1/(N²(N⁴−1)).
  const RationalFunc a = weingarten_exact(Partition{1, 1}, Dimension::symbol(2));
  const RationalFunc b = weingarten_exact(Partition{2}, Dimension::symbol(2));
  o.expect(a == RationalFunc(LaurentPoly(1), N.shifted(3) - 1), "Wg_{N^2}(1,1): " + a.to_string());
  o.expect(b == RationalFunc(LaurentPoly(-1), N.shifted(1) * (N.shifted(3) - 1)), "Wg_{N^2}(2): " + b.to_string());
  o.digest = one_one.to_string() + ";" + two.to_string() + ";" + a.to_string() + ";" + b.to_string();
  return o;
}

Outcome orthogonality(unsigned) {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    std::vector<Permutation> perms;
    for_each_permutation(n, [&](const Permutation& p) { perms.push_back(p); });
    for (long m : {7L, 11L}) {
      const auto w = group_weingarten_matrix(n, m);
      bool identity = true;
      for (std::size_t i = 0; i < perms.size(); ++i) {
        for (std::size_t j = 0; j < perms.size(); ++j) {
          Rational s = 0;
          for (std::size_t k = 0; k < perms.size(); ++k) {
            s += ipow(m, compose(perms[i], perms[k].inverse()).cycle_count()) * w[k][j];
          }
          identity = identity && s == (i == j ? 1 : 0);
        }
      }
      o.expect(identity, "Gram x Wg != I at n=" + std::to_string(n) + ", m=" + std::to_string(m));
      o.digest += std::to_string(n) + "," + std::to_string(m) + ":" + (identity ? "I;" : "X;");
    }
  }
  return o;
}

Outcome two_chain_effective(unsigned threads) {
  Outcome o;
  const RationalFunc expected(N, N.shifted(1) + 1);
  for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
    const auto e = effective_observable(edge_bubble(k, l), kSplit, {{}, threads});
    std::vector<int> kl{k, l};
    std::sort(kl.rbegin(), kl.rend());
    const bool ok = e.terms.size() == 2 && e.terms.count(kl) && e.terms.count({k + l}) && e.terms.at(kl) == expected &&
                    e.terms.at({k + l}) == expected;
    o.expect(ok, "(" + std::to_string(k) + "," + std::to_string(l) + "): " + e.to_string());
    o.digest += e.to_string() + ";";
  }
  return o;
}

Outcome two_path(unsigned threads) {
  Outcome o;
  std::vector<Bubble> suite;
  for_each_tree(3, 7, [&](const CornerLabeledTree& t) { suite.push_back(tree_to_bubble(t)); });
  for (int k = 1; k <= 7; ++k) suite.push_back(necklace(kSplit, k));
  std::mt19937_64 rng(kSeed);
  while (suite.size() < 10 || suite.size() % 10 != 0) {
    const int n = 2 + static_cast<int>(suite.size() % 5);
    std::vector<int> img(static_cast<std::size_t>(n));
    auto shuffled = [&] {
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      return Permutation(img);
    };
    const Permutation rho = shuffled();
    Bubble b({shuffled(), rho, shuffled(), rho});
    if (validate(b).ok()) suite.push_back(std::move(b));
  }
  for (const auto& b : suite) {
    const auto rec = laguerre_reconstruct(effective_observable(b, kSplit, {{}, threads}), {9, threads});
    const auto wick = gaussian_expectation(b, {9, threads});
    o.expect(rec == wick, "mismatch at n=" + std::to_string(b.n()) + ": " + rec.to_string() + " vs " + wick.to_string());
    o.digest += rec.to_string() + ";";
  }
  o.detail = o.pass ? std::to_string(suite.size()) + " bubbles" : o.detail;
  return o;
}

Outcome large_n(unsigned threads) {
  Outcome o;
  for (int k = 1; k <= 4; ++k) {
    for (int l = 1; k + l <= 5; ++l) {
      const Bubble b = edge_bubble(k, l);
      const auto lead = leading_term(expectation_with_scaling(b, 2, {9, threads}).scaled);
      const LeadingTerm want{3, Rational(catalan(k) * catalan(l))};
      o.expect(lead == want, "(" + std::to_string(k) + "," + std::to_string(l) + "): exponent " +
                                 std::to_string(lead.exponent) + ", coefficient " + rational_to_string(lead.coefficient));
      o.digest += std::to_string(lead.exponent) + ":" + rational_to_string(lead.coefficient) + ";";
    }
  }
  return o;
}

Outcome catalan_law(unsigned threads) {
  Outcome o;
  std::size_t count = 0;
  for_each_tree(3, 5, [&](const CornerLabeledTree& t) {
    const auto lead = leading_term(gaussian_expectation(tree_to_bubble(t), {9, threads}));
    const BigInt want = catalan_product(t);
    o.expect(lead.coefficient == Rational(want), t.to_string() + ": oracle " + rational_to_string(lead.coefficient) +
                                                     " vs " + want.get_str());
    o.digest += t.to_string() + "=" + rational_to_string(lead.coefficient) + ";";
    ++count;
  });
  if (o.pass) o.detail = std::to_string(count) + " trees";
  return o;
}

Outcome wishart_asymptotics(unsigned threads) {
  Outcome o;
  for (int l = 1; l <= 5; ++l) {
    const auto lead = leading_term(wishart_moment_exact({l}, Dimension::symbol(1), Dimension::symbol(1), {9, threads}));
    o.expect(lead.coefficient == Rational(catalan(l)) && lead.coefficient == Rational(wishart_moment_leading(l, Balance::square)),
             "square l=" + std::to_string(l) + ": " + rational_to_string(lead.coefficient));
    o.digest += rational_to_string(lead.coefficient) + ";";
  }
  for (int l = 1; l <= 4; ++l) {
    const auto lead = leading_term(wishart_moment_exact({l}, Dimension::symbol(1), Dimension::symbol(3), {9, threads}));
    o.expect(lead.coefficient == 1 && wishart_moment_leading(l, Balance::unbalanced) == 1,
             "unbalanced l=" + std::to_string(l) + ": " + rational_to_string(lead.coefficient));
    o.digest += rational_to_string(lead.coefficient) + ";";
  }
  return o;
}

Outcome leaf_dominance(unsigned) {
  Outcome o;
  std::size_t leaves = 0;
  for_each_tree(4, 6, [&](const CornerLabeledTree& t) {
    const auto layout = tree_to_bubble_layout(t);
    const auto chains = require_chains(layout.bubble, kSplit);
    if (chains.chain_count() > 4) return;
    const auto diag = scaling_diagnostics(chains, kSplit);
    int best = diag.front().exponent;
    for (const auto& d : diag) best = std::max(best, d.exponent);
    for (std::size_t v = 1; v < layout.is_leaf.size(); ++v) {
      if (!layout.is_leaf[v]) continue;
      auto whites = layout.vertex_whites[v];
      std::sort(whites.begin(), whites.end());
      int leaf = -1;
      for (int j = 0; j < chains.chain_count(); ++j) {
        auto cw = chains.chain_whites[static_cast<std::size_t>(j)];
        std::sort(cw.begin(), cw.end());
        if (cw == whites) leaf = j;
      }
      o.expect(leaf >= 0, t.to_string() + ": leaf is not a single chain");
      if (leaf < 0) continue;
      ++leaves;
      for (const auto& d : diag) {
        if (d.exponent != best) continue;
        o.expect(d.sigma(leaf) == leaf && d.tau(leaf) == leaf,
                 t.to_string() + ": maximal term " + d.sigma.to_string() + d.tau.to_string() + " moves the leaf chain");
      }
    }
    o.digest += t.to_string() + ":" + std::to_string(best) + ";";
  });
  if (o.pass) o.detail = std::to_string(leaves) + " leaves";
  return o;
}

Outcome monte_carlo(unsigned threads) {
  Outcome o;
  const std::vector<std::pair<std::string, Bubble>> suite{
      {"dipole", necklace(kSplit, 1)},
      {"necklace k=2", necklace(kSplit, 2)},
      {"tree (1,1)", edge_bubble(1, 1)},
      {"tree (2,1)", edge_bubble(2, 1)},
      {"path 1-3", tree_to_bubble(CornerLabeledTree{vertex(1, {1, 0}, {vertex(1, {0, 1}, {vertex(3, {1})})})})}};
  std::ostringstream digest;
  digest << std::setprecision(17);
  double worst = 0;
  for (const auto& [name, b] : suite) {
    for (int n0 : {2, 3}) {
      const double exact = per_color_dimensions(b, std::vector<long>(4, n0), {9, threads}).get_d();
      const Estimate e = estimate_expectation(b, {n0, 4, 1.0, kSamples, kSeed}, {threads});
      const double z = std::abs(e.mean - exact) / e.std_error;
      worst = std::max(worst, z);
      std::ostringstream what;
      what << name << " N=" << n0 << ": " << e.mean << " +- " << e.std_error << " vs " << exact;
      o.expect(z <= kStandardErrors, what.str());
      digest << e.mean << "," << e.std_error << "," << e.imag_mean << ";";
    }
  }
  o.digest = digest.str();
  if (o.pass) {
    std::ostringstream d;
    d << std::setprecision(3) << "max deviation " << worst << " standard errors";
    o.detail = d.str();
  }
  return o;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, const std::string& name, bool pass, double secs, double limit, const std::string& detail) {
  std::cout << "criterion " << std::setw(2) << id << "  " << (pass ? "PASS" : "FAIL") << "  " << name << "  ("
            << std::fixed << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << limit << " s)";
  if (!detail.empty()) std::cout << "  " << detail;
  std::cout << std::endl;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Weingarten n=2 exact values", 1, weingarten_two},
      {2, "Weingarten orthogonality n<=4, m in {7,11}", 10, orthogonality},
      {3, "two-chain effective observable N/(N^2+1)", 5, two_chain_effective},
      {4, "angular route equals Wick route", 60, two_path},
      {5, "scaled leading term (3, Cat_k Cat_l), k+l<=5", 10, large_n},
      {6, "Catalan-product law, <=3 vertices, sum k<=5", 120, catalan_law},
      {7, "Wishart leading coefficients", 10, wishart_asymptotics},
      {8, "maximal terms fix the leaf chain, m<=4", 10, leaf_dominance},
      {9, "Monte Carlo within 5 standard errors", 120, monte_carlo},
  };

  bool all = true;
  std::vector<std::string> digests;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(1);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = seconds_since(t0);
    const bool pass = o.pass && secs < c.seconds_limit;
    if (o.pass && !pass) o.detail = "exceeded the time limit";
    report(c.id, c.name, pass, secs, c.seconds_limit, o.detail);
    all = all && pass;
    digests.push_back(o.digest);
  }

  // Criterion 10: identical exact outputs with 2 and 8 workers, and a second
  // Monte Carlo run with the same seed.
  const auto t0 = std::chrono::steady_clock::now();
  bool same = true;
  std::string detail;
  for (unsigned threads : {2u, 8u}) {
    for (std::size_t i = 0; i < criteria.size(); ++i) {
      std::string d;
      try {
        d = criteria[i].run(threads).digest;
      } catch (const std::exception& e) {
        d = std::string("exception: ") + e.what();
      }
      if (d != digests[i]) {
        if (same) detail = "criterion " + std::to_string(criteria[i].id) + " differs at " + std::to_string(threads) + " threads";
        same = false;
      }
    }
  }
  if (monte_carlo(1).digest != digests.back()) {
    if (same) detail = "Monte Carlo rerun with the same seed differs";
    same = false;
  }
  const double secs = seconds_since(t0);
  if (same && secs >= 300) {
    same = false;
    detail = "exceeded the time limit";
  }
  report(10, "byte-identical results for 1, 2 and 8 threads", same, secs, 300, detail);
  all = all && same;

  std::cout << (all ? "ALL PASS" : "SOME FAILED") << std::endl;
  return all ? 0 : 1;
}
