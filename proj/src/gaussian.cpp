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

#include "bubblecalc/gaussian.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "bubblecalc/parallel.hpp"

namespace bubblecalc {

namespace {

constexpr std::uint64_t kBlocks = 64;

std::string bound_message(int n, int n_max, double pairings, double secs) {
  std::ostringstream os;
  os << "bubble has n = " << n << " vertex pairs, above the oracle bound n_max = " << n_max << "; exact enumeration needs "
     << std::fixed << std::setprecision(0) << pairings << " Wick pairings (about " << std::defaultfloat
     << std::setprecision(3) << secs << " s single-threaded). Use Monte Carlo (mc) instead or raise n_max.";
  return os.str();
}

void check_bound(const Bubble& b, const OracleOptions& opts) {
  require_valid(b);
  if (b.n() > opts.n_max) {
    const double pairings = std::tgamma(b.n() + 1.0);
    throw OracleBoundExceeded(b.n(), opts.n_max, pairings, estimated_oracle_seconds(b.n(), b.d()));
  }
}

// Runs fn(pairing_inverse, per_color_cycles) over all pairings, one histogram per block.
template <class Hist, class Fn>
std::vector<Hist> enumerate_pairings(const Bubble& b, unsigned threads, Fn&& fn) {
  const int n = b.n();
  const auto blocks = split_range(factorial(n), kBlocks);
  return map_blocks(blocks, threads, [&](const Block& blk) {
    Hist hist{};
    Permutation pi = Permutation::unrank(n, blk.begin);
    std::vector<int> cycles(static_cast<std::size_t>(b.d()));
    for (std::uint64_t r = blk.begin; r < blk.end; ++r) {
      const Permutation inv = pi.inverse();
      for (int c = 0; c < b.d(); ++c) {
        cycles[static_cast<std::size_t>(c)] = cycles_of_product(b.color_maps()[static_cast<std::size_t>(c)].images(), inv.images());
      }
      fn(hist, cycles);
      pi.next();
    }
    return hist;
  });
}

// Histogram of the total exponent Σ_c cycles_c, indexed by exponent.
std::vector<std::uint64_t> exponent_histogram(const Bubble& b, const OracleOptions& opts) {
  check_bound(b, opts);
  const std::size_t size = static_cast<std::size_t>(b.d() * b.n()) + 1;
  auto parts = enumerate_pairings<std::vector<std::uint64_t>>(b, opts.threads, [&](auto& hist, const auto& cycles) {
    if (hist.empty()) hist.assign(size, 0);
    int e = 0;
    for (int c : cycles) e += c;
    ++hist[static_cast<std::size_t>(e)];
  });
  std::vector<std::uint64_t> total(size, 0);
  for (const auto& h : parts) {
    for (std::size_t i = 0; i < h.size(); ++i) total[i] += h[i];
  }
  return total;
}

}  // namespace

OracleBoundExceeded::OracleBoundExceeded(int n, int n_max, double pairings, double est_seconds)
    : std::runtime_error(bound_message(n, n_max, pairings, est_seconds)),
      n_(n),
      pairings_(pairings),
      est_seconds_(est_seconds) {}

double estimated_oracle_seconds(int n, int d) {
  // ~ n·d elementary steps per pairing at ~5e8 steps/s.
  return std::tgamma(n + 1.0) * n * d / 5e8;
}

LaurentPoly gaussian_expectation(const Bubble& b, const OracleOptions& opts) {
  const auto hist = exponent_histogram(b, opts);
  LaurentPoly p;
  for (std::size_t e = 0; e < hist.size(); ++e) {
    if (hist[e]) p.add_term(static_cast<int>(e), Rational(BigInt(static_cast<unsigned long>(hist[e]))));
  }
  return p;
}

ExpectationResult rescale(const LaurentPoly& raw, int n, int alpha) {
  return {raw, alpha, raw.shifted(-alpha * n)};
}

ExpectationResult expectation_with_scaling(const Bubble& b, int alpha, const OracleOptions& opts) {
  return rescale(gaussian_expectation(b, opts), b.n(), alpha);
}

DominantContractions dominant_contractions(const Bubble& b, const OracleOptions& opts) {
  const auto lt = leading_term(gaussian_expectation(b, opts));
  return {lt.exponent, lt.coefficient.get_num()};
}

BigInt per_color_dimensions(const Bubble& b, std::span<const long> dims, const OracleOptions& opts) {
  check_bound(b, opts);
  if (static_cast<int>(dims.size()) != b.d()) throw std::invalid_argument("need one dimension per color");
  for (long v : dims) {
    if (v < 1) throw std::invalid_argument("dimensions must be positive");
  }
  // Key: per-color cycle counts packed base (n+1).
  const std::uint64_t base = static_cast<std::uint64_t>(b.n()) + 1;
  using Hist = std::map<std::uint64_t, std::uint64_t>;
  auto parts = enumerate_pairings<Hist>(b, opts.threads, [&](Hist& hist, const auto& cycles) {
    std::uint64_t key = 0;
    for (int c : cycles) key = key * base + static_cast<std::uint64_t>(c);
    ++hist[key];
  });
  Hist total;
  for (const auto& h : parts) {
    for (const auto& [k, v] : h) total[k] += v;
  }
  BigInt sum = 0;
  for (const auto& [packed, count] : total) {
    std::uint64_t key = packed;
    BigInt term = BigInt(static_cast<unsigned long>(count));
    for (int c = b.d() - 1; c >= 0; --c) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(dims[static_cast<std::size_t>(c)]),
                    static_cast<unsigned long>(key % base));
      term *= p;
      key /= base;
    }
    sum += term;
  }
  return sum;
}

}  // namespace bubblecalc
