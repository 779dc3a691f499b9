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

#include <span>
#include <stdexcept>
#include <string>

#include "bubblecalc/bubble.hpp"
#include "bubblecalc/laurent_poly.hpp"

namespace bubblecalc {

// Exact Gaussian expectations by Wick enumeration. With unit covariance
// <T_a T̄_b> = δ_ab, a pairing π of white i with black π(i) closes
// cycles(τ_c ∘ π⁻¹) index loops of color c, each summing to N.

struct OracleOptions {
  int n_max = 9;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Thrown when n exceeds the configured bound; carries the work estimate.
class OracleBoundExceeded : public std::runtime_error {
 public:
  OracleBoundExceeded(int n, int n_max, double pairings, double est_seconds);
  int n() const { return n_; }
  double pairings() const { return pairings_; }
  double estimated_seconds() const { return est_seconds_; }

 private:
  int n_;
  double pairings_;
  double est_seconds_;
};

/// Rough single-thread wall time for enumerating n! pairings on d colors.
double estimated_oracle_seconds(int n, int d);

/// Σ_{π ∈ S_n} ∏_c N^{cycles(τ_c π⁻¹)} at unit covariance.
LaurentPoly gaussian_expectation(const Bubble& b, const OracleOptions& opts = {});

struct ExpectationResult {
  LaurentPoly raw;
  int alpha = 0;       // covariance N^{-alpha}
  LaurentPoly scaled;  // raw · N^{-alpha·n}
};

ExpectationResult expectation_with_scaling(const Bubble& b, int alpha, const OracleOptions& opts = {});
ExpectationResult rescale(const LaurentPoly& raw, int n, int alpha);

struct DominantContractions {
  int exponent;
  BigInt count;
};

/// Maximal exponent and the number of pairings attaining it.
DominantContractions dominant_contractions(const Bubble& b, const OracleOptions& opts = {});

/// Same Wick sum with color c loops weighted by dims[c-1]; exact integer.
BigInt per_color_dimensions(const Bubble& b, std::span<const long> dims, const OracleOptions& opts = {});

}  // namespace bubblecalc
