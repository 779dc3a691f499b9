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

#include <complex>
#include <cstdint>
#include <vector>

#include "bubblecalc/bubble.hpp"

namespace bubblecalc {

using Complex = std::complex<double>;

struct SampleSpec {
  int N = 2;
  int d = 4;
  double variance = 1.0;  // E|T_a|²
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;

  void check() const;
};

/// Dense rank-d tensor, color 1 index most significant.
struct Tensor {
  int N = 0;
  int d = 0;
  std::vector<Complex> data;

  std::size_t size() const { return data.size(); }
};

/// Uniform double in (0, 1) from the counter (seed, sample, entry, lane).
double counter_uniform(std::uint64_t seed, std::uint64_t sample, std::uint64_t entry, std::uint64_t lane);

/// i.i.d. complex Gaussian entries, real and imaginary parts of variance
/// variance/2. Depends only on (seed, sample_index).
Tensor sample_tensor(const SampleSpec& spec, std::uint64_t sample_index);

/// T -> (U acting on the color-c index) T. U is row-major N×N.
Tensor apply_color_matrix(const Tensor& t, int color, const std::vector<Complex>& u);

enum class ContractionOrder { greedy, linear };

/// Pairwise contraction sequence for the tensor network of a bubble: one T
/// per white vertex, one T̄ per black vertex, one index per edge.
class ContractionPlan {
 public:
  ContractionPlan(const Bubble& b, int N, ContractionOrder order = ContractionOrder::greedy);

  Complex evaluate(const Tensor& t) const;
  /// Largest intermediate tensor size (number of entries).
  std::size_t peak_size() const { return peak_; }

 private:
  struct Step {
    std::size_t a, b;  // operand slots; the result replaces slot a
    std::size_t out_size, shared_size;
    std::vector<std::size_t> base_a, base_b;      // per output entry
    std::vector<std::size_t> shared_a, shared_b;  // per shared entry
  };

  int N_;
  int d_;
  int n_;
  std::size_t peak_ = 0;
  std::vector<Step> steps_;
};

Complex evaluate_bubble(const Bubble& b, const Tensor& t);

struct Estimate {
  double mean = 0;       // real part
  double std_error = 0;  // sample standard deviation / √samples
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double imag_mean = 0;  // vanishes in expectation
};

struct EstimateOptions {
  unsigned threads = 0;
  ContractionOrder order = ContractionOrder::greedy;
};

/// Mean of evaluate_bubble over spec.samples independent tensors. The
/// per-sample values are reduced by pairwise summation in sample order, so
/// the result does not depend on the thread count.
Estimate estimate_expectation(const Bubble& b, const SampleSpec& spec, const EstimateOptions& opts = {});

/// Pairwise (cascade) sum in index order.
double pairwise_sum(const double* x, std::size_t n);

}  // namespace bubblecalc
