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
#include <stdexcept>
#include <string>
#include <vector>

#include "bubblecalc/bubble.hpp"
#include "bubblecalc/rational_func.hpp"
#include "bubblecalc/weingarten.hpp"

namespace bubblecalc {

/// Σ c(N) · p_{l_1} ⋯ p_{l_k}, with p_l = Σ_i λ_i^{2l} = tr (MM†)^l.
/// Keys are power lists sorted in descending order.
struct PowerSumExpansion {
  std::map<std::vector<int>, RationalFunc> terms;
  int row_power = 0;     // row dimension N^row_power (the angular group)
  int column_power = 0;  // column dimension N^column_power

  /// Coefficient of the given powers (any order); zero if absent.
  RationalFunc coefficient(std::vector<int> powers) const;
  std::string to_string() const;  // "(N^1)/(N^2 + 1)*p_1*p_1 + ..."
};

class NotChainExpressibleError : public std::invalid_argument {
 public:
  explicit NotChainExpressibleError(NotChainExpressible why)
      : std::invalid_argument(why.reason), why_(std::move(why)) {}
  const NotChainExpressible& detail() const { return why_; }

 private:
  NotChainExpressible why_;
};

struct EffectiveOptions {
  WeingartenOptions weingarten;
  unsigned threads = 0;
};

/// Angular average of a chain-expressible bubble over U(N^{#rows}):
///   Σ_{σ,τ ∈ S_m} Wg(σ τ⁻¹) ∏_{row c} N^{cycles(π_c σ)} ∏_{cycles γ of τ} p_{Σ_{j∈γ} l_j}
/// where m is the number of chains, l_j their lengths and π_c the endpoint maps.
PowerSumExpansion effective_observable(const Bubble& b, const ColorSplit& split, const EffectiveOptions& opts = {});
PowerSumExpansion effective_observable(const ChainDecomposition& chains, const ColorSplit& split,
                                       const EffectiveOptions& opts = {});

struct WishartOptions {
  int max_total = 9;
  unsigned threads = 0;
};

/// <∏_j tr W^{l_j}> for W = MM†, M a rows×cols matrix of unit-covariance
/// complex Gaussians: Σ_{π ∈ S_L} rows^{cycles(γπ)} cols^{cycles(π)} with γ
/// the permutation whose consecutive cycles have lengths l_1, l_2, ...
/// Each dimension is N^p or an integer constant.
LaurentPoly wishart_moment_exact(const std::vector<int>& lengths, const Dimension& rows, const Dimension& cols,
                                 const WishartOptions& opts = {});

enum class Balance { square, unbalanced };

/// Large-N leading coefficient of <tr W^l>: Cat_l when square, 1 otherwise.
BigInt wishart_moment_leading(int l, Balance balance);

/// Σ_terms c(N) · <∏ p_l> in the Wishart ensemble with the given dims
/// (defaults: the expansion's own row and column dimensions).
LaurentPoly laguerre_reconstruct(const PowerSumExpansion& e, const WishartOptions& opts = {});
LaurentPoly laguerre_reconstruct(const PowerSumExpansion& e, const Dimension& rows, const Dimension& cols,
                                 const WishartOptions& opts = {});

/// N-power counting of one (σ, τ) term of the angular integral.
struct ScalingDiagnostics {
  Permutation sigma;
  Permutation tau;
  std::vector<int> row_faces;  // cycles(π_c σ) per row color, ascending color
  int f_box = 0;               // cycles(τ)
  int f0 = 0;                  // cycles(σ τ⁻¹)
  int exponent = 0;            // Σ row_faces + r·f_box + r·(f0 − 2m), r = #row colors
};

/// Every (σ, τ) pair, σ-major in lexicographic order. Throws above m = 6.
std::vector<ScalingDiagnostics> scaling_diagnostics(const Bubble& b, const ColorSplit& split);
std::vector<ScalingDiagnostics> scaling_diagnostics(const ChainDecomposition& chains, const ColorSplit& split);

/// Unwraps chain_decomposition, throwing NotChainExpressibleError.
ChainDecomposition require_chains(const Bubble& b, const ColorSplit& split);

}  // namespace bubblecalc
