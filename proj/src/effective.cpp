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

#include "bubblecalc/effective.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_map>

#include "bubblecalc/combinatorics.hpp"
#include "bubblecalc/parallel.hpp"

namespace bubblecalc {

namespace {

constexpr std::uint64_t kBlocks = 64;
constexpr int kMaxDiagnosticChains = 6;

// Cycle lengths of p∘q⁻¹ packed as a sorted code, 4 bits per cycle.
std::uint64_t cycle_type_code(std::span<const int> p, std::span<const int> q_inverse) {
  const std::size_t n = p.size();
  std::array<char, 16> seen{};
  std::array<int, 16> lengths{};
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(p[static_cast<std::size_t>(q_inverse[j])])) {
      seen[j] = 1;
      ++len;
    }
    lengths[static_cast<std::size_t>(count++)] = len;
  }
  std::sort(lengths.begin(), lengths.begin() + count, std::greater<>());
  std::uint64_t code = 0;
  for (int i = 0; i < count; ++i) code = (code << 4) | static_cast<std::uint64_t>(lengths[static_cast<std::size_t>(i)]);
  return code;
}

std::uint64_t partition_code(const Partition& p) {
  std::uint64_t code = 0;
  for (int x : p.parts) code = (code << 4) | static_cast<std::uint64_t>(x);
  return code;
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(m)));
  for_each_permutation(m, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

// Powers p_{Σ l_j} over the cycles of τ, sorted descending.
std::vector<int> tau_powers(const Permutation& tau, const std::vector<int>& lengths) {
  std::vector<int> powers;
  for (const auto& cyc : tau.cycles()) {
    int s = 0;
    for (int j : cyc) s += lengths[static_cast<std::size_t>(j)];
    powers.push_back(s);
  }
  std::sort(powers.begin(), powers.end(), std::greater<>());
  return powers;
}

int row_exponent(const ChainDecomposition& chains, const Permutation& sigma, std::vector<int>* per_color) {
  int e = 0;
  for (const auto& [c, pi] : chains.endpoint_maps) {
    // cycles(π_c ∘ σ)
    const int f = cycles_of_product(pi.images(), sigma.images());
    if (per_color) per_color->push_back(f);
    e += f;
  }
  return e;
}

LaurentPoly dim_power(const Dimension& d, int k) {
  if (d.symbolic) return LaurentPoly::power(d.power * k);
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d.value), static_cast<unsigned long>(k));
  return LaurentPoly(Rational(p));
}

}  // namespace

RationalFunc PowerSumExpansion::coefficient(std::vector<int> powers) const {
  std::sort(powers.begin(), powers.end(), std::greater<>());
  auto it = terms.find(powers);
  return it == terms.end() ? RationalFunc(0) : it->second;
}

std::string PowerSumExpansion::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [powers, c] : terms) {
    if (!s.empty()) s += " + ";
    s += c.to_string();
    for (int l : powers) s += "*p_" + std::to_string(l);
  }
  return s;
}

ChainDecomposition require_chains(const Bubble& b, const ColorSplit& split) {
  require_valid(b);
  auto res = chain_decomposition(b, split);
  if (auto* bad = std::get_if<NotChainExpressible>(&res)) throw NotChainExpressibleError(*bad);
  return std::get<ChainDecomposition>(std::move(res));
}

PowerSumExpansion effective_observable(const Bubble& b, const ColorSplit& split, const EffectiveOptions& opts) {
  return effective_observable(require_chains(b, split), split, opts);
}

PowerSumExpansion effective_observable(const ChainDecomposition& chains, const ColorSplit& split,
                                       const EffectiveOptions& opts) {
  const int m = chains.chain_count();
  if (m > opts.weingarten.n_max || m > 15) {
    throw std::out_of_range("bubble has " + std::to_string(m) + " chains, above the Weingarten bound n_max = " +
                            std::to_string(opts.weingarten.n_max));
  }
  const int r = static_cast<int>(split.row_colors().size());
  const auto table = weingarten_table(m, Dimension::symbol(r), opts.weingarten);
  std::unordered_map<std::uint64_t, std::size_t> class_index;
  for (std::size_t i = 0; i < table.classes.classes.size(); ++i) class_index[partition_code(table.classes.classes[i])] = i;
  const std::size_t n_classes = table.classes.classes.size();

  const auto perms = all_permutations(m);
  std::map<std::vector<int>, std::size_t> key_index;
  std::vector<std::vector<int>> keys;
  std::vector<std::size_t> tau_key;
  std::vector<Permutation> tau_inv;
  for (const auto& tau : perms) {
    auto powers = tau_powers(tau, chains.chain_lengths);
    auto [it, inserted] = key_index.try_emplace(powers, keys.size());
    if (inserted) keys.push_back(std::move(powers));
    tau_key.push_back(it->second);
    tau_inv.push_back(tau.inverse());
  }
  const std::size_t n_keys = keys.size();
  const std::size_t n_exp = static_cast<std::size_t>(r * m) + 1;

  // counts[(key·classes + class)·n_exp + e] = #(σ, τ) with that τ-key, class of στ⁻¹ and row exponent e.
  const auto blocks = split_range(perms.size(), kBlocks);
  auto parts = map_blocks(blocks, opts.threads, [&](const Block& blk) {
    std::vector<std::uint64_t> counts(n_keys * n_classes * n_exp, 0);
    for (std::uint64_t s = blk.begin; s < blk.end; ++s) {
      const Permutation& sigma = perms[static_cast<std::size_t>(s)];
      const auto e = static_cast<std::size_t>(row_exponent(chains, sigma, nullptr));
      for (std::size_t t = 0; t < perms.size(); ++t) {
        const std::size_t cls = class_index.at(cycle_type_code(sigma.images(), tau_inv[t].images()));
        ++counts[(tau_key[t] * n_classes + cls) * n_exp + e];
      }
    }
    return counts;
  });
  std::vector<std::uint64_t> counts(n_keys * n_classes * n_exp, 0);
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.size(); ++i) counts[i] += p[i];
  }

  PowerSumExpansion out;
  out.row_power = r;
  out.column_power = static_cast<int>(split.column_colors().size());
  for (std::size_t k = 0; k < n_keys; ++k) {
    RationalFunc coeff(0);
    for (std::size_t cls = 0; cls < n_classes; ++cls) {
      LaurentPoly weight;
      for (std::size_t e = 0; e < n_exp; ++e) {
        const auto cnt = counts[(k * n_classes + cls) * n_exp + e];
        if (cnt) weight.add_term(static_cast<int>(e), Rational(BigInt(static_cast<unsigned long>(cnt))));
      }
      if (!weight.is_zero()) coeff += RationalFunc(weight) * table.values[cls];
    }
    if (!coeff.is_zero()) out.terms.emplace(keys[k], std::move(coeff));
  }
  return out;
}

LaurentPoly wishart_moment_exact(const std::vector<int>& lengths, const Dimension& rows, const Dimension& cols,
                                 const WishartOptions& opts) {
  if (lengths.empty()) return LaurentPoly(1);
  int total = 0;
  for (int l : lengths) {
    if (l < 1) throw std::invalid_argument("Wishart moment lengths must be positive");
    total += l;
  }
  if (total > opts.max_total) {
    throw std::out_of_range("Wishart moment of total degree " + std::to_string(total) + " exceeds the bound " +
                            std::to_string(opts.max_total));
  }
  const Permutation gamma = Permutation::from_cycle_lengths(lengths);
  const std::size_t side = static_cast<std::size_t>(total) + 1;
  const auto blocks = split_range(factorial(total), kBlocks);
  auto parts = map_blocks(blocks, opts.threads, [&](const Block& blk) {
    std::vector<std::uint64_t> hist(side * side, 0);
    Permutation pi = Permutation::unrank(total, blk.begin);
    for (std::uint64_t i = blk.begin; i < blk.end; ++i) {
      // cycles(γ ∘ π): pass π as the "inverse" argument.
      const int row_cycles = cycles_of_product(gamma.images(), pi.images());
      ++hist[static_cast<std::size_t>(row_cycles) * side + static_cast<std::size_t>(pi.cycle_count())];
      pi.next();
    }
    return hist;
  });
  LaurentPoly sum;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      std::uint64_t cnt = 0;
      for (const auto& h : parts) cnt += h[i * side + j];
      if (cnt == 0) continue;
      sum += dim_power(rows, static_cast<int>(i)) * dim_power(cols, static_cast<int>(j)) *
             Rational(BigInt(static_cast<unsigned long>(cnt)));
    }
  }
  return sum;
}

BigInt wishart_moment_leading(int l, Balance balance) {
  if (l < 1) throw std::invalid_argument("Wishart moment order must be >= 1");
  return balance == Balance::square ? catalan(l) : BigInt(1);
}

LaurentPoly laguerre_reconstruct(const PowerSumExpansion& e, const WishartOptions& opts) {
  return laguerre_reconstruct(e, Dimension::symbol(e.row_power), Dimension::symbol(e.column_power), opts);
}

LaurentPoly laguerre_reconstruct(const PowerSumExpansion& e, const Dimension& rows, const Dimension& cols,
                                 const WishartOptions& opts) {
  RationalFunc sum(0);
  for (const auto& [powers, coeff] : e.terms) sum += coeff * RationalFunc(wishart_moment_exact(powers, rows, cols, opts));
  return sum.to_laurent();
}

std::vector<ScalingDiagnostics> scaling_diagnostics(const Bubble& b, const ColorSplit& split) {
  return scaling_diagnostics(require_chains(b, split), split);
}

std::vector<ScalingDiagnostics> scaling_diagnostics(const ChainDecomposition& chains, const ColorSplit& split) {
  const int m = chains.chain_count();
  if (m > kMaxDiagnosticChains) {
    throw std::out_of_range("scaling diagnostics enumerate (m!)^2 terms; m = " + std::to_string(m) +
                            " exceeds the limit " + std::to_string(kMaxDiagnosticChains));
  }
  const int r = static_cast<int>(split.row_colors().size());
  const auto perms = all_permutations(m);
  std::vector<ScalingDiagnostics> out;
  out.reserve(perms.size() * perms.size());
  for (const auto& sigma : perms) {
    std::vector<int> faces;
    const int row = row_exponent(chains, sigma, &faces);
    for (const auto& tau : perms) {
      ScalingDiagnostics d;
      d.sigma = sigma;
      d.tau = tau;
      d.row_faces = faces;
      d.f_box = tau.cycle_count();
      d.f0 = compose(sigma, tau.inverse()).cycle_count();
      d.exponent = row + r * d.f_box + r * (d.f0 - 2 * m);
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace bubblecalc
