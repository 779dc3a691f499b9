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

#include "bubblecalc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bubblecalc/parallel.hpp"

namespace bubblecalc {

namespace {

constexpr std::uint64_t kBlocks = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t ipow(int base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

using Legs = std::vector<int>;

// Offsets into a tensor with leg list `legs` for every assignment of the
// legs in `over` (row-major, first leg most significant). Legs of `over`
// absent from `legs` contribute nothing.
std::vector<std::size_t> offsets(const Legs& legs, const Legs& over, int N) {
  std::vector<std::size_t> stride(over.size(), 0);
  for (std::size_t k = 0; k < over.size(); ++k) {
    auto it = std::find(legs.begin(), legs.end(), over[k]);
    if (it != legs.end()) stride[k] = ipow(N, legs.size() - 1 - static_cast<std::size_t>(it - legs.begin()));
  }
  const std::size_t total = ipow(N, over.size());
  std::vector<std::size_t> out(total, 0);
  std::vector<int> digit(over.size(), 0);
  std::size_t off = 0;
  for (std::size_t i = 0; i < total; ++i) {
    out[i] = off;
    for (std::size_t k = over.size(); k-- > 0;) {
      if (++digit[k] < N) {
        off += stride[k];
        break;
      }
      off -= stride[k] * static_cast<std::size_t>(N - 1);
      digit[k] = 0;
    }
  }
  return out;
}

bool contains(const Legs& l, int x) { return std::find(l.begin(), l.end(), x) != l.end(); }

}  // namespace

void SampleSpec::check() const {
  if (N < 1) throw std::invalid_argument("sample spec: N must be >= 1");
  if (d < 1) throw std::invalid_argument("sample spec: d must be >= 1");
  if (samples < 2) throw std::invalid_argument("sample spec: need at least 2 samples");
  if (!(variance > 0)) throw std::invalid_argument("sample spec: variance must be positive");
}

double counter_uniform(std::uint64_t seed, std::uint64_t sample, std::uint64_t entry, std::uint64_t lane) {
  std::uint64_t x = splitmix64(seed);
  x = splitmix64(x ^ sample);
  x = splitmix64(x ^ entry);
  x = splitmix64(x ^ lane);
  return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

Tensor sample_tensor(const SampleSpec& spec, std::uint64_t sample_index) {
  spec.check();
  Tensor t{spec.N, spec.d, std::vector<Complex>(ipow(spec.N, static_cast<std::size_t>(spec.d)))};
  const double scale = std::sqrt(spec.variance / 2);
  for (std::size_t e = 0; e < t.data.size(); ++e) {
    const double u1 = counter_uniform(spec.seed, sample_index, e, 0);
    const double u2 = counter_uniform(spec.seed, sample_index, e, 1);
    const double r = scale * std::sqrt(-2 * std::log(u1));
    const double phi = 2 * std::numbers::pi * u2;
    t.data[e] = {r * std::cos(phi), r * std::sin(phi)};
  }
  return t;
}

Tensor apply_color_matrix(const Tensor& t, int color, const std::vector<Complex>& u) {
  if (color < 1 || color > t.d) throw std::invalid_argument("color out of range");
  const std::size_t N = static_cast<std::size_t>(t.N);
  if (u.size() != N * N) throw std::invalid_argument("matrix must be N x N");
  const std::size_t inner = ipow(t.N, static_cast<std::size_t>(t.d - color));
  const std::size_t outer = t.size() / (inner * N);
  Tensor out{t.N, t.d, std::vector<Complex>(t.size())};
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = 0; b < N; ++b) {
        const Complex w = u[a * N + b];
        for (std::size_t i = 0; i < inner; ++i) out.data[(o * N + a) * inner + i] += w * t.data[(o * N + b) * inner + i];
      }
    }
  }
  return out;
}

ContractionPlan::ContractionPlan(const Bubble& b, int N, ContractionOrder order) : N_(N), d_(b.d()), n_(b.n()) {
  require_valid(b);
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  // Edge id c·n + i joins white i and black τ_c(i).
  std::vector<Legs> legs(static_cast<std::size_t>(2 * n_));
  std::vector<Permutation> inv;
  for (const auto& p : b.color_maps()) inv.push_back(p.inverse());
  for (int i = 0; i < n_; ++i) {
    for (int c = 0; c < d_; ++c) {
      legs[static_cast<std::size_t>(i)].push_back(c * n_ + i);
      legs[static_cast<std::size_t>(n_ + i)].push_back(c * n_ + inv[static_cast<std::size_t>(c)](i));
    }
  }
  std::vector<bool> alive(legs.size(), true);

  auto make_step = [&](std::size_t a, std::size_t b2) {
    Legs shared, out;
    for (int x : legs[a]) (contains(legs[b2], x) ? shared : out).push_back(x);
    for (int x : legs[b2]) {
      if (!contains(shared, x)) out.push_back(x);
    }
    Step s{a, b2, ipow(N_, out.size()), ipow(N_, shared.size()),
           offsets(legs[a], out, N_), offsets(legs[b2], out, N_),
           offsets(legs[a], shared, N_), offsets(legs[b2], shared, N_)};
    peak_ = std::max(peak_, s.out_size);
    steps_.push_back(std::move(s));
    legs[a] = std::move(out);
    legs[b2].clear();
    alive[b2] = false;
  };

  if (order == ContractionOrder::linear) {
    // W0, B0, W1, B1, ... folded into slot 0.
    for (int i = 0; i < n_; ++i) {
      if (i > 0) make_step(0, static_cast<std::size_t>(i));
      make_step(0, static_cast<std::size_t>(n_ + i));
    }
    return;
  }
  for (int remaining = 2 * n_; remaining > 1; --remaining) {
    std::size_t best_a = 0, best_b = 0, best_size = 0;
    bool found = false;
    for (std::size_t a = 0; a < legs.size(); ++a) {
      if (!alive[a]) continue;
      for (std::size_t c = a + 1; c < legs.size(); ++c) {
        if (!alive[c]) continue;
        std::size_t shared = 0;
        for (int x : legs[a]) shared += contains(legs[c], x);
        if (shared == 0) continue;
        const std::size_t size = legs[a].size() + legs[c].size() - 2 * shared;
        if (!found || size < best_size) {
          best_a = a, best_b = c, best_size = size;
          found = true;
        }
      }
    }
    if (!found) throw std::logic_error("tensor network is disconnected");
    make_step(best_a, best_b);
  }
}

Complex ContractionPlan::evaluate(const Tensor& t) const {
  if (t.d != d_ || t.N != N_ || t.size() != ipow(N_, static_cast<std::size_t>(d_))) {
    throw std::invalid_argument("tensor shape (N=" + std::to_string(t.N) + ", d=" + std::to_string(t.d) +
                                ") does not match the plan (N=" + std::to_string(N_) + ", d=" + std::to_string(d_) + ")");
  }
  std::vector<Complex> conj(t.size());
  std::transform(t.data.begin(), t.data.end(), conj.begin(), [](Complex z) { return std::conj(z); });
  std::vector<std::vector<Complex>> owned(static_cast<std::size_t>(2 * n_));
  std::vector<const std::vector<Complex>*> slot(owned.size());
  for (int i = 0; i < n_; ++i) {
    slot[static_cast<std::size_t>(i)] = &t.data;
    slot[static_cast<std::size_t>(n_ + i)] = &conj;
  }
  for (const auto& s : steps_) {
    const Complex* A = slot[s.a]->data();
    const Complex* B = slot[s.b]->data();
    std::vector<Complex> out(s.out_size);
    for (std::size_t o = 0; o < s.out_size; ++o) {
      const Complex* pa = A + s.base_a[o];
      const Complex* pb = B + s.base_b[o];
      Complex acc = 0;
      for (std::size_t k = 0; k < s.shared_size; ++k) acc += pa[s.shared_a[k]] * pb[s.shared_b[k]];
      out[o] = acc;
    }
    owned[s.a] = std::move(out);
    slot[s.a] = &owned[s.a];
  }
  return (*slot[steps_.empty() ? 0 : steps_.back().a])[0];
}

Complex evaluate_bubble(const Bubble& b, const Tensor& t) {
  if (t.d != b.d()) {
    throw std::invalid_argument("tensor has " + std::to_string(t.d) + " colors, bubble has " + std::to_string(b.d()));
  }
  return ContractionPlan(b, t.N).evaluate(t);
}

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

Estimate estimate_expectation(const Bubble& b, const SampleSpec& spec, const EstimateOptions& opts) {
  spec.check();
  if (spec.d != b.d()) throw std::invalid_argument("sample spec d does not match the bubble");
  const ContractionPlan plan(b, spec.N, opts.order);
  const auto blocks = split_range(spec.samples, kBlocks);
  const auto parts = map_blocks(blocks, opts.threads, [&](const Block& blk) {
    std::vector<Complex> v;
    v.reserve(blk.end - blk.begin);
    for (std::uint64_t s = blk.begin; s < blk.end; ++s) v.push_back(plan.evaluate(sample_tensor(spec, s)));
    return v;
  });
  std::vector<double> re, im;
  re.reserve(spec.samples);
  im.reserve(spec.samples);
  for (const auto& p : parts) {
    for (Complex z : p) {
      re.push_back(z.real());
      im.push_back(z.imag());
    }
  }
  const auto S = static_cast<double>(re.size());
  Estimate e;
  e.samples = spec.samples;
  e.seed = spec.seed;
  e.mean = pairwise_sum(re.data(), re.size()) / S;
  e.imag_mean = pairwise_sum(im.data(), im.size()) / S;
  for (double& x : re) x = (x - e.mean) * (x - e.mean);
  e.std_error = std::sqrt(pairwise_sum(re.data(), re.size()) / (S - 1) / S);
  return e;
}

}  // namespace bubblecalc
