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

#include "bubblecalc/permutation.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace bubblecalc {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts) {
    if (x <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    Partition p;
    p.parts = cur;
    out.push_back(std::move(p));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial: n outside [0, 20]");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t class_size(const Partition& p) {
  // n! / prod_j (j^{m_j} m_j!)
  const int n = p.size();
  std::uint64_t denom = 1;
  std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
  for (int part : p.parts) ++mult[static_cast<std::size_t>(part)];
  for (int j = 1; j <= n; ++j) {
    for (int k = 0; k < mult[static_cast<std::size_t>(j)]; ++k) denom *= static_cast<std::uint64_t>(j);
    denom *= factorial(mult[static_cast<std::size_t>(j)]);
  }
  return factorial(n) / denom;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> v(images.begin(), images.end());
  for (int& x : v) --x;
  return Permutation(std::move(v));
}

Permutation Permutation::rotation(int n, int step) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = ((i + step) % n + n) % n;
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycle_lengths(std::span<const int> lengths) {
  std::vector<int> v;
  int start = 0;
  for (int l : lengths) {
    if (l <= 0) throw std::invalid_argument("cycle lengths must be positive");
    for (int j = 0; j < l; ++j) v.push_back(start + (j + 1) % l);
    start += l;
  }
  return Permutation(std::move(v));
}

Permutation Permutation::unrank(int n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw std::out_of_range("unrank: rank >= n!");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial(i - 1);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    v.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> v = images_;
  for (int& x : v) ++x;
  return v;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

int Permutation::cycle_count() const {
  std::vector<char> seen(images_.size(), 0);
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) seen[j] = 1;
  }
  return count;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      cyc.push_back(static_cast<int>(j));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

bool Permutation::next() { return std::next_permutation(images_.begin(), images_.end()); }

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i] + 1);
  }
  return s + "]";
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: length mismatch");
  std::vector<int> v(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) v[static_cast<std::size_t>(i)] = p(q(i));
  return Permutation(std::move(v));
}

Permutation compose(const Permutation& p, const Permutation& q, const Permutation& r) {
  return compose(p, compose(q, r));
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& c : p.cycles()) lengths.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lengths));
}

int cycles_of_product(std::span<const int> p, std::span<const int> q_inverse) {
  const std::size_t n = p.size();
  std::array<char, 64> small{};
  std::vector<char> big;
  char* seen = small.data();
  if (n > small.size()) {
    big.assign(n, 0);
    seen = big.data();
  }
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++count;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(p[static_cast<std::size_t>(q_inverse[j])])) seen[j] = 1;
  }
  return count;
}

}  // namespace bubblecalc
