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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bubblecalc {

/// A partition of n: weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  /// Sorts the given parts into descending order; throws on non-positive parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  int size() const;  // n = sum of parts
  int length() const { return static_cast<int>(parts.size()); }
  std::string to_string() const;  // "(2,1,1)"

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of n in descending lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// Number of permutations of n elements whose cycle type is `p`.
std::uint64_t class_size(const Partition& p);

/// A bijection of {0..n-1}. The external (file and display) form is 1-indexed.
class Permutation {
 public:
  Permutation() = default;
  /// 0-indexed images; throws std::invalid_argument if not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// From 1-indexed one-line notation.
  static Permutation from_one_based(std::span<const int> images);
  /// The cyclic shift i -> i+step (mod n).
  static Permutation rotation(int n, int step);
  /// Permutation with consecutive cycles of the given lengths:
  /// (0 1 .. l0-1)(l0 .. l0+l1-1)... each mapping i -> i+1 within its block.
  static Permutation from_cycle_lengths(std::span<const int> lengths);
  /// The permutation with lexicographic rank `rank` among all n! (0-based).
  static Permutation unrank(int n, std::uint64_t rank);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  bool is_identity() const;
  int cycle_count() const;
  /// Cycles listed by increasing smallest element, each starting at its minimum.
  std::vector<std::vector<int>> cycles() const;

  /// Advances to the lexicographically next permutation; false after the last.
  bool next();

  std::string to_string() const;  // 1-indexed one-line form "[2,1,3]"

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// compose(p, q) applies q first, then p: (p∘q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation compose(const Permutation& p, const Permutation& q, const Permutation& r);

Partition cycle_type(const Permutation& p);

/// Cycle count of p∘q⁻¹ without materializing either permutation.
/// `q_inverse` must already be the inverse of q.
int cycles_of_product(std::span<const int> p, std::span<const int> q_inverse);

std::uint64_t factorial(int n);

/// Calls fn(perm) for every permutation of n elements in lexicographic order.
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  Permutation p = Permutation::identity(n);
  do {
    fn(static_cast<const Permutation&>(p));
  } while (p.next());
}

}  // namespace bubblecalc
