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

#include <memory>
#include <string>
#include <vector>

#include "bubblecalc/permutation.hpp"
#include "bubblecalc/rational_func.hpp"

namespace bubblecalc {

/// Dimension of the unitary group: either the symbol N raised to a positive
/// power, or a positive integer.
struct Dimension {
  bool symbolic = true;
  int power = 1;     // symbolic: dim = N^power
  long value = 0;    // numeric: dim = value

  static Dimension symbol(int power) { return {true, power, 0}; }
  static Dimension numeric(long value) { return {false, 0, value}; }
  /// Parses "N", "N^2" or an integer.
  static Dimension parse(const std::string& text);
  /// dim as a Laurent polynomial (N^power or the constant value).
  LaurentPoly as_poly() const;
  std::string to_string() const;
};

struct ConjugacyClassTable {
  int n = 0;
  std::vector<Partition> classes;  // partitions_of(n) order
  std::vector<std::uint64_t> class_sizes;

  /// Index of the class of p; throws if p is not a partition of n.
  std::size_t index_of(const Partition& p) const;
  std::size_t identity_index() const { return classes.size() - 1; }
};

ConjugacyClassTable class_table(int n);

/// Class-reduced Gram matrix: entry (a, b) = Σ_{τ ∈ class b} x^{cycles(σ_a τ⁻¹)}
/// with σ_a = Permutation::from_cycle_lengths(class a). The symbol x is the
/// group dimension, stored as N^1.
std::vector<std::vector<LaurentPoly>> gram_matrix(int n);

struct WeingartenOptions {
  int n_max = 8;
};

struct WeingartenTable {
  int n = 0;
  Dimension dim;
  ConjugacyClassTable classes;
  std::vector<RationalFunc> values;  // per class; constants when dim is numeric

  const RationalFunc& value(const Partition& p) const { return values[classes.index_of(p)]; }
};

/// Solves the Gram system exactly. Symbolic tables are computed once per n
/// and shared; numeric dims below n are rejected with std::domain_error.
WeingartenTable weingarten_table(int n, const Dimension& dim, const WeingartenOptions& opts = {});

RationalFunc weingarten_exact(const Partition& cls, const Dimension& dim, const WeingartenOptions& opts = {});
Rational weingarten_exact(const Partition& cls, long dim, const WeingartenOptions& opts = {});

/// Leading large-dim behavior coefficient·dim^exponent.
struct AsymptoticMonomial {
  int exponent;
  Rational coefficient;
};

AsymptoticMonomial weingarten_asymptotic(const Partition& cls);

/// Full n!×n! matrices indexed by lexicographic permutation rank, for
/// checking the defining orthogonality directly at a numeric dim:
/// G(σ,τ) = m^{cycles(στ⁻¹)} and W(σ,τ) = Wg_m(cycle_type(στ⁻¹)).
std::vector<std::vector<Rational>> group_gram_matrix(int n, long m);
std::vector<std::vector<Rational>> group_weingarten_matrix(int n, long m, const WeingartenOptions& opts = {});

}  // namespace bubblecalc
