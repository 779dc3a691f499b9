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

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bubblecalc/permutation.hpp"

namespace bubblecalc {

/// Bipartite d-regular edge-colored graph on n white and n black vertices.
/// Color c (1-based) is stored as the permutation sending white i to the black
/// vertex it is joined to by its color-c edge. White vertices carry T, black
/// vertices carry T̄.
///
/// Construction only checks that all color maps have the same size; use
/// validate() for connectivity.
class Bubble {
 public:
  Bubble() = default;
  explicit Bubble(std::vector<Permutation> color_maps);

  int d() const { return static_cast<int>(maps_.size()); }
  int n() const { return maps_.empty() ? 0 : maps_.front().size(); }
  /// 1-based color.
  const Permutation& color(int c) const;
  const std::vector<Permutation>& color_maps() const { return maps_; }

  friend bool operator==(const Bubble&, const Bubble&) = default;

 private:
  std::vector<Permutation> maps_;
};

/// Column colors C (a nonempty proper subset of 1..d) and their complement.
class ColorSplit {
 public:
  ColorSplit(int d, std::vector<int> column_colors);
  /// Parses "2,4".
  static ColorSplit parse(int d, const std::string& text);

  int d() const { return d_; }
  const std::vector<int>& column_colors() const { return columns_; }
  const std::vector<int>& row_colors() const { return rows_; }
  bool is_column(int c) const;
  bool is_square() const { return 2 * columns_.size() == static_cast<std::size_t>(d_); }
  std::string to_string() const;

 private:
  int d_;
  std::vector<int> columns_;
  std::vector<int> rows_;
};

struct Diagnostic {
  enum class Kind { shape, not_bijective, disconnected };
  Kind kind;
  int color = 0;  // offending color, 0 if none
  std::string message;
};

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
  std::string summary() const;
};

/// Validates raw 1-based color images as read from a file.
ValidationReport validate(int d, int n, const std::vector<std::vector<int>>& colors);
ValidationReport validate(const Bubble& b);
/// Throws std::invalid_argument with the diagnostics summary if b is invalid.
void require_valid(const Bubble& b);

/// Necklace tr(MM†)^k: column colors map white i to black i, row colors to
/// black i-1 (mod k).
Bubble necklace(const ColorSplit& split, int k);

/// Number of faces of the (c1, c2) subgraph: cycles of τ_{c1}⁻¹ ∘ τ_{c2}.
int bicolored_cycle_count(const Bubble& b, int c1, int c2);

/// MM† chain structure of a bubble relative to a color split. Chains are
/// maximal runs of factors (white i, black ρ(i)) in which every row color
/// joins black ρ(i) to the same next white. A chain closed on itself appears
/// once and starts at its smallest white. Chains are ordered by starting white.
struct ChainDecomposition {
  std::vector<int> chain_lengths;
  /// Whites of each chain, in chain order.
  std::vector<std::vector<int>> chain_whites;
  /// For each row color (ascending), the permutation sending chain j to the
  /// chain whose starting white its last black connects to by that color.
  std::vector<std::pair<int, Permutation>> endpoint_maps;
  /// The common column-color permutation: white i pairs with black pairing(i).
  Permutation pairing;

  int chain_count() const { return static_cast<int>(chain_lengths.size()); }
  int total_length() const;
  const Permutation& endpoint_map(int row_color) const;
};

struct NotChainExpressible {
  int color_a;
  int color_b;
  std::string reason;
};

using ChainResult = std::variant<ChainDecomposition, NotChainExpressible>;

ChainResult chain_decomposition(const Bubble& b, const ColorSplit& split);

/// Inverse of chain_decomposition up to relabeling: whites are numbered chain
/// by chain, column colors are the identity.
Bubble reconstruct_from_chains(const ColorSplit& split, const std::vector<int>& chain_lengths,
                               const std::vector<std::pair<int, Permutation>>& endpoint_maps);

/// Relabels whites in chain order (and each black like its paired white), the
/// labeling reconstruct_from_chains produces.
Bubble relabel_by_chains(const Bubble& b, const ChainDecomposition& chains);

}  // namespace bubblecalc
