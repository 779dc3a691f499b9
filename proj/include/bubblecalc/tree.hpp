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

#include <functional>
#include <string>
#include <vector>

#include "bubblecalc/bubble.hpp"
#include "bubblecalc/combinatorics.hpp"

namespace bubblecalc {

/// One open necklace of a tree observable (d = 4, column colors {2,4}).
///
/// The necklace has k = sum(labels) MM† factors. Reading from the edge to the
/// parent, labels[0] factors precede the first child insertion, labels[i] lie
/// between children i-1 and i, and the last label follows the last child.
/// A child therefore sits at gap g = labels[0] + ... + labels[i] in 0..k.
///
/// Gaps 0 and k are the junction where the necklace is open on its own color
/// o. There, a child of the other color ō may only sit at gap 0 (it cuts the
/// ō edge that closes the necklace), and a child of color o may only sit at
/// gap k (it cuts the open o edge incident to the first white). At interior
/// gaps a color-1 child precedes a color-3 child. At most one child per
/// (gap, color). The root has own color 1 and its open edge closes on itself.
struct TreeVertex {
  int color = 1;  // insertion color, 1 or 3
  std::vector<int> labels{1};
  std::vector<TreeVertex> children;

  int total() const;  // k_v
  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
};

struct CornerLabeledTree {
  TreeVertex root;

  int vertex_count() const;
  /// k_v for every vertex in preorder.
  std::vector<int> vertex_totals() const;
  /// Compact form, e.g. "1[2,0](1[1])".
  std::string to_string() const;
  friend bool operator==(const CornerLabeledTree&, const CornerLabeledTree&) = default;
};

CornerLabeledTree single_vertex_tree(int k);

/// Empty string if valid, otherwise the first violation found.
std::string tree_violation(const CornerLabeledTree& t);
/// Throws std::invalid_argument on an invalid tree.
void require_valid(const CornerLabeledTree& t);

/// Bubble plus the factors contributed by each tree vertex (preorder).
struct TreeBubble {
  Bubble bubble;
  std::vector<std::vector<int>> vertex_whites;
  std::vector<bool> is_leaf;
  std::vector<int> vertex_totals;
};

TreeBubble tree_to_bubble_layout(const CornerLabeledTree& t);
Bubble tree_to_bubble(const CornerLabeledTree& t);

/// ∏_v Cat_{k_v}.
BigInt catalan_product(const CornerLabeledTree& t);

/// Every valid tree with at most `max_vertices` vertices and sum of k_v at most
/// `max_total_label`, each exactly once, in a fixed order.
void for_each_tree(int max_vertices, int max_total_label, const std::function<void(const CornerLabeledTree&)>& fn);
std::vector<CornerLabeledTree> enumerate_trees(int max_vertices, int max_total_label);

}  // namespace bubblecalc
