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

#include "bubblecalc/tree.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace bubblecalc {

namespace {

constexpr int other_color(int c) { return c == 1 ? 3 : 1; }

int count_vertices(const TreeVertex& v) {
  int n = 1;
  for (const auto& c : v.children) n += count_vertices(c);
  return n;
}

void collect_totals(const TreeVertex& v, std::vector<int>& out) {
  out.push_back(v.total());
  for (const auto& c : v.children) collect_totals(c, out);
}

std::string vertex_string(const TreeVertex& v) {
  std::string s = std::to_string(v.color) + "[";
  for (std::size_t i = 0; i < v.labels.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v.labels[i]);
  }
  s += "]";
  if (!v.children.empty()) {
    s += "(";
    for (std::size_t i = 0; i < v.children.size(); ++i) {
      if (i) s += ' ';
      s += vertex_string(v.children[i]);
    }
    s += ")";
  }
  return s;
}

std::vector<int> child_gaps(const TreeVertex& v) {
  std::vector<int> gaps;
  int g = 0;
  for (std::size_t i = 0; i < v.children.size(); ++i) {
    g += v.labels[i];
    gaps.push_back(g);
  }
  return gaps;
}

std::string vertex_violation(const TreeVertex& v, const std::string& path) {
  if (v.color != 1 && v.color != 3) return path + ": insertion color must be 1 or 3";
  if (v.labels.size() != v.children.size() + 1) {
    return path + ": expected " + std::to_string(v.children.size() + 1) + " corner labels, got " +
           std::to_string(v.labels.size());
  }
  for (int l : v.labels) {
    if (l < 0) return path + ": negative corner label";
  }
  const int k = v.total();
  if (k < 1) return path + ": corner labels must sum to at least 1";
  const int own = v.color;
  const auto gaps = child_gaps(v);
  for (std::size_t i = 0; i < v.children.size(); ++i) {
    const int g = gaps[i];
    const int c = v.children[i].color;
    if (c != 1 && c != 3) return path + ": child insertion color must be 1 or 3";
    if (g == 0 && c != other_color(own)) {
      return path + ": a child at gap 0 must have color " + std::to_string(other_color(own));
    }
    if (g == k && c != own) return path + ": a child at gap k must have color " + std::to_string(own);
    if (i > 0 && gaps[i - 1] == g && !(v.children[i - 1].color == 1 && c == 3)) {
      return path + ": children sharing a gap must be color 1 then color 3";
    }
    if (auto w = vertex_violation(v.children[i], path + "/" + std::to_string(i)); !w.empty()) return w;
  }
  return {};
}

struct Builder {
  int next_white = 0;
  // succ[c][black] = white joined to that black by color c (c = 1 or 3).
  std::vector<int> succ1, succ3;
  std::vector<std::vector<int>> vertex_whites;
  std::vector<bool> is_leaf;
  std::vector<int> totals;

  std::vector<int>& succ(int c) { return c == 1 ? succ1 : succ3; }

  // Returns the exposed (entry white, exit black) of the segment on color `own`.
  std::pair<int, int> build(const TreeVertex& v, int own) {
    const int k = v.total();
    const int first = next_white;
    next_white += k;
    const auto idx = vertex_whites.size();
    vertex_whites.emplace_back(k);
    std::iota(vertex_whites[idx].begin(), vertex_whites[idx].end(), first);
    is_leaf.push_back(v.children.empty());
    totals.push_back(k);

    const auto gaps = child_gaps(v);
    // children per (gap, color) in listed order; build in listed order.
    std::vector<std::pair<int, int>> built(v.children.size());
    for (std::size_t i = 0; i < v.children.size(); ++i) built[i] = build(v.children[i], v.children[i].color);

    auto child_at = [&](int gap, int color) -> int {
      for (std::size_t i = 0; i < v.children.size(); ++i) {
        if (gaps[i] == gap && v.children[i].color == color) return static_cast<int>(i);
      }
      return -1;
    };

    auto splice = [&](int color, int from_black, int gap, int to_white) {
      int cur = from_black;
      if (int i = child_at(gap, color); i >= 0) {
        succ(color)[static_cast<std::size_t>(cur)] = built[static_cast<std::size_t>(i)].first;
        cur = built[static_cast<std::size_t>(i)].second;
      }
      succ(color)[static_cast<std::size_t>(cur)] = to_white;
    };

    for (int g = 1; g < k; ++g) {
      for (int color : {1, 3}) splice(color, first + g - 1, g, first + g);
    }
    const int last = first + k - 1;
    splice(other_color(own), last, 0, first);
    int entry = first;
    if (int i = child_at(k, own); i >= 0) {
      entry = built[static_cast<std::size_t>(i)].first;
      succ(own)[static_cast<std::size_t>(built[static_cast<std::size_t>(i)].second)] = first;
    }
    return {entry, last};
  }
};

void gen_vertex(int own, int vmax, int kmax, const std::function<void(const TreeVertex&, int, int)>& emit);

// Chooses children for the remaining slots of a vertex under construction.
void gen_slots(const std::vector<std::pair<int, int>>& slots, std::size_t s, int k, int vleft, int kleft,
               std::vector<std::pair<int, TreeVertex>>& chosen, int own, int vused, int kused,
               const std::function<void(const TreeVertex&, int, int)>& emit) {
  if (s == slots.size()) {
    TreeVertex v;
    v.color = own;
    v.labels.clear();
    int prev = 0;
    for (const auto& [gap, child] : chosen) {
      v.labels.push_back(gap - prev);
      prev = gap;
      v.children.push_back(child);
    }
    v.labels.push_back(k - prev);
    emit(v, vused, kused);
    return;
  }
  gen_slots(slots, s + 1, k, vleft, kleft, chosen, own, vused, kused, emit);
  if (vleft < 1 || kleft < 1) return;
  const auto [gap, color] = slots[s];
  gen_vertex(color, vleft, kleft, [&](const TreeVertex& child, int cv, int ck) {
    chosen.emplace_back(gap, child);
    gen_slots(slots, s + 1, k, vleft - cv, kleft - ck, chosen, own, vused + cv, kused + ck, emit);
    chosen.pop_back();
  });
}

void gen_vertex(int own, int vmax, int kmax, const std::function<void(const TreeVertex&, int, int)>& emit) {
  for (int k = 1; k <= kmax; ++k) {
    std::vector<std::pair<int, int>> slots;
    slots.emplace_back(0, other_color(own));
    for (int g = 1; g < k; ++g) {
      slots.emplace_back(g, 1);
      slots.emplace_back(g, 3);
    }
    slots.emplace_back(k, own);
    std::vector<std::pair<int, TreeVertex>> chosen;
    gen_slots(slots, 0, k, vmax - 1, kmax - k, chosen, own, 1, k, emit);
  }
}

}  // namespace

int TreeVertex::total() const { return std::accumulate(labels.begin(), labels.end(), 0); }

int CornerLabeledTree::vertex_count() const { return count_vertices(root); }

std::vector<int> CornerLabeledTree::vertex_totals() const {
  std::vector<int> out;
  collect_totals(root, out);
  return out;
}

std::string CornerLabeledTree::to_string() const { return vertex_string(root); }

CornerLabeledTree single_vertex_tree(int k) {
  CornerLabeledTree t;
  t.root.labels = {k};
  return t;
}

std::string tree_violation(const CornerLabeledTree& t) {
  if (t.root.color != 1) return "root: insertion color must be 1";
  return vertex_violation(t.root, "root");
}

void require_valid(const CornerLabeledTree& t) {
  if (auto w = tree_violation(t); !w.empty()) throw std::invalid_argument("invalid tree: " + w);
}

TreeBubble tree_to_bubble_layout(const CornerLabeledTree& t) {
  require_valid(t);
  std::vector<int> totals = t.vertex_totals();
  const int n = std::accumulate(totals.begin(), totals.end(), 0);
  Builder b;
  b.succ1.assign(static_cast<std::size_t>(n), -1);
  b.succ3.assign(static_cast<std::size_t>(n), -1);
  const auto [entry, exit] = b.build(t.root, 1);
  b.succ1[static_cast<std::size_t>(exit)] = entry;

  auto inverse_of_succ = [&](const std::vector<int>& succ) {
    std::vector<int> tau(static_cast<std::size_t>(n), -1);
    for (int black = 0; black < n; ++black) tau[static_cast<std::size_t>(succ[static_cast<std::size_t>(black)])] = black;
    return Permutation(std::move(tau));
  };
  std::vector<Permutation> maps{inverse_of_succ(b.succ1), Permutation::identity(n), inverse_of_succ(b.succ3),
                                Permutation::identity(n)};
  TreeBubble out{Bubble(std::move(maps)), std::move(b.vertex_whites), std::move(b.is_leaf), std::move(b.totals)};
  return out;
}

Bubble tree_to_bubble(const CornerLabeledTree& t) { return tree_to_bubble_layout(t).bubble; }

BigInt catalan_product(const CornerLabeledTree& t) {
  require_valid(t);
  BigInt p = 1;
  for (int k : t.vertex_totals()) p *= catalan(k);
  return p;
}

void for_each_tree(int max_vertices, int max_total_label, const std::function<void(const CornerLabeledTree&)>& fn) {
  if (max_vertices < 1 || max_total_label < 1) throw std::invalid_argument("tree enumeration bounds must be >= 1");
  gen_vertex(1, max_vertices, max_total_label, [&](const TreeVertex& root, int, int) {
    CornerLabeledTree t;
    t.root = root;
    fn(t);
  });
}

std::vector<CornerLabeledTree> enumerate_trees(int max_vertices, int max_total_label) {
  std::vector<CornerLabeledTree> out;
  for_each_tree(max_vertices, max_total_label, [&](const CornerLabeledTree& t) { out.push_back(t); });
  return out;
}

}  // namespace bubblecalc
