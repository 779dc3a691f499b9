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

#include "bubblecalc/bubble.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bubblecalc {

Bubble::Bubble(std::vector<Permutation> color_maps) : maps_(std::move(color_maps)) {
  if (maps_.empty()) throw std::invalid_argument("bubble needs at least one color");
  for (const auto& m : maps_) {
    if (m.size() != maps_.front().size()) throw std::invalid_argument("color maps have different sizes");
  }
  if (maps_.front().size() == 0) throw std::invalid_argument("bubble needs at least one vertex pair");
}

const Permutation& Bubble::color(int c) const {
  if (c < 1 || c > d()) throw std::out_of_range("color " + std::to_string(c) + " out of range");
  return maps_[static_cast<std::size_t>(c - 1)];
}

ColorSplit::ColorSplit(int d, std::vector<int> column_colors) : d_(d), columns_(std::move(column_colors)) {
  std::sort(columns_.begin(), columns_.end());
  columns_.erase(std::unique(columns_.begin(), columns_.end()), columns_.end());
  for (int c : columns_) {
    if (c < 1 || c > d) throw std::invalid_argument("split color " + std::to_string(c) + " outside 1.." + std::to_string(d));
  }
  if (columns_.empty() || static_cast<int>(columns_.size()) == d) {
    throw std::invalid_argument("column colors must be a nonempty proper subset of the colors");
  }
  for (int c = 1; c <= d; ++c) {
    if (!is_column(c)) rows_.push_back(c);
  }
}

ColorSplit ColorSplit::parse(int d, const std::string& text) {
  std::vector<int> cols;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      cols.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed color split: " + text);
    }
  }
  return ColorSplit(d, std::move(cols));
}

bool ColorSplit::is_column(int c) const { return std::binary_search(columns_.begin(), columns_.end(), c); }

std::string ColorSplit::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(columns_[i]);
  }
  return s;
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::string s;
  for (std::size_t i = 0; i < diagnostics.size(); ++i) {
    if (i) s += "; ";
    s += diagnostics[i].message;
  }
  return s;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Whites are 0..n-1, blacks n..2n-1.
std::vector<std::vector<int>> components(int n, const std::vector<std::vector<int>>& zero_based) {
  UnionFind uf(2 * n);
  for (const auto& m : zero_based) {
    for (int i = 0; i < n; ++i) uf.unite(i, n + m[static_cast<std::size_t>(i)]);
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> index(static_cast<std::size_t>(2 * n), -1);
  for (int v = 0; v < 2 * n; ++v) {
    const int r = uf.find(v);
    if (index[static_cast<std::size_t>(r)] < 0) {
      index[static_cast<std::size_t>(r)] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(index[static_cast<std::size_t>(r)])].push_back(v);
  }
  return comps;
}

std::string describe_component(int n, const std::vector<int>& comp) {
  std::string s = "{";
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (i) s += ",";
    const int v = comp[i];
    s += v < n ? "w" + std::to_string(v + 1) : "b" + std::to_string(v - n + 1);
  }
  return s + "}";
}

}  // namespace

ValidationReport validate(int d, int n, const std::vector<std::vector<int>>& colors) {
  ValidationReport rep;
  if (d < 1 || n < 1) {
    rep.diagnostics.push_back({Diagnostic::Kind::shape, 0, "d and n must be positive"});
    return rep;
  }
  if (static_cast<int>(colors.size()) != d) {
    rep.diagnostics.push_back({Diagnostic::Kind::shape, 0,
                               "expected " + std::to_string(d) + " colors, got " + std::to_string(colors.size())});
    return rep;
  }
  std::vector<std::vector<int>> zero_based;
  for (int c = 1; c <= d; ++c) {
    const auto& img = colors[static_cast<std::size_t>(c - 1)];
    if (static_cast<int>(img.size()) != n) {
      rep.diagnostics.push_back({Diagnostic::Kind::shape, c,
                                 "color " + std::to_string(c) + " has " + std::to_string(img.size()) + " entries, expected " +
                                     std::to_string(n)});
      continue;
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    bool bijective = true;
    for (int v : img) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
        bijective = false;
        break;
      }
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    if (!bijective) {
      rep.diagnostics.push_back({Diagnostic::Kind::not_bijective, c,
                                 "color " + std::to_string(c) + " is not a bijection of 1.." + std::to_string(n)});
      continue;
    }
    std::vector<int> z(img);
    for (int& v : z) --v;
    zero_based.push_back(std::move(z));
  }
  if (!rep.ok()) return rep;
  const auto comps = components(n, zero_based);
  if (comps.size() > 1) {
    std::string msg = "disconnected: " + std::to_string(comps.size()) + " components";
    for (const auto& comp : comps) msg += " " + describe_component(n, comp);
    rep.diagnostics.push_back({Diagnostic::Kind::disconnected, 0, std::move(msg)});
  }
  return rep;
}

ValidationReport validate(const Bubble& b) {
  std::vector<std::vector<int>> colors;
  for (const auto& m : b.color_maps()) colors.push_back(m.one_based());
  return validate(b.d(), b.n(), colors);
}

void require_valid(const Bubble& b) {
  const auto rep = validate(b);
  if (!rep.ok()) throw std::invalid_argument("invalid bubble: " + rep.summary());
}

Bubble necklace(const ColorSplit& split, int k) {
  if (k < 1) throw std::invalid_argument("necklace length must be >= 1");
  std::vector<Permutation> maps;
  for (int c = 1; c <= split.d(); ++c) {
    maps.push_back(split.is_column(c) ? Permutation::identity(k) : Permutation::rotation(k, -1));
  }
  return Bubble(std::move(maps));
}

int bicolored_cycle_count(const Bubble& b, int c1, int c2) {
  if (c1 == c2) throw std::invalid_argument("bicolored cycles need two distinct colors");
  return compose(b.color(c1).inverse(), b.color(c2)).cycle_count();
}

int ChainDecomposition::total_length() const {
  return std::accumulate(chain_lengths.begin(), chain_lengths.end(), 0);
}

const Permutation& ChainDecomposition::endpoint_map(int row_color) const {
  for (const auto& [c, p] : endpoint_maps) {
    if (c == row_color) return p;
  }
  throw std::out_of_range("no endpoint map for color " + std::to_string(row_color));
}

ChainResult chain_decomposition(const Bubble& b, const ColorSplit& split) {
  if (split.d() != b.d()) throw std::invalid_argument("split and bubble disagree on d");
  const auto& cols = split.column_colors();
  const Permutation& rho = b.color(cols.front());
  for (std::size_t i = 1; i < cols.size(); ++i) {
    if (b.color(cols[i]) != rho) {
      return NotChainExpressible{cols.front(), cols[i],
                                 "column colors " + std::to_string(cols.front()) + " and " + std::to_string(cols[i]) +
                                     " join different vertex pairs; the polynomial is not a function of MM†"};
    }
  }
  const int n = b.n();
  const auto& rows = split.row_colors();
  std::vector<Permutation> row_inv;
  for (int c : rows) row_inv.push_back(b.color(c).inverse());

  // next[i]: the white every row color leads to from black ρ(i), or -1.
  std::vector<int> next(static_cast<std::size_t>(n), -1);
  std::vector<char> has_prev(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const int target = row_inv.front()(rho(i));
    bool all = true;
    for (const auto& inv : row_inv) all = all && inv(rho(i)) == target;
    if (all) {
      next[static_cast<std::size_t>(i)] = target;
      has_prev[static_cast<std::size_t>(target)] = 1;
    }
  }

  std::vector<int> chain_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> chains;
  auto walk = [&](int start) {
    std::vector<int> chain;
    int w = start;
    do {
      chain_of[static_cast<std::size_t>(w)] = static_cast<int>(chains.size());
      chain.push_back(w);
      w = next[static_cast<std::size_t>(w)];
    } while (w >= 0 && w != start);
    chains.push_back(std::move(chain));
  };
  // Open chains start at whites without a predecessor; the rest are closed
  // cycles started at their minimum. Both kinds are then ordered by start.
  std::vector<int> starts;
  for (int i = 0; i < n; ++i) {
    if (!has_prev[static_cast<std::size_t>(i)]) starts.push_back(i);
  }
  for (int s : starts) walk(s);
  for (int i = 0; i < n; ++i) {
    if (chain_of[static_cast<std::size_t>(i)] < 0) walk(i);
  }
  std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& c) { return a.front() < c.front(); });
  for (std::size_t j = 0; j < chains.size(); ++j) {
    for (int w : chains[j]) chain_of[static_cast<std::size_t>(w)] = static_cast<int>(j);
  }

  ChainDecomposition out;
  out.pairing = rho;
  for (const auto& ch : chains) out.chain_lengths.push_back(static_cast<int>(ch.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<int> img(chains.size());
    for (std::size_t j = 0; j < chains.size(); ++j) {
      const int target = row_inv[r](rho(chains[j].back()));
      const int tj = chain_of[static_cast<std::size_t>(target)];
      if (chains[static_cast<std::size_t>(tj)].front() != target) {
        throw std::logic_error("chain end does not connect to a chain start");
      }
      img[j] = tj;
    }
    out.endpoint_maps.emplace_back(rows[r], Permutation(std::move(img)));
  }
  out.chain_whites = std::move(chains);
  return out;
}

Bubble reconstruct_from_chains(const ColorSplit& split, const std::vector<int>& chain_lengths,
                               const std::vector<std::pair<int, Permutation>>& endpoint_maps) {
  const int m = static_cast<int>(chain_lengths.size());
  std::vector<int> start(static_cast<std::size_t>(m), 0);
  int n = 0;
  for (int j = 0; j < m; ++j) {
    if (chain_lengths[static_cast<std::size_t>(j)] < 1) throw std::invalid_argument("chain lengths must be positive");
    start[static_cast<std::size_t>(j)] = n;
    n += chain_lengths[static_cast<std::size_t>(j)];
  }
  std::vector<Permutation> maps;
  for (int c = 1; c <= split.d(); ++c) {
    if (split.is_column(c)) {
      maps.push_back(Permutation::identity(n));
      continue;
    }
    const Permutation* pi = nullptr;
    for (const auto& [color, p] : endpoint_maps) {
      if (color == c) pi = &p;
    }
    if (pi == nullptr || pi->size() != m) throw std::invalid_argument("missing endpoint map for row color " + std::to_string(c));
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int j = 0; j < m; ++j) {
      const int s = start[static_cast<std::size_t>(j)];
      const int len = chain_lengths[static_cast<std::size_t>(j)];
      for (int t = 1; t < len; ++t) img[static_cast<std::size_t>(s + t)] = s + t - 1;
      img[static_cast<std::size_t>(start[static_cast<std::size_t>((*pi)(j))])] = s + len - 1;
    }
    maps.emplace_back(std::move(img));
  }
  return Bubble(std::move(maps));
}

Bubble relabel_by_chains(const Bubble& b, const ChainDecomposition& chains) {
  const int n = b.n();
  std::vector<int> pos(static_cast<std::size_t>(n));
  int k = 0;
  for (const auto& ch : chains.chain_whites) {
    for (int w : ch) pos[static_cast<std::size_t>(w)] = k++;
  }
  const Permutation rho_inv = chains.pairing.inverse();
  std::vector<Permutation> maps;
  for (const auto& m : b.color_maps()) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) img[static_cast<std::size_t>(pos[static_cast<std::size_t>(w)])] = pos[static_cast<std::size_t>(rho_inv(m(w)))];
    maps.emplace_back(std::move(img));
  }
  return Bubble(std::move(maps));
}

}  // namespace bubblecalc
