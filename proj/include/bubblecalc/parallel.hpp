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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace bubblecalc {

/// Half-open range [begin, end) of a block in a fixed partition of [0, total).
struct Block {
  std::uint64_t begin;
  std::uint64_t end;
};

/// Splits [0, total) into at most `max_blocks` contiguous blocks. The split
/// depends only on its arguments, never on the worker count.
std::vector<Block> split_range(std::uint64_t total, std::uint64_t max_blocks);

/// Resolves a user-facing thread count: 0 means hardware concurrency.
unsigned resolve_threads(unsigned requested);

/// Evaluates fn(block) for every block on up to `threads` workers and returns
/// the per-block results in block order. Callers reduce the returned vector
/// sequentially, so the result never depends on scheduling.
template <class Fn>
auto map_blocks(const std::vector<Block>& blocks, unsigned threads, Fn&& fn)
    -> std::vector<decltype(fn(blocks.front()))> {
  using R = decltype(fn(blocks.front()));
  std::vector<R> results(blocks.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(resolve_threads(threads),
                                                           static_cast<unsigned>(blocks.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < blocks.size(); ++i) results[i] = fn(blocks[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < blocks.size(); i = next++) results[i] = fn(blocks[i]);
      } catch (...) {
        errors[w] = std::current_exception();
        next = blocks.size();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace bubblecalc
