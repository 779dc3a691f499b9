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

#include "bubblecalc/parallel.hpp"

namespace bubblecalc {

std::vector<Block> split_range(std::uint64_t total, std::uint64_t max_blocks) {
  std::vector<Block> blocks;
  if (total == 0) return blocks;
  const std::uint64_t count = std::max<std::uint64_t>(1, std::min(total, max_blocks));
  const std::uint64_t base = total / count;
  const std::uint64_t extra = total % count;
  std::uint64_t start = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t len = base + (i < extra ? 1 : 0);
    blocks.push_back({start, start + len});
    start += len;
  }
  return blocks;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace bubblecalc
