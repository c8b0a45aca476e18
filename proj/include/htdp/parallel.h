// Copyright 2026 The htdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HTDP_PARALLEL_H_
#define HTDP_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace htdp {

// Runs fn(k) for k in [0, count) on up to `jobs` threads. Each index runs
// exactly once; callers write results into per-index slots and reduce in
// index order afterwards, which keeps outputs independent of `jobs`.
template <typename Fn>
void ParallelFor(size_t count, int jobs, Fn&& fn) {
  const size_t workers =
      std::min<size_t>(count, static_cast<size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
        fn(k);
      }
    });
  }
}

}  // namespace htdp

#endif  // HTDP_PARALLEL_H_
