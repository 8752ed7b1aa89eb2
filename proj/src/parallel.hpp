// Copyright 2026 The Braid3 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BRAID3_SRC_PARALLEL_HPP_
#define BRAID3_SRC_PARALLEL_HPP_

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace braid3::detail {

// Evaluates fn(length) for every length in [lo, hi] on a small worker
// pool and returns the results indexed by length - lo, so reports merge
// in a fixed order regardless of scheduling. Each worker keeps its own
// thread-local memo tables. The first exception wins and is rethrown.
template <typename Result, typename Fn>
std::vector<Result> map_lengths(int lo, int hi, int threads, Fn fn) {
  const int count = hi - lo + 1;
  std::vector<Result> results(static_cast<std::size_t>(count > 0 ? count : 0));
  if (count <= 0) return results;

  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > count) workers = count;

  if (workers == 1) {
    for (int len = lo; len <= hi; ++len) {
      results[static_cast<std::size_t>(len - lo)] = fn(len);
    }
    return results;
  }

  // Longest lengths dominate, so hand them out first.
  std::atomic<int> next{hi};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const int len = next.fetch_sub(1);
        if (len < lo || failed.load()) return;
        try {
          results[static_cast<std::size_t>(len - lo)] = fn(len);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
  return results;
}

}  // namespace braid3::detail

#endif  // BRAID3_SRC_PARALLEL_HPP_
