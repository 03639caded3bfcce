// Copyright 2026 The mixdetect Authors
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

#ifndef MIXDETECT_PARALLEL_HPP_
#define MIXDETECT_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mixdetect {

// Worker count: MIXDETECT_THREADS if set and positive, else hardware
// parallelism.
inline int thread_budget() {
  if (const char* env = std::getenv("MIXDETECT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Splits [0, count) into at most `threads` contiguous chunks and runs
// fn(begin, end) on each. Partitioning depends only on (count, threads), so
// any computation that writes to per-index slots is deterministic regardless
// of scheduling. threads <= 0 means thread_budget().
template <typename Fn>
void parallel_chunks(std::size_t count, int threads, Fn&& fn) {
  if (count == 0) return;
  if (threads <= 0) threads = thread_budget();
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  if (workers <= 1) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(begin + chunk, count);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace mixdetect

#endif  // MIXDETECT_PARALLEL_HPP_
