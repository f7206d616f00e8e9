// Copyright 2026 The Authors.
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

#ifndef MATROIDPROB_SRC_PARALLEL_HPP_
#define MATROIDPROB_SRC_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace mprob::internal {

inline unsigned ResolveThreads(unsigned requested, std::size_t work) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency())
                              : requested;
  if (work < t) t = static_cast<unsigned>(std::max<std::size_t>(work, 1));
  return t;
}

// Splits [0, n) into `threads` contiguous chunks and runs fn(chunk, lo, hi)
// for each, one thread per chunk. Rethrows the first worker exception.
template <typename Fn>
void ParallelChunks(std::size_t n, unsigned threads, const Fn& fn) {
  if (threads <= 1) {
    fn(0u, std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned c = 0; c < threads; ++c) {
    const std::size_t lo = n * c / threads;
    const std::size_t hi = n * (c + 1) / threads;
    pool.emplace_back([&, c, lo, hi] {
      try {
        fn(c, lo, hi);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace mprob::internal

#endif  // MATROIDPROB_SRC_PARALLEL_HPP_
