// Copyright 2026 The stochgame Authors.
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

#ifndef STOCHGAME_PARALLEL_HPP_
#define STOCHGAME_PARALLEL_HPP_

#include <cstddef>
#include <exception>
#include <mutex>

namespace stochgame {

// Runs body(k) for k in [0, count) on the OpenMP pool. Each index is
// independent; the first exception thrown by any body is rethrown on the
// calling thread after the loop. Results land wherever `body` writes them,
// so the outcome does not depend on scheduling.
template <typename Body>
void parallel_for_each_index(std::size_t count, Body&& body,
                             std::size_t min_parallel = 2) {
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1) if (count >= min_parallel)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace stochgame

#endif  // STOCHGAME_PARALLEL_HPP_
