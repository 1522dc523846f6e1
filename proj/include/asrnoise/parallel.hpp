// Copyright 2026 asrnoise Authors
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
#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace asrnoise {

// Batch size of the streaming drivers. Memory use is bounded by one batch,
// not by corpus size.
inline constexpr size_t kBatchLines = 4096;

// Runs fn(begin, end, slice) over [0, n) in contiguous slices on `workers`
// threads. Rethrows the first worker exception in slice order.
template <typename Fn>
void parallel_slices(size_t n, unsigned workers, Fn&& fn) {
  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    fn(size_t{0}, n, 0u);
    return;
  }
  const unsigned used = unsigned(std::min<size_t>(workers, n));
  std::vector<std::exception_ptr> errors(used);
  std::vector<std::thread> threads;
  threads.reserve(used);
  for (unsigned w = 0; w < used; ++w) {
    const size_t begin = n * w / used;
    const size_t end = n * (w + 1) / used;
    threads.emplace_back([&fn, &errors, w, begin, end] {
      try {
        fn(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Ordered parallel map over a stream. `map` must be a pure function of
// (index, item); `emit` sees results in input order, so output bytes cannot
// depend on the worker count or scheduling.
template <typename Item, typename Result, typename Source, typename Map,
          typename Emit>
void for_each_ordered(Source&& source, unsigned workers, Map&& map,
                      Emit&& emit, size_t batch_size = kBatchLines) {
  std::vector<Item> batch;
  std::vector<Result> results;
  batch.reserve(batch_size);
  uint64_t base = 0;
  Item item;
  bool more = true;
  while (more) {
    batch.clear();
    while (batch.size() < batch_size && (more = source(item)))
      batch.push_back(std::move(item));
    if (batch.empty()) break;
    results.resize(batch.size());
    parallel_slices(batch.size(), workers,
                    [&](size_t begin, size_t end, unsigned) {
                      for (size_t i = begin; i < end; ++i)
                        results[i] = map(base + i, batch[i]);
                    });
    for (size_t i = 0; i < batch.size(); ++i) emit(base + i, results[i]);
    base += batch.size();
  }
}

}  // namespace asrnoise
