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
#include <cassert>
#include <cstdint>
#include <vector>

namespace asrnoise {

// Default seed for every randomized command. A fixed constant rather than
// wall clock: bare invocations must be reproducible.
inline constexpr uint64_t kDefaultSeed = 42;

// splitmix64 finalizer (Vigna 2015). Also used as the mixing step of
// derive_seed below.
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
  z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
  return z ^ (z >> 31);
}

// Child seed for the RNG stream of (epoch, sentence). This function is part
// of the output contract: workers may process sentences in any order and
// still produce identical bytes, but changing the mix changes every output.
inline uint64_t derive_seed(uint64_t seed, uint64_t epoch, uint64_t sentence_id) {
  constexpr uint64_t kGolden = UINT64_C(0x9E3779B97F4A7C15);
  uint64_t s = mix64(seed + kGolden);
  s = mix64(s + epoch + kGolden);
  s = mix64(s + sentence_id + kGolden);
  return s;
}

// SplitMix64: 64-bit state, one add + finalizer per draw.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += UINT64_C(0x9E3779B97F4A7C15);
    return mix64(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  // Unbiased uniform draw in [0, n). Rejection over the largest multiple
  // of n below 2^64.
  uint64_t bounded(uint64_t n) {
    assert(n > 0);
    const uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

 private:
  uint64_t state_;
};

// Discrete distribution over integer weights; zero-weight entries are never
// drawn. Build once, sample many times.
class WeightedTable {
 public:
  WeightedTable() = default;

  explicit WeightedTable(const std::vector<uint64_t>& weights) {
    cumulative_.reserve(weights.size());
    uint64_t running = 0;
    for (uint64_t w : weights) {
      running += w;
      cumulative_.push_back(running);
    }
    total_ = running;
  }

  uint64_t total() const { return total_; }
  size_t size() const { return cumulative_.size(); }
  bool empty() const { return total_ == 0; }

  // Index drawn with probability weight[i] / total. Requires total > 0.
  size_t sample(SplitMix64& rng) const {
    assert(total_ > 0);
    const uint64_t u = rng.bounded(total_);
    return size_t(std::upper_bound(cumulative_.begin(), cumulative_.end(), u) -
                  cumulative_.begin());
  }

 private:
  std::vector<uint64_t> cumulative_;
  uint64_t total_ = 0;
};

}  // namespace asrnoise
