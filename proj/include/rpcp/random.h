/* Copyright 2026 The RPCP Augment Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef RPCP_RANDOM_H_
#define RPCP_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace rpcp {

// Deterministic random stream.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. The distribution transforms are implemented here because the
// standard library distributions are implementation-defined, and augmented
// outputs must be reproducible across toolchains.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t stream_id)
      : stream_id_(stream_id), engine_(stream_id) {}

  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double NextUnit();

  // Uniform in [lo, hi). Returns lo when hi <= lo.
  double Uniform(double lo, double hi);

  // Uniform integer in [0, n). n must be >= 1.
  std::uint64_t UniformIndex(std::uint64_t n);

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  // Normal(0, stddev^2), Marsaglia polar method without caching.
  double Normal(double stddev);

 private:
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

// 64-bit FNV-1a.
std::uint64_t StableHash(std::string_view text);

// Derives an independent stream id from a parent seed, a string key and a
// salt index. Distinct (key, salt) pairs collide with probability ~2^-64.
std::uint64_t SplitStream(std::uint64_t seed, std::string_view key,
                          std::uint64_t salt);

// Child stream id for sub-event `index` of a parent stream.
std::uint64_t SplitStream(std::uint64_t parent, std::uint64_t index);

}  // namespace rpcp

#endif  // RPCP_RANDOM_H_
