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

#include "rpcp/random.h"

#include <cmath>
#include <stdexcept>

namespace rpcp {

double RandomStream::NextUnit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::Uniform(double lo, double hi) {
  if (!(hi > lo)) return lo;
  double v = lo + (hi - lo) * NextUnit();
  // Rounding can land on hi for very narrow ranges.
  return v < hi ? v : lo;
}

std::uint64_t RandomStream::UniformIndex(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("UniformIndex: empty range");
  if (n == 1) return 0;
  // Rejection on the largest multiple of n keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

std::int64_t RandomStream::UniformInt(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("UniformInt: hi < lo");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(UniformIndex(span));
}

double RandomStream::Normal(double stddev) {
  if (stddev == 0.0) return 0.0;
  double u, v, s;
  do {
    u = 2.0 * NextUnit() - 1.0;
    v = 2.0 * NextUnit() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  return stddev * u * std::sqrt(-2.0 * std::log(s) / s);
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t StableHash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t SplitStream(std::uint64_t seed, std::string_view key,
                          std::uint64_t salt) {
  std::uint64_t h = SplitMix64(seed);
  h = SplitMix64(h ^ StableHash(key));
  return SplitMix64(h ^ SplitMix64(salt + 0x632be59bd9b4e019ULL));
}

std::uint64_t SplitStream(std::uint64_t parent, std::uint64_t index) {
  return SplitMix64(SplitMix64(parent) ^ SplitMix64(~index));
}

}  // namespace rpcp
