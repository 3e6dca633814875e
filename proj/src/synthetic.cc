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

#include "rpcp/synthetic.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <vector>

#include "rpcp/random.h"

namespace rpcp {
namespace {

struct Ellipse {
  double cx, cy, rx, ry, angle;

  bool Contains(double x, double y) const {
    const double c = std::cos(angle), s = std::sin(angle);
    const double dx = x - cx, dy = y - cy;
    const double u = (dx * c + dy * s) / rx;
    const double v = (-dx * s + dy * c) / ry;
    return u * u + v * v <= 1.0;
  }
};

double Quantize(double v) {
  return std::round(std::clamp(v, 0.0, 1.0) * 255.0) / 255.0;
}

double HashNoise(std::uint64_t seed, int x, int y) {
  const std::uint64_t h = SplitMix64(seed ^ (static_cast<std::uint64_t>(y) << 32) ^
                                     static_cast<std::uint64_t>(x));
  return static_cast<double>(h >> 11) * 0x1.0p-53 - 0.5;
}

}  // namespace

std::string SyntheticId(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "leaf_%03d", index);
  return buf;
}

LoadedPair GenerateSyntheticPair(int index, const SyntheticSpec& spec) {
  const int n = spec.size;
  RandomStream rng(SplitStream(spec.seed, SyntheticId(index), index));
  const double sz = n;

  const Ellipse leaf{sz * rng.Uniform(0.45, 0.55), sz * rng.Uniform(0.45, 0.55),
                     sz * rng.Uniform(0.38, 0.46), sz * rng.Uniform(0.20, 0.28),
                     rng.Uniform(0.0, std::numbers::pi)};

  auto point_in_leaf = [&](double margin) {
    const double r = std::sqrt(rng.Uniform(0.0, 1.0)) * (1.0 - margin);
    const double t = rng.Uniform(0.0, 2 * std::numbers::pi);
    const double u = r * std::cos(t) * leaf.rx, v = r * std::sin(t) * leaf.ry;
    const double c = std::cos(leaf.angle), s = std::sin(leaf.angle);
    return std::pair{leaf.cx + u * c - v * s, leaf.cy + u * s + v * c};
  };

  std::vector<Ellipse> lesions;
  const int lesion_count = static_cast<int>(rng.UniformInt(1, 3));
  for (int i = 0; i < lesion_count; ++i) {
    const auto [x, y] = point_in_leaf(0.3);
    lesions.push_back({x, y, sz * rng.Uniform(0.04, 0.08),
                       sz * rng.Uniform(0.03, 0.06), rng.Uniform(0.0, 3.14)});
  }

  // Damage blob = cluster of small overlapping ellipses. Every third image
  // carries none so the dataset stays imbalanced.
  std::vector<Ellipse> damage;
  const int blob_count = index % 3 == 2 ? 0 : static_cast<int>(rng.UniformInt(1, 2));
  for (int b = 0; b < blob_count; ++b) {
    const auto [x, y] = point_in_leaf(0.35);
    const int parts = static_cast<int>(rng.UniformInt(2, 4));
    for (int k = 0; k < parts; ++k) {
      damage.push_back({x + sz * rng.Uniform(-0.02, 0.02),
                        y + sz * rng.Uniform(-0.02, 0.02),
                        sz * rng.Uniform(0.012, 0.03), sz * rng.Uniform(0.01, 0.025),
                        rng.Uniform(0.0, 3.14)});
    }
  }

  const std::uint64_t noise_seed = rng.NextU64();
  const double vein_phase = rng.Uniform(0.0, 6.28);
  LoadedPair out{ImageRgb(n, n), LabelMap(n, n)};
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const double px = x + 0.5, py = y + 0.5;
      const double noise = HashNoise(noise_seed, x, y);
      ClassId cls = 0;
      double r = 0.30 + 0.05 * noise, g = 0.22 + 0.04 * noise, b = 0.15 + 0.03 * noise;
      if (leaf.Contains(px, py)) {
        cls = 1;
        const double vein = 0.04 * std::sin(0.35 * (px + py) + vein_phase);
        r = 0.20 + vein + 0.06 * noise;
        g = 0.55 + vein + 0.08 * noise;
        b = 0.18 + 0.5 * vein + 0.05 * noise;
        for (const auto& e : lesions) {
          if (e.Contains(px, py)) {
            cls = 2;
            r = 0.60 + 0.08 * noise;
            g = 0.45 + 0.06 * noise;
            b = 0.12 + 0.04 * noise;
          }
        }
        for (const auto& e : damage) {
          if (e.Contains(px, py)) {
            cls = 3;
            r = 0.85 + 0.06 * noise;
            g = 0.80 + 0.06 * noise;
            b = 0.62 + 0.06 * noise;
          }
        }
      }
      out.label.at(x, y) = cls;
      out.image.at(x, y, 0) = Quantize(r);
      out.image.at(x, y, 1) = Quantize(g);
      out.image.at(x, y, 2) = Quantize(b);
    }
  }
  return out;
}

void WriteSyntheticDataset(const std::string& root, const SyntheticSpec& spec) {
  const OutputDirs dirs{(std::filesystem::path(root) / "images").string(),
                        (std::filesystem::path(root) / "masks").string()};
  for (int i = 0; i < spec.count; ++i) {
    const LoadedPair pair = GenerateSyntheticPair(i, spec);
    WritePair(pair.image, pair.label, dirs, SyntheticId(i));
  }
}

}  // namespace rpcp
