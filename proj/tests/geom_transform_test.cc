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

#include "rpcp/geom_transform.h"

#include <random>

#include <gtest/gtest.h>

#include "test_util.h"

namespace rpcp {
namespace {

Patch RandomPatch(std::mt19937_64& gen, int w, int h, double fill_prob) {
  Patch p;
  p.rgb = testing::RandomImage(gen, w, h);
  p.mask = BinaryMask(w, h);
  std::bernoulli_distribution on(fill_prob);
  for (auto& v : p.mask.data()) v = on(gen);
  // Tight box: force the border rows/columns to touch the mask.
  p.mask.set(0, h / 2);
  p.mask.set(w - 1, h / 3);
  p.mask.set(w / 2, 0);
  p.mask.set(w / 3, h - 1);
  p.class_id = 3;
  return p;
}

// Disc-shaped mask of radius r in a (2r+1)^2 box.
Patch DiscPatch(int r) {
  Patch p;
  const int n = 2 * r + 1;
  p.rgb = ImageRgb(n, n, 0.5);
  p.mask = BinaryMask(n, n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if ((x - r) * (x - r) + (y - r) * (y - r) <= r * r) p.mask.set(x, y);
  p.class_id = 3;
  return p;
}

// Counter-clockwise quarter turn as displayed (y down): source (x, y) of a
// w x h raster lands at (y, w - 1 - x) in the h x w result.
template <typename R>
R QuarterTurn(const R& src, int channels) {
  R out;
  if constexpr (std::is_same_v<R, ImageRgb>) {
    out = ImageRgb(src.height(), src.width());
  } else {
    out = R(src.height(), src.width());
  }
  for (int y = 0; y < src.height(); ++y)
    for (int x = 0; x < src.width(); ++x)
      for (int c = 0; c < channels; ++c)
        out.at(y, src.width() - 1 - x, c) = src.at(x, y, c);
  return out;
}

TEST(SampleParamsTest, DegenerateRanges) {
  AugConfig cfg;
  cfg.scale_min = cfg.scale_max = 1.0;
  cfg.rotation_min = cfg.rotation_max = 0.0;
  RandomStream rng(1);
  for (int i = 0; i < 100; ++i) {
    const AugParams p = SampleParams(rng, cfg, 5);
    EXPECT_EQ(p.scale, 1.0);
    EXPECT_EQ(p.theta, 0.0);
    EXPECT_LT(p.patch_ref, 5u);
    EXPECT_EQ(p.x, -1);
  }
}

TEST(SampleParamsTest, StreamDeterminism) {
  const AugConfig cfg;
  RandomStream a(99), b(99);
  const AugParams first = SampleParams(a, cfg, 10);
  const AugParams second = SampleParams(a, cfg, 10);
  EXPECT_NE(first, second);
  EXPECT_EQ(first, SampleParams(b, cfg, 10));
  EXPECT_EQ(second, SampleParams(b, cfg, 10));
}

TEST(SampleParamsTest, ScaleMeanMonteCarlo) {
  const AugConfig cfg;  // [0.8, 1.2]
  RandomStream rng(2024);
  double sum = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const AugParams p = SampleParams(rng, cfg, 3);
    ASSERT_GE(p.scale, 0.8);
    ASSERT_LT(p.scale, 1.2);
    ASSERT_GE(p.theta, 0.0);
    ASSERT_LT(p.theta, 360.0);
    sum += p.scale;
  }
  EXPECT_NEAR(sum / n, 1.0, 0.01);
}

TEST(SampleParamsTest, EmptyBank) {
  RandomStream rng(1);
  EXPECT_THROW(SampleParams(rng, AugConfig{}, 0), std::invalid_argument);
}

TEST(TransformPatchTest, IdentityTransform) {
  std::mt19937_64 gen(3);
  const Patch p = RandomPatch(gen, 9, 6, 0.5);
  const Patch out = TransformPatch(p, 1.0, 0.0);
  EXPECT_EQ(out.rgb, p.rgb);
  EXPECT_EQ(out.mask, p.mask);
  EXPECT_EQ(out.class_id, 3);
}

TEST(TransformPatchTest, RightAngleRotationsArePermutations) {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Patch p = RandomPatch(gen, 3 + trial % 7, 2 + trial % 5, 0.4);
    ImageRgb rgb = p.rgb;
    BinaryMask mask = p.mask;
    for (double theta : {90.0, 180.0, 270.0, 360.0}) {
      rgb = QuarterTurn(rgb, 3);
      mask = QuarterTurn(mask, 1);
      const Patch out = TransformPatch(p, 1.0, theta);
      ASSERT_EQ(out.mask, mask) << "theta " << theta;
      ASSERT_EQ(out.rgb, rgb) << "theta " << theta;
    }
  }
}

TEST(TransformPatchTest, DoubleScaleQuadruplesArea) {
  std::mt19937_64 gen(5);
  const Patch p = RandomPatch(gen, 7, 5, 0.6);
  const Patch out = TransformPatch(p, 2.0, 0.0);
  EXPECT_EQ(out.width(), 14);
  EXPECT_EQ(out.height(), 10);
  const double ratio =
      static_cast<double>(out.mask.count()) / static_cast<double>(p.mask.count());
  EXPECT_GE(ratio, 3.5);
  EXPECT_LE(ratio, 4.5);
}

TEST(TransformPatchTest, AreaTracksScaleSquaredForLargePatches) {
  RandomStream rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Patch p = DiscPatch(16 + trial % 16);  // >= 33 x 33
    const double s = rng.Uniform(0.5, 2.0);
    const double theta = rng.Uniform(0.0, 360.0);
    const Patch out = TransformPatch(p, s, theta);
    const double ratio = static_cast<double>(out.mask.count()) /
                         static_cast<double>(p.mask.count());
    ASSERT_NEAR(ratio / (s * s), 1.0, 0.15) << "s=" << s << " theta=" << theta;
  }
}

TEST(TransformPatchTest, OutputsStayBinaryAndInRange) {
  std::mt19937_64 gen(7);
  RandomStream rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Patch p = RandomPatch(gen, 4 + trial % 20, 4 + trial % 13, 0.5);
    const Patch out = TransformPatch(p, rng.Uniform(0.6, 1.6), rng.Uniform(0, 360));
    for (auto v : out.mask.data()) ASSERT_TRUE(v == 0 || v == 1);
    for (double v : out.rgb.data()) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
    // Tight box.
    EXPECT_EQ(out.mask.bounds(), (Box{0, 0, out.width(), out.height()}));
  }
}

TEST(TransformPatchTest, CollapseIsSignalled) {
  Patch p;
  p.rgb = ImageRgb(10, 10, 0.5);
  p.mask = BinaryMask(10, 10);
  p.mask.set(0, 0);
  EXPECT_THROW(TransformPatch(p, 0.05, 0.0), MaskCollapsed);
  EXPECT_THROW(TransformPatch(p, 0.0, 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace rpcp
