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

#include "rpcp/metrics.h"

#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_util.h"

namespace rpcp {
namespace {

using testing::MakeLabels;
using testing::TempDir;

// gt:   1 1 1      pred: 1 1 2
//       2 2 0            1 2 3
// The background pixel is skipped, so class 3 never appears.
struct Fixture {
  LabelMap gt = MakeLabels(3, 2, {1, 1, 1, 2, 2, 0});
  LabelMap pred = MakeLabels(3, 2, {1, 1, 2, 1, 2, 3});
  ClassScheme scheme;
};

TEST(ConfusionTest, HandComputedFixture) {
  Fixture f;
  const ConfusionCounts c = Confusion(f.pred, f.gt, f.scheme);
  EXPECT_EQ(c.evaluated_pixels, 5);
  EXPECT_EQ(c.tp, (std::vector<std::int64_t>{0, 2, 1, 0}));
  EXPECT_EQ(c.fp, (std::vector<std::int64_t>{0, 1, 1, 0}));
  EXPECT_EQ(c.fn, (std::vector<std::int64_t>{0, 1, 1, 0}));
  const auto m = ClassMetrics(c);
  EXPECT_DOUBLE_EQ(m[1].iou, 0.5);
  EXPECT_DOUBLE_EQ(m[1].acc, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(m[2].iou, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(m[2].acc, 0.5);
  EXPECT_TRUE(m[3].absent);
  const MeanMetrics mm = ComputeMeans(m, f.scheme);
  EXPECT_EQ(mm.classes_averaged, 2);
  EXPECT_DOUBLE_EQ(mm.miou, (0.5 + 1.0 / 3.0) / 2);
  EXPECT_DOUBLE_EQ(mm.macc, (2.0 / 3.0 + 0.5) / 2);
}

TEST(ConfusionTest, PerfectPredictionScoresOne) {
  Fixture f;
  const auto r = BuildReport(Confusion(f.gt, f.gt, f.scheme), f.scheme);
  EXPECT_DOUBLE_EQ(r.means.miou, 1.0);
  EXPECT_DOUBLE_EQ(r.means.macc, 1.0);
}

TEST(ConfusionTest, ErrorsAndMerging) {
  Fixture f;
  EXPECT_THROW(Confusion(LabelMap(2, 2), f.gt, f.scheme), DataError);
  ConfusionCounts a = Confusion(f.pred, f.gt, f.scheme);
  a += Confusion(f.pred, f.gt, f.scheme);
  EXPECT_EQ(a.tp[1], 4);
  EXPECT_EQ(a.evaluated_pixels, 10);
  EXPECT_THROW(ComputeMeans(ClassMetrics(ConfusionCounts(4)), f.scheme),
               std::invalid_argument);
}

TEST(ConfusionTest, ReportsNameClasses) {
  Fixture f;
  const auto r = BuildReport(Confusion(f.pred, f.gt, f.scheme), f.scheme);
  EXPECT_NE(ReportToJson(r).find("\"miou\""), std::string::npos);
  const std::string text = ReportToText(r);
  EXPECT_NE(text.find("lesion"), std::string::npos);
  EXPECT_NE(text.find("absent"), std::string::npos);
  EXPECT_NE(text.find("excluded"), std::string::npos);
}

// Brute-force oracle via pixel sets, plus structural properties.
TEST(ConfusionTest, MatchesSetOracleAndProperties) {
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<int> cls(0, 3);
  const ClassScheme scheme;
  for (int trial = 0; trial < 100; ++trial) {
    LabelMap gt(9, 7), pred(9, 7);
    for (auto& v : gt.data()) v = static_cast<ClassId>(cls(gen));
    for (auto& v : pred.data()) v = static_cast<ClassId>(cls(gen));
    const ConfusionCounts c = Confusion(pred, gt, scheme);
    const auto m = ClassMetrics(c);
    std::int64_t sum_fp = 0, sum_fn = 0;
    for (int k = 0; k < 4; ++k) {
      std::set<int> g, p;
      for (int i = 0; i < 63; ++i) {
        if (gt.data()[i] == 0) continue;
        if (gt.data()[i] == k) g.insert(i);
        if (pred.data()[i] == k) p.insert(i);
      }
      std::set<int> inter, uni = g;
      for (int i : p) (g.count(i) ? inter.insert(i) : uni.insert(i));
      ASSERT_EQ(c.tp[k], static_cast<std::int64_t>(inter.size()));
      if (uni.empty()) {
        EXPECT_TRUE(m[k].absent);
        continue;
      }
      EXPECT_DOUBLE_EQ(m[k].iou, double(inter.size()) / double(uni.size()));
      if (!g.empty()) {
        EXPECT_DOUBLE_EQ(m[k].acc, double(inter.size()) / double(g.size()));
        EXPECT_LE(m[k].iou, m[k].acc);
      }
      sum_fp += c.fp[k];
      sum_fn += c.fn[k];
    }
    EXPECT_EQ(sum_fp, sum_fn);
  }
}

TEST(AggregationTest, PublishedSegFormerBaselineRow) {
  EXPECT_NEAR(MeanOf({97.38, 82.73, 68.16}), 82.76, 0.01);
  EXPECT_NEAR(MeanOf({98.01, 90.12, 79.87}), 89.33, 0.01);
  EXPECT_THROW(MeanOf({}), std::invalid_argument);
}

TEST(DistributionTest, FractionsOverIncludedClasses) {
  const ClassScheme scheme;
  const auto d = ComputeDistribution(
      {MakeLabels(4, 1, {0, 1, 1, 2}), MakeLabels(2, 2, {3, 1, 0, 0})}, scheme);
  EXPECT_EQ(d.counts, (std::vector<std::int64_t>{3, 3, 1, 1}));
  EXPECT_EQ(d.included_total, 5);
  EXPECT_EQ(d.fractions[0], 0.0);
  EXPECT_DOUBLE_EQ(d.fractions[1], 0.6);
  EXPECT_DOUBLE_EQ(d.fractions[3], 0.2);
  EXPECT_NE(DistributionToJson(d, scheme).find("insect_damage"), std::string::npos);
  EXPECT_FALSE(DistributionToText(d, scheme).empty());
}

TEST(DistributionTest, AllBackgroundAndOutOfScheme) {
  const ClassScheme scheme;
  const auto d = ComputeDistribution({LabelMap(3, 3, 0)}, scheme);
  EXPECT_EQ(d.included_total, 0);
  for (double f : d.fractions) EXPECT_EQ(f, 0.0);
  PixelDistribution e = EmptyDistribution(scheme);
  EXPECT_THROW(e += LabelMap(1, 1, 9), DataError);
}

// Property: fractions sum to one whenever any included pixel exists.
TEST(DistributionTest, FractionsSumToOne) {
  std::mt19937_64 gen(2);
  std::uniform_int_distribution<int> cls(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    LabelMap m(5, 5);
    for (auto& v : m.data()) v = static_cast<ClassId>(cls(gen));
    m.at(0, 0) = 1;
    const auto d = ComputeDistribution({m}, ClassScheme{});
    double s = 0;
    for (double f : d.fractions) s += f;
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
}

class SamplingTest : public ::testing::Test {
 protected:
  std::vector<PairDescriptor> Write(const ImageRgb& img, const LabelMap& lab) {
    WritePair(img, lab, {dir_.str("images"), dir_.str("masks")}, "p");
    return ScanDataset(dir_.str("images"), dir_.str("masks"));
  }
  TempDir dir_{"sample"};
};

TEST_F(SamplingTest, ClassWithFewPixelsIsExhausted) {
  LabelMap lab(10, 10, 1);
  lab.at(1, 1) = lab.at(5, 2) = lab.at(9, 9) = 3;
  const auto pairs = Write(ImageRgb(10, 10, 0.5), lab);
  const auto rows = SamplePixels(pairs, ClassScheme{}, 20, 7);
  std::map<int, int> per;
  for (const auto& r : rows) {
    ++per[r.class_id];
    EXPECT_EQ(lab.at(r.x, r.y), r.class_id);
    EXPECT_EQ(r.r, 128);
  }
  EXPECT_EQ(per[3], 3);
  EXPECT_EQ(per[1], 20);
  EXPECT_EQ(per.count(2), 0u);
  const std::string csv = PixelSamplesToCsv(rows);
  EXPECT_EQ(csv.rfind(kPixelCsvHeader, 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 24);
}

TEST_F(SamplingTest, DeterministicAndWithoutReplacement) {
  std::mt19937_64 gen(3);
  const auto pairs = Write(testing::RandomImage(gen, 30, 30), LabelMap(30, 30, 2));
  const auto a = SamplePixels(pairs, ClassScheme{}, 50, 11);
  EXPECT_EQ(a, SamplePixels(pairs, ClassScheme{}, 50, 11));
  EXPECT_NE(a, SamplePixels(pairs, ClassScheme{}, 50, 12));
  std::set<std::pair<int, int>> pos;
  for (const auto& r : a) pos.insert({r.x, r.y});
  EXPECT_EQ(pos.size(), 50u);
}

TEST_F(SamplingTest, TwoToneProportionsPreserved) {
  const int w = 200, h = 200;
  ImageRgb img(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) img.at(x, y, 0) = x < w / 2 ? 1.0 : 0.0;
  const auto pairs = Write(img, LabelMap(w, h, 1));
  const int n = 5000;
  const auto rows = SamplePixels(pairs, ClassScheme{}, n, 5);
  ASSERT_EQ(rows.size(), static_cast<std::size_t>(n));
  int red = 0;
  for (const auto& r : rows) red += r.r == 255;
  EXPECT_NEAR(static_cast<double>(red) / n, 0.5, 0.02);
}

}  // namespace
}  // namespace rpcp
