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

#ifndef RPCP_METRICS_H_
#define RPCP_METRICS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rpcp/config.h"
#include "rpcp/dataset_io.h"
#include "rpcp/random.h"
#include "rpcp/raster.h"

namespace rpcp {

// Per-class pixel counts. Mergeable by addition.
struct ConfusionCounts {
  std::vector<std::int64_t> tp, fp, fn;
  std::int64_t evaluated_pixels = 0;

  explicit ConfusionCounts(int class_count = 0)
      : tp(class_count, 0), fp(class_count, 0), fn(class_count, 0) {}
  int class_count() const { return static_cast<int>(tp.size()); }
  ConfusionCounts& operator+=(const ConfusionCounts& other);
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

// Pixels whose ground truth is an excluded class are skipped. Predictions
// outside the scheme count as a miss for the ground-truth class. Throws
// DataError on dimension mismatch.
ConfusionCounts Confusion(const LabelMap& pred, const LabelMap& gt,
                          const ClassScheme& scheme);

struct ClassMetric {
  bool absent = true;  // tp + fp + fn == 0
  double iou = 0.0;
  double acc = 0.0;    // tp / (tp + fn); 0 when the class has no gt pixels
};

std::vector<ClassMetric> ClassMetrics(const ConfusionCounts& counts);

struct MeanMetrics {
  double miou = 0.0;
  double macc = 0.0;
  int classes_averaged = 0;
};

// Unweighted mean over non-absent, non-excluded classes. Throws
// std::invalid_argument when nothing is left to average.
MeanMetrics ComputeMeans(const std::vector<ClassMetric>& per_class,
                         const ClassScheme& scheme);

// Plain mean of already-computed per-class scores (any unit).
double MeanOf(const std::vector<double>& values);

struct MetricReport {
  ClassScheme scheme;
  ConfusionCounts counts;
  std::vector<ClassMetric> per_class;
  MeanMetrics means;
};

MetricReport BuildReport(const ConfusionCounts& counts,
                         const ClassScheme& scheme);
std::string ReportToJson(const MetricReport& report);
std::string ReportToText(const MetricReport& report);

struct PixelDistribution {
  std::vector<std::int64_t> counts;
  std::vector<double> fractions;  // 0 for excluded classes
  std::int64_t included_total = 0;

  PixelDistribution& operator+=(const LabelMap& label);
};

PixelDistribution EmptyDistribution(const ClassScheme& scheme);
PixelDistribution ComputeDistribution(const std::vector<LabelMap>& labels,
                                      const ClassScheme& scheme);
// Recomputes fractions from counts over non-excluded classes.
void FinalizeDistribution(PixelDistribution& dist, const ClassScheme& scheme);

std::string DistributionToJson(const PixelDistribution& dist,
                               const ClassScheme& scheme);
std::string DistributionToText(const PixelDistribution& dist,
                               const ClassScheme& scheme);

struct PixelSample {
  int class_id = 0;
  std::uint8_t r = 0, g = 0, b = 0;
  std::string source_id;
  int x = 0;
  int y = 0;
  friend bool operator==(const PixelSample&, const PixelSample&) = default;
};

// Uniform sampling without replacement of up to n_per_class pixels per
// class (reservoir sampling over pairs in order). Rows are sorted by class,
// then source, then raster position.
std::vector<PixelSample> SamplePixels(const std::vector<PairDescriptor>& pairs,
                                      const ClassScheme& scheme,
                                      int n_per_class, std::uint64_t seed);

inline constexpr const char* kPixelCsvHeader = "class_id,r,g,b,source_id,x,y";
std::string PixelSamplesToCsv(const std::vector<PixelSample>& rows);

}  // namespace rpcp

#endif  // RPCP_METRICS_H_
