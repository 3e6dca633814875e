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

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace rpcp {

using nlohmann::json;

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& other) {
  if (other.class_count() != class_count()) {
    throw std::invalid_argument("cannot merge confusion counts of different size");
  }
  for (int c = 0; c < class_count(); ++c) {
    tp[c] += other.tp[c];
    fp[c] += other.fp[c];
    fn[c] += other.fn[c];
  }
  evaluated_pixels += other.evaluated_pixels;
  return *this;
}

ConfusionCounts Confusion(const LabelMap& pred, const LabelMap& gt,
                          const ClassScheme& scheme) {
  if (!pred.same_shape(gt.width(), gt.height())) {
    std::ostringstream msg;
    msg << "dimension mismatch: prediction " << pred.width() << "x"
        << pred.height() << ", ground truth " << gt.width() << "x"
        << gt.height();
    throw DataError(msg.str());
  }
  const int n = scheme.class_count;
  std::vector<std::uint8_t> excluded(256, 0);
  for (ClassId e : scheme.excluded_classes) excluded[e] = 1;

  ConfusionCounts counts(n);
  const auto p = pred.data();
  const auto g = gt.data();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const int gc = g[i];
    if (excluded[gc]) continue;
    const int pc = p[i];
    ++counts.evaluated_pixels;
    if (pc == gc) {
      if (gc < n) ++counts.tp[gc];
      continue;
    }
    if (gc < n) ++counts.fn[gc];
    if (pc < n) ++counts.fp[pc];
  }
  return counts;
}

std::vector<ClassMetric> ClassMetrics(const ConfusionCounts& counts) {
  std::vector<ClassMetric> out(counts.class_count());
  for (int c = 0; c < counts.class_count(); ++c) {
    const std::int64_t tp = counts.tp[c], fp = counts.fp[c], fn = counts.fn[c];
    const std::int64_t uni = tp + fp + fn;
    if (uni == 0) continue;
    out[c].absent = false;
    out[c].iou = static_cast<double>(tp) / static_cast<double>(uni);
    out[c].acc = tp + fn > 0
                     ? static_cast<double>(tp) / static_cast<double>(tp + fn)
                     : 0.0;
  }
  return out;
}

MeanMetrics ComputeMeans(const std::vector<ClassMetric>& per_class,
                         const ClassScheme& scheme) {
  MeanMetrics m;
  double iou_sum = 0, acc_sum = 0;
  for (std::size_t c = 0; c < per_class.size(); ++c) {
    if (per_class[c].absent || scheme.is_excluded(static_cast<int>(c))) continue;
    iou_sum += per_class[c].iou;
    acc_sum += per_class[c].acc;
    ++m.classes_averaged;
  }
  if (m.classes_averaged == 0) {
    throw std::invalid_argument("no scored class present in prediction or ground truth");
  }
  m.miou = iou_sum / m.classes_averaged;
  m.macc = acc_sum / m.classes_averaged;
  return m;
}

double MeanOf(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("MeanOf: no values");
  double sum = 0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

MetricReport BuildReport(const ConfusionCounts& counts,
                         const ClassScheme& scheme) {
  MetricReport r{scheme, counts, ClassMetrics(counts), {}};
  r.means = ComputeMeans(r.per_class, scheme);
  return r;
}

std::string ReportToJson(const MetricReport& r) {
  json classes = json::array();
  for (int c = 0; c < r.counts.class_count(); ++c) {
    json entry = {{"id", c},
                  {"name", r.scheme.name(c)},
                  {"excluded", r.scheme.is_excluded(c)},
                  {"tp", r.counts.tp[c]},
                  {"fp", r.counts.fp[c]},
                  {"fn", r.counts.fn[c]},
                  {"absent", r.per_class[c].absent}};
    if (!r.per_class[c].absent) {
      entry["iou"] = r.per_class[c].iou;
      entry["acc"] = r.per_class[c].acc;
    }
    classes.push_back(entry);
  }
  return json{{"classes", classes},
              {"miou", r.means.miou},
              {"macc", r.means.macc},
              {"classes_averaged", r.means.classes_averaged},
              {"evaluated_pixels", r.counts.evaluated_pixels}}
      .dump(2);
}

std::string ReportToText(const MetricReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(4) << "id" << std::setw(18) << "class"
      << std::right << std::setw(10) << "IoU(%)" << std::setw(10) << "Acc(%)"
      << "\n";
  out << std::fixed << std::setprecision(2);
  for (int c = 0; c < r.counts.class_count(); ++c) {
    out << std::left << std::setw(4) << c << std::setw(18) << r.scheme.name(c)
        << std::right;
    if (r.scheme.is_excluded(c)) {
      out << std::setw(10) << "excluded" << std::setw(10) << "-";
    } else if (r.per_class[c].absent) {
      out << std::setw(10) << "absent" << std::setw(10) << "-";
    } else {
      out << std::setw(10) << 100.0 * r.per_class[c].iou << std::setw(10)
          << 100.0 * r.per_class[c].acc;
    }
    out << "\n";
  }
  out << std::left << std::setw(22) << "mean" << std::right << std::setw(10)
      << 100.0 * r.means.miou << std::setw(10) << 100.0 * r.means.macc << "\n";
  out << "evaluated pixels: " << r.counts.evaluated_pixels << "\n";
  return out.str();
}

PixelDistribution& PixelDistribution::operator+=(const LabelMap& label) {
  for (ClassId v : label.data()) {
    if (v >= counts.size()) {
      throw DataError("label value " + std::to_string(v) + " outside class scheme");
    }
    ++counts[v];
  }
  return *this;
}

PixelDistribution EmptyDistribution(const ClassScheme& scheme) {
  PixelDistribution d;
  d.counts.assign(scheme.class_count, 0);
  d.fractions.assign(scheme.class_count, 0.0);
  return d;
}

void FinalizeDistribution(PixelDistribution& d, const ClassScheme& scheme) {
  d.included_total = 0;
  for (int c = 0; c < scheme.class_count; ++c) {
    if (!scheme.is_excluded(c)) d.included_total += d.counts[c];
  }
  d.fractions.assign(scheme.class_count, 0.0);
  if (d.included_total == 0) return;
  for (int c = 0; c < scheme.class_count; ++c) {
    if (scheme.is_excluded(c)) continue;
    d.fractions[c] = static_cast<double>(d.counts[c]) /
                     static_cast<double>(d.included_total);
  }
}

PixelDistribution ComputeDistribution(const std::vector<LabelMap>& labels,
                                      const ClassScheme& scheme) {
  PixelDistribution d = EmptyDistribution(scheme);
  for (const auto& l : labels) d += l;
  FinalizeDistribution(d, scheme);
  return d;
}

std::string DistributionToJson(const PixelDistribution& d,
                               const ClassScheme& scheme) {
  json classes = json::array();
  for (int c = 0; c < scheme.class_count; ++c) {
    classes.push_back({{"id", c},
                       {"name", scheme.name(c)},
                       {"excluded", scheme.is_excluded(c)},
                       {"pixels", d.counts[c]},
                       {"fraction", d.fractions[c]}});
  }
  return json{{"classes", classes}, {"included_pixels", d.included_total}}.dump(2);
}

std::string DistributionToText(const PixelDistribution& d,
                               const ClassScheme& scheme) {
  std::ostringstream out;
  out << std::left << std::setw(4) << "id" << std::setw(18) << "class"
      << std::right << std::setw(14) << "pixels" << std::setw(12)
      << "fraction" << "\n";
  for (int c = 0; c < scheme.class_count; ++c) {
    out << std::left << std::setw(4) << c << std::setw(18) << scheme.name(c)
        << std::right << std::setw(14) << d.counts[c];
    if (scheme.is_excluded(c)) {
      out << std::setw(12) << "excluded";
    } else {
      out << std::setw(12) << std::fixed << std::setprecision(6)
          << d.fractions[c];
    }
    out << "\n";
  }
  return out.str();
}

std::vector<PixelSample> SamplePixels(const std::vector<PairDescriptor>& pairs,
                                      const ClassScheme& scheme,
                                      int n_per_class, std::uint64_t seed) {
  if (n_per_class < 1) throw std::invalid_argument("n_per_class must be >= 1");
  const int n_classes = scheme.class_count;
  std::vector<std::vector<PixelSample>> reservoirs(n_classes);
  std::vector<std::int64_t> seen(n_classes, 0);
  std::vector<RandomStream> streams;
  streams.reserve(n_classes);
  for (int c = 0; c < n_classes; ++c) {
    streams.emplace_back(SplitStream(seed, "pixel-sample", c));
  }

  for (const auto& desc : pairs) {
    const LoadedPair pair = LoadPair(desc, scheme);
    for (int y = 0; y < pair.label.height(); ++y) {
      for (int x = 0; x < pair.label.width(); ++x) {
        const int c = pair.label.at(x, y);
        PixelSample s{c,
                      IntensityToByte(pair.image.at(x, y, 0)),
                      IntensityToByte(pair.image.at(x, y, 1)),
                      IntensityToByte(pair.image.at(x, y, 2)),
                      desc.id,
                      x,
                      y};
        const std::int64_t t = seen[c]++;
        auto& res = reservoirs[c];
        if (t < n_per_class) {
          res.push_back(std::move(s));
        } else {
          const auto j = streams[c].UniformIndex(static_cast<std::uint64_t>(t) + 1);
          if (j < static_cast<std::uint64_t>(n_per_class)) res[j] = std::move(s);
        }
      }
    }
  }

  std::vector<PixelSample> rows;
  for (auto& res : reservoirs) {
    std::sort(res.begin(), res.end(), [](const PixelSample& a, const PixelSample& b) {
      return std::tie(a.source_id, a.y, a.x) < std::tie(b.source_id, b.y, b.x);
    });
    for (auto& s : res) rows.push_back(std::move(s));
  }
  return rows;
}

std::string PixelSamplesToCsv(const std::vector<PixelSample>& rows) {
  std::ostringstream out;
  out << kPixelCsvHeader << "\n";
  for (const auto& r : rows) {
    out << r.class_id << "," << int(r.r) << "," << int(r.g) << "," << int(r.b)
        << "," << r.source_id << "," << r.x << "," << r.y << "\n";
  }
  return out.str();
}

}  // namespace rpcp
