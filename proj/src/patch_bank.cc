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

#include "rpcp/patch_bank.h"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"
#include "rpcp/parallel.h"

namespace rpcp {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<Region> ExtractComponents(const LabelMap& label, ClassId class_id,
                                      int connectivity, int min_area,
                                      const std::string& source_id) {
  if (connectivity != 4 && connectivity != 8) {
    throw std::invalid_argument("connectivity must be 4 or 8");
  }
  const int w = label.width();
  const int h = label.height();
  std::vector<std::uint8_t> seen(label.pixel_count(), 0);
  std::vector<Region> regions;
  std::vector<Point> stack;

  static constexpr int kDx[] = {1, -1, 0, 0, 1, 1, -1, -1};
  static constexpr int kDy[] = {0, 0, 1, -1, 1, -1, 1, -1};
  const int neighbours = connectivity;

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t idx = label.index(x, y);
      if (seen[idx] || label.at(x, y) != class_id) continue;

      Region region;
      region.source_id = source_id;
      region.class_id = class_id;
      seen[idx] = 1;
      stack.assign(1, {x, y});
      while (!stack.empty()) {
        const Point p = stack.back();
        stack.pop_back();
        region.pixels.push_back(p);
        for (int k = 0; k < neighbours; ++k) {
          const int nx = p.x + kDx[k];
          const int ny = p.y + kDy[k];
          if (!label.contains(nx, ny)) continue;
          const std::size_t n = label.index(nx, ny);
          if (seen[n] || label.at(nx, ny) != class_id) continue;
          seen[n] = 1;
          stack.push_back({nx, ny});
        }
      }
      if (region.pixel_count() < min_area) continue;

      std::sort(region.pixels.begin(), region.pixels.end());
      int x0 = w, y0 = h, x1 = -1, y1 = -1;
      for (const auto& p : region.pixels) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
      }
      region.bounding_box = {x0, y0, x1 - x0 + 1, y1 - y0 + 1};
      regions.push_back(std::move(region));
    }
  }
  return regions;
}

Patch CropPatch(const ImageRgb& image, const LabelMap& label,
                const Region& region) {
  const Box& b = region.bounding_box;
  if (b.empty() || b.x0 < 0 || b.y0 < 0 || b.x1() > image.width() ||
      b.y1() > image.height() || !label.same_shape(image.width(), image.height())) {
    throw std::out_of_range("region box outside image bounds");
  }
  Patch patch;
  patch.rgb = ImageRgb(b.width, b.height);
  patch.mask = BinaryMask(b.width, b.height);
  patch.class_id = region.class_id;
  patch.source_id = region.source_id;
  patch.source_box = b;
  for (int y = 0; y < b.height; ++y) {
    for (int x = 0; x < b.width; ++x) {
      for (int c = 0; c < 3; ++c) {
        patch.rgb.at(x, y, c) = image.at(b.x0 + x, b.y0 + y, c);
      }
    }
  }
  for (const auto& p : region.pixels) {
    if (p.x < b.x0 || p.y < b.y0 || p.x >= b.x1() || p.y >= b.y1()) {
      throw std::out_of_range("region pixel outside its bounding box");
    }
    patch.mask.set(p.x - b.x0, p.y - b.y0);
  }
  return patch;
}

PatchBank::PatchBank(std::vector<Patch> patches) : patches_(std::move(patches)) {
  std::stable_sort(patches_.begin(), patches_.end(),
                   [](const Patch& a, const Patch& b) {
                     return std::tie(a.source_id, a.source_box) <
                            std::tie(b.source_id, b.source_box);
                   });
  for (std::size_t i = 0; i < patches_.size(); ++i) {
    by_source_[patches_[i].source_id].push_back(i);
  }
}

std::vector<std::size_t> PatchBank::FromSource(
    const std::string& source_id) const {
  auto it = by_source_.find(source_id);
  return it == by_source_.end() ? std::vector<std::size_t>{} : it->second;
}

BankSummary PatchBank::Summarize(std::size_t pair_count) const {
  BankSummary s;
  s.pair_count = pair_count;
  s.patch_count = patches_.size();
  for (const auto& p : patches_) {
    const std::int64_t area = p.mask.count();
    s.total_area += area;
    s.area_histogram[static_cast<std::int64_t>(
        std::bit_floor(static_cast<std::uint64_t>(area)))]++;
  }
  if (patches_.empty()) {
    s.warnings.push_back("no source-class regions found; bank is empty");
  }
  return s;
}

PatchBank BuildBank(const std::vector<PairDescriptor>& pairs,
                    const AugConfig& config, int jobs) {
  const ClassScheme& scheme = config.class_scheme;
  std::vector<std::vector<Patch>> per_pair(pairs.size());
  ParallelFor(pairs.size(), jobs, [&](std::size_t i) {
    const auto& desc = pairs[i];
    LoadedPair pair;
    try {
      pair = LoadPair(desc, scheme);
    } catch (const DataError& e) {
      throw DataError("pair '" + desc.id + "': " + e.what());
    } catch (const IoError& e) {
      throw IoError("pair '" + desc.id + "': " + e.what());
    }
    for (const auto& region :
         ExtractComponents(pair.label, scheme.source_class, config.connectivity,
                           config.min_patch_area, desc.id)) {
      per_pair[i].push_back(CropPatch(pair.image, pair.label, region));
    }
  });
  std::vector<Patch> all;
  for (auto& v : per_pair) {
    for (auto& p : v) all.push_back(std::move(p));
  }
  return PatchBank(std::move(all));
}

void SaveBank(const PatchBank& bank, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(fs::path(dir) / "patches", ec);
  if (ec) throw IoError("cannot create " + dir + ": " + ec.message());
  json index = json::array();
  for (std::size_t i = 0; i < bank.size(); ++i) {
    const Patch& p = bank[i];
    char stem[32];
    std::snprintf(stem, sizeof(stem), "%06zu", i);
    const std::string rgb_rel = std::string("patches/") + stem + "_rgb.png";
    const std::string mask_rel = std::string("patches/") + stem + "_mask.png";
    WriteImage((fs::path(dir) / rgb_rel).string(), p.rgb);
    LabelMap mask_bytes(p.mask.width(), p.mask.height());
    for (std::size_t k = 0; k < p.mask.data().size(); ++k) {
      mask_bytes.data()[k] = p.mask.data()[k] ? 255 : 0;
    }
    WriteLabelMap((fs::path(dir) / mask_rel).string(), mask_bytes);
    index.push_back({{"source_id", p.source_id},
                     {"bounding_box",
                      {p.source_box.x0, p.source_box.y0, p.source_box.width,
                       p.source_box.height}},
                     {"class_id", p.class_id},
                     {"area", p.mask.count()},
                     {"rgb", rgb_rel},
                     {"mask", mask_rel}});
  }
  std::ofstream out(fs::path(dir) / "index.json", std::ios::binary);
  if (!out) throw IoError("cannot write " + dir + "/index.json");
  out << json{{"patches", index}}.dump(2) << "\n";
  if (!out) throw IoError("write failure: " + dir + "/index.json");
}

PatchBank LoadBank(const std::string& dir) {
  const auto index_path = fs::path(dir) / "index.json";
  std::ifstream in(index_path, std::ios::binary);
  if (!in) throw IoError("cannot open bank index " + index_path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw IoError("malformed bank index " + index_path.string() + ": " +
                  e.what());
  }
  ClassScheme binary;
  binary.class_count = 256;
  binary.names.clear();
  binary.excluded_classes.clear();
  std::vector<Patch> patches;
  try {
    for (const auto& rec : doc.at("patches")) {
      Patch p;
      p.source_id = rec.at("source_id").get<std::string>();
      p.class_id = rec.at("class_id").get<ClassId>();
      const auto& bb = rec.at("bounding_box");
      p.source_box = {bb.at(0).get<int>(), bb.at(1).get<int>(),
                      bb.at(2).get<int>(), bb.at(3).get<int>()};
      p.rgb = LoadImage((fs::path(dir) / rec.at("rgb").get<std::string>()).string());
      const LabelMap m = LoadLabelMap(
          (fs::path(dir) / rec.at("mask").get<std::string>()).string(), binary);
      if (!m.same_shape(p.rgb.width(), p.rgb.height())) {
        throw DataError("bank patch rgb/mask size mismatch for " + p.source_id);
      }
      p.mask = BinaryMask(m.width(), m.height());
      for (std::size_t k = 0; k < m.data().size(); ++k) {
        p.mask.data()[k] = m.data()[k] != 0;
      }
      if (p.mask.count() == 0) {
        throw DataError("bank patch with empty mask from " + p.source_id);
      }
      patches.push_back(std::move(p));
    }
  } catch (const json::exception& e) {
    throw IoError("malformed bank index " + index_path.string() + ": " +
                  e.what());
  }
  return PatchBank(std::move(patches));
}

std::string SummaryToJson(const BankSummary& s) {
  json hist = json::object();
  for (const auto& [lo, n] : s.area_histogram) hist[std::to_string(lo)] = n;
  return json{{"pairs", s.pair_count},
              {"patches", s.patch_count},
              {"total_area", s.total_area},
              {"area_histogram", hist},
              {"warnings", s.warnings}}
      .dump(2);
}

}  // namespace rpcp
