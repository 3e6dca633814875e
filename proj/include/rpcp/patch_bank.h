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

#ifndef RPCP_PATCH_BANK_H_
#define RPCP_PATCH_BANK_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rpcp/config.h"
#include "rpcp/dataset_io.h"
#include "rpcp/raster.h"

namespace rpcp {

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

// A maximal connected set of pixels of one class.
struct Region {
  std::string source_id;
  ClassId class_id = 0;
  Box bounding_box;
  std::vector<Point> pixels;  // raster order

  std::int64_t pixel_count() const {
    return static_cast<std::int64_t>(pixels.size());
  }
};

// Rectangular RGB crop plus a tight binary mask. `source_box` locates the
// crop in its source image.
struct Patch {
  ImageRgb rgb;
  BinaryMask mask;
  ClassId class_id = 0;
  std::string source_id;
  Box source_box;

  int width() const { return rgb.width(); }
  int height() const { return rgb.height(); }
};

// Components of `class_id` with at least `min_area` pixels, in order of
// their first pixel in raster scan. `connectivity` is 4 or 8.
std::vector<Region> ExtractComponents(const LabelMap& label, ClassId class_id,
                                      int connectivity, int min_area,
                                      const std::string& source_id = "");

// Throws std::out_of_range when the region's box leaves the image.
Patch CropPatch(const ImageRgb& image, const LabelMap& label,
                const Region& region);

struct BankSummary {
  std::size_t pair_count = 0;
  std::size_t patch_count = 0;
  std::int64_t total_area = 0;
  // Area histogram keyed by power-of-two lower bound (16 -> [16, 32)).
  std::map<std::int64_t, std::size_t> area_histogram;
  std::vector<std::string> warnings;
};

class PatchBank {
 public:
  PatchBank() = default;
  // Sorts into canonical order.
  explicit PatchBank(std::vector<Patch> patches);

  const std::vector<Patch>& patches() const { return patches_; }
  std::size_t size() const { return patches_.size(); }
  bool empty() const { return patches_.empty(); }
  const Patch& operator[](std::size_t i) const { return patches_[i]; }

  // Indices of patches cut from `source_id`.
  std::vector<std::size_t> FromSource(const std::string& source_id) const;

  BankSummary Summarize(std::size_t pair_count) const;

 private:
  std::vector<Patch> patches_;
  std::map<std::string, std::vector<std::size_t>> by_source_;
};

// Loads every pair (concurrently when jobs > 1) and collects all qualifying
// source-class regions. The result does not depend on `jobs`. Load errors
// propagate as DataError/IoError prefixed with the pair id.
PatchBank BuildBank(const std::vector<PairDescriptor>& pairs,
                    const AugConfig& config, int jobs = 1);

// Bank archive: <dir>/index.json plus <dir>/patches/<n>_rgb.png and
// <dir>/patches/<n>_mask.png.
void SaveBank(const PatchBank& bank, const std::string& dir);
PatchBank LoadBank(const std::string& dir);

std::string SummaryToJson(const BankSummary& summary);

}  // namespace rpcp

#endif  // RPCP_PATCH_BANK_H_
