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

#ifndef RPCP_DATASET_IO_H_
#define RPCP_DATASET_IO_H_

#include <string>
#include <utility>
#include <vector>

#include "rpcp/config.h"
#include "rpcp/raster.h"

namespace rpcp {

struct PairDescriptor {
  std::string image_path;
  std::string mask_path;
  std::string id;  // shared filename stem

  friend bool operator==(const PairDescriptor&, const PairDescriptor&) = default;
};

// Pairs `<stem>.png` files in image_dir with the same stem in mask_dir.
// Output is sorted by id. Throws DataError naming every orphan stem when
// the two sides do not match, IoError when a directory is missing.
std::vector<PairDescriptor> ScanDataset(const std::string& image_dir,
                                        const std::string& mask_dir);

// Lists `<stem>.png` stems in a directory, sorted.
std::vector<std::string> ListPngStems(const std::string& dir);

struct LoadedPair {
  ImageRgb image;
  LabelMap label;
};

ImageRgb LoadImage(const std::string& path);

// Reads a single-channel index mask; every value must be a class of
// `scheme`.
LabelMap LoadLabelMap(const std::string& path, const ClassScheme& scheme);

// Loads and validates one pair: intensities are byte / 255, labels are
// checked against the scheme and dimensions must agree (DataError
// otherwise).
LoadedPair LoadPair(const PairDescriptor& desc, const ClassScheme& scheme);

struct OutputDirs {
  std::string image_dir;
  std::string mask_dir;
};

// Writes `<id>.png` into both directories. Intensities are stored as
// round(v * 255). Returns {image_path, mask_path}.
std::pair<std::string, std::string> WritePair(const ImageRgb& image,
                                              const LabelMap& label,
                                              const OutputDirs& out_dirs,
                                              const std::string& id);

void WriteImage(const std::string& path, const ImageRgb& image);
void WriteLabelMap(const std::string& path, const LabelMap& label);

std::uint8_t IntensityToByte(double v);

}  // namespace rpcp

#endif  // RPCP_DATASET_IO_H_
