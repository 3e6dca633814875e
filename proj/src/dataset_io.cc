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

#include "rpcp/dataset_io.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rpcp/png_codec.h"

namespace rpcp {

namespace fs = std::filesystem;

std::vector<std::string> ListPngStems(const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("not a directory: " + dir);
  std::vector<std::string> stems;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    const auto& p = entry.path();
    if (p.extension() != ".png") continue;
    stems.push_back(p.stem().string());
  }
  if (ec) throw IoError("cannot list " + dir + ": " + ec.message());
  std::sort(stems.begin(), stems.end());
  return stems;
}

std::vector<PairDescriptor> ScanDataset(const std::string& image_dir,
                                        const std::string& mask_dir) {
  const auto images = ListPngStems(image_dir);
  const auto masks = ListPngStems(mask_dir);

  std::vector<std::string> no_mask, no_image;
  std::set_difference(images.begin(), images.end(), masks.begin(), masks.end(),
                      std::back_inserter(no_mask));
  std::set_difference(masks.begin(), masks.end(), images.begin(), images.end(),
                      std::back_inserter(no_image));
  if (!no_mask.empty() || !no_image.empty()) {
    std::ostringstream msg;
    msg << "unpaired files:";
    for (const auto& s : no_mask) msg << " " << s << " (no mask)";
    for (const auto& s : no_image) msg << " " << s << " (no image)";
    throw DataError(msg.str());
  }

  std::vector<PairDescriptor> pairs;
  pairs.reserve(images.size());
  for (const auto& stem : images) {
    pairs.push_back({(fs::path(image_dir) / (stem + ".png")).string(),
                     (fs::path(mask_dir) / (stem + ".png")).string(), stem});
  }
  return pairs;
}

ImageRgb LoadImage(const std::string& path) {
  PngPixels px = ReadPng(path, /*keep_palette_indices=*/false);
  ImageRgb image(px.width, px.height);
  auto dst = image.data();
  if (px.channels == 3) {
    for (std::size_t i = 0; i < px.bytes.size(); ++i) {
      dst[i] = px.bytes[i] / 255.0;
    }
  } else {
    for (std::size_t i = 0; i < px.bytes.size(); ++i) {
      dst[3 * i] = dst[3 * i + 1] = dst[3 * i + 2] = px.bytes[i] / 255.0;
    }
  }
  return image;
}

LabelMap LoadLabelMap(const std::string& path, const ClassScheme& scheme) {
  PngPixels px = ReadPng(path, /*keep_palette_indices=*/true);
  if (px.channels != 1) {
    throw DataError("mask is not single-channel: " + path);
  }
  LabelMap label(px.width, px.height);
  auto dst = label.data();
  for (std::size_t i = 0; i < px.bytes.size(); ++i) {
    const int v = px.bytes[i];
    if (v >= scheme.class_count) {
      std::ostringstream msg;
      msg << "label value " << v << " outside class scheme (count "
          << scheme.class_count << ") at pixel index " << i << " (x="
          << i % px.width << ", y=" << i / px.width << ") in " << path;
      throw DataError(msg.str());
    }
    dst[i] = static_cast<ClassId>(v);
  }
  return label;
}

LoadedPair LoadPair(const PairDescriptor& desc, const ClassScheme& scheme) {
  LoadedPair pair{LoadImage(desc.image_path),
                  LoadLabelMap(desc.mask_path, scheme)};
  if (!pair.label.same_shape(pair.image.width(), pair.image.height())) {
    std::ostringstream msg;
    msg << "dimension mismatch for pair '" << desc.id << "': image "
        << pair.image.width() << "x" << pair.image.height() << ", mask "
        << pair.label.width() << "x" << pair.label.height();
    throw DataError(msg.str());
  }
  return pair;
}

std::uint8_t IntensityToByte(double v) {
  const double clipped = std::clamp(v, 0.0, 1.0);
  return static_cast<std::uint8_t>(std::lround(clipped * 255.0));
}

void WriteImage(const std::string& path, const ImageRgb& image) {
  PngPixels px{image.width(), image.height(), 3, {}};
  const auto src = image.data();
  px.bytes.resize(src.size());
  std::transform(src.begin(), src.end(), px.bytes.begin(), IntensityToByte);
  WritePng(path, px);
}

void WriteLabelMap(const std::string& path, const LabelMap& label) {
  PngPixels px{label.width(), label.height(), 1, {}};
  px.bytes.assign(label.data().begin(), label.data().end());
  WritePng(path, px);
}

std::pair<std::string, std::string> WritePair(const ImageRgb& image,
                                              const LabelMap& label,
                                              const OutputDirs& out_dirs,
                                              const std::string& id) {
  if (id.empty()) throw std::invalid_argument("WritePair: empty id");
  if (!label.same_shape(image.width(), image.height())) {
    throw std::invalid_argument("WritePair: image/label dimension mismatch");
  }
  std::error_code ec;
  fs::create_directories(out_dirs.image_dir, ec);
  fs::create_directories(out_dirs.mask_dir, ec);
  const auto image_path = (fs::path(out_dirs.image_dir) / (id + ".png")).string();
  const auto mask_path = (fs::path(out_dirs.mask_dir) / (id + ".png")).string();
  WriteImage(image_path, image);
  WriteLabelMap(mask_path, label);
  return {image_path, mask_path};
}

}  // namespace rpcp
