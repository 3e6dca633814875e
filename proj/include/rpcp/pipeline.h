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

#ifndef RPCP_PIPELINE_H_
#define RPCP_PIPELINE_H_

#include <optional>
#include <string>
#include <vector>

#include "rpcp/config.h"
#include "rpcp/metrics.h"
#include "rpcp/paste_engine.h"
#include "rpcp/patch_bank.h"

namespace rpcp {

inline constexpr const char* kToolVersion = "1.0.0";

struct AugmentOptions {
  AugConfig config;
  std::string image_dir;
  std::string mask_dir;
  std::string out_dir;
  std::optional<std::string> bank_dir;  // load instead of extracting
  int jobs = 1;
};

// One augmented image. Events keep their full masks only while the image is
// in flight; the stored record drops them.
struct ImageRecord {
  std::string id;
  std::size_t index = 0;
  std::uint64_t stream = 0;
  std::string source_image;
  std::string source_mask;
  std::string output_image;  // relative to out_dir
  std::string output_mask;
  std::vector<PasteEvent> events;
  std::optional<std::string> error;
  PixelDistribution before;
  PixelDistribution after;
};

struct AugmentSummary {
  std::size_t images_processed = 0;
  std::size_t images_failed = 0;
  std::size_t pastes_succeeded = 0;
  std::size_t pastes_failed = 0;
  std::int64_t pasted_pixels = 0;
  std::size_t bank_size = 0;
  PixelDistribution before;
  PixelDistribution after;
};

struct AugmentResult {
  std::vector<ImageRecord> records;
  AugmentSummary summary;
  std::vector<std::string> warnings;
};

// Per-image stream: split(seed, id) salted with the image's sorted index.
std::uint64_t ImageStream(std::uint64_t seed, const std::string& id,
                          std::size_t index);

// Pastes, refines and writes one already-loaded pair; the building block
// of RunAugment. `record.id/index/stream` must be set.
void AugmentPair(LoadedPair& pair, const PatchBank& bank,
                 const AugConfig& config, ImageRecord& record);

// Full augment run: writes <out>/images/<id>_aug.png,
// <out>/masks/<id>_aug.png, <out>/manifest.jsonl (one line per input pair,
// in id order) and <out>/summary.json. Output bytes depend only on the
// config, the input tree and the tool version.
AugmentResult RunAugment(const AugmentOptions& options);

std::string ManifestLine(const ImageRecord& record, const PatchBank& bank);
std::string SummaryJson(const AugmentResult& result, const AugConfig& config);

}  // namespace rpcp

#endif  // RPCP_PIPELINE_H_
