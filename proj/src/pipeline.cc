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

#include "rpcp/pipeline.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "rpcp/dataset_io.h"
#include "rpcp/parallel.h"
#include "rpcp/random_projection.h"

namespace rpcp {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string Hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json DistributionJson(const PixelDistribution& d, const ClassScheme& scheme) {
  return json::parse(DistributionToJson(d, scheme));
}

void WriteTextFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failure: " + path.string());
}

}  // namespace

std::uint64_t ImageStream(std::uint64_t seed, const std::string& id,
                          std::size_t index) {
  return SplitStream(seed, id, index);
}

void AugmentPair(LoadedPair& pair, const PatchBank& bank,
                 const AugConfig& config, ImageRecord& record) {
  const ClassScheme& scheme = config.class_scheme;
  record.before = EmptyDistribution(scheme);
  record.before += pair.label;
  FinalizeDistribution(record.before, scheme);

  RandomStream rng(record.stream);
  record.events = PasteK(rng, pair.image, pair.label, bank, config);
  for (auto& ev : record.events) {
    if (!ev.succeeded()) continue;
    RandomStream filter_rng(ev.params.rng_stream);
    pair.image = Refine(pair.image, ev.full_mask, config.rp, filter_rng);
    ev.full_mask = BinaryMask();
  }

  record.after = EmptyDistribution(scheme);
  record.after += pair.label;
  FinalizeDistribution(record.after, scheme);
}

AugmentResult RunAugment(const AugmentOptions& options) {
  const AugConfig& config = options.config;
  config.Validate();
  const ClassScheme& scheme = config.class_scheme;
  const auto pairs = ScanDataset(options.image_dir, options.mask_dir);
  if (pairs.empty()) {
    throw IoError("no image/mask pairs found in " + options.image_dir);
  }

  AugmentResult result;
  PatchBank bank = options.bank_dir ? LoadBank(*options.bank_dir)
                                    : BuildBank(pairs, config, options.jobs);
  if (bank.empty()) {
    result.warnings.push_back("patch bank is empty; no pastes will be made");
  }

  const fs::path out(options.out_dir);
  std::error_code ec;
  fs::create_directories(out / "images", ec);
  fs::create_directories(out / "masks", ec);
  if (ec) throw IoError("cannot create output tree " + out.string());

  result.records.resize(pairs.size());
  ParallelFor(pairs.size(), options.jobs, [&](std::size_t i) {
    const PairDescriptor& desc = pairs[i];
    ImageRecord& rec = result.records[i];
    rec.id = desc.id;
    rec.index = i;
    rec.stream = ImageStream(config.seed, desc.id, i);
    rec.source_image = desc.image_path;
    rec.source_mask = desc.mask_path;

    LoadedPair pair;
    try {
      pair = LoadPair(desc, scheme);
    } catch (const std::exception& e) {
      rec.error = e.what();
      return;
    }
    AugmentPair(pair, bank, config, rec);

    rec.output_image = "images/" + desc.id + "_aug.png";
    rec.output_mask = "masks/" + desc.id + "_aug.png";
    WriteImage((out / rec.output_image).string(), pair.image);
    WriteLabelMap((out / rec.output_mask).string(), pair.label);
  });

  AugmentSummary& s = result.summary;
  s.bank_size = bank.size();
  s.before = EmptyDistribution(scheme);
  s.after = EmptyDistribution(scheme);
  for (const auto& rec : result.records) {
    if (rec.error) {
      ++s.images_failed;
      continue;
    }
    ++s.images_processed;
    for (int c = 0; c < scheme.class_count; ++c) {
      s.before.counts[c] += rec.before.counts[c];
      s.after.counts[c] += rec.after.counts[c];
    }
    for (const auto& ev : rec.events) {
      if (ev.succeeded()) {
        ++s.pastes_succeeded;
        s.pasted_pixels += ev.mask_area;
      } else {
        ++s.pastes_failed;
      }
    }
  }
  FinalizeDistribution(s.before, scheme);
  FinalizeDistribution(s.after, scheme);

  std::string manifest;
  for (const auto& rec : result.records) manifest += ManifestLine(rec, bank) + "\n";
  WriteTextFile(out / "manifest.jsonl", manifest);
  WriteTextFile(out / "summary.json", SummaryJson(result, config) + "\n");
  return result;
}

std::string ManifestLine(const ImageRecord& rec, const PatchBank& bank) {
  json events = json::array();
  for (const auto& ev : rec.events) {
    json e = {{"outcome", OutcomeName(ev.outcome)},
              {"x", ev.params.x},
              {"y", ev.params.y},
              {"s", ev.params.scale},
              {"theta", ev.params.theta},
              {"patch_ref", ev.params.patch_ref},
              {"filter_stream", Hex64(ev.params.rng_stream)},
              {"mask_area", ev.mask_area},
              {"patch_size", {ev.patch_width, ev.patch_height}},
              {"attempts", ev.attempts},
              {"collapse_redraws", ev.redraws}};
    if (ev.params.patch_ref < bank.size()) {
      const Patch& p = bank[ev.params.patch_ref];
      e["patch_source"] = p.source_id;
      e["patch_box"] = {p.source_box.x0, p.source_box.y0, p.source_box.width,
                        p.source_box.height};
    }
    events.push_back(e);
  }
  json line = {{"id", rec.id},
               {"index", rec.index},
               {"stream", Hex64(rec.stream)},
               {"source_image", rec.source_image},
               {"source_mask", rec.source_mask},
               {"events", events}};
  if (rec.error) {
    line["error"] = *rec.error;
    line["outputs"] = json::array();
  } else {
    line["outputs"] = {rec.output_image, rec.output_mask};
    line["pixels_before"] = rec.before.counts;
    line["pixels_after"] = rec.after.counts;
  }
  return line.dump();
}

std::string SummaryJson(const AugmentResult& result, const AugConfig& config) {
  const AugmentSummary& s = result.summary;
  const ClassScheme& scheme = config.class_scheme;
  json doc = {{"tool_version", kToolVersion},
              {"config", json::parse(ConfigToJson(config))},
              {"images_processed", s.images_processed},
              {"images_failed", s.images_failed},
              {"bank_size", s.bank_size},
              {"pastes_succeeded", s.pastes_succeeded},
              {"pastes_failed", s.pastes_failed},
              {"pasted_pixels", s.pasted_pixels},
              {"distribution_before", DistributionJson(s.before, scheme)},
              {"distribution_after", DistributionJson(s.after, scheme)},
              {"warnings", result.warnings}};
  return doc.dump(2);
}

}  // namespace rpcp
