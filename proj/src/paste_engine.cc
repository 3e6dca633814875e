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

#include "rpcp/paste_engine.h"

#include <algorithm>
#include <stdexcept>

namespace rpcp {

PlacementConstraints PlacementConstraints::FromConfig(const AugConfig& config) {
  return {config.class_scheme.valid_class, config.margin, config.max_attempts};
}

bool IsValidPlacement(const LabelMap& target, const Patch& patch, int x, int y,
                      const PlacementConstraints& c) {
  const int pw = patch.width();
  const int ph = patch.height();
  if (x < 0 || y < 0 || x + pw > target.width() || y + ph > target.height()) {
    return false;
  }
  const int m = std::max(c.margin, 0);
  for (int j = 0; j < ph; ++j) {
    for (int i = 0; i < pw; ++i) {
      if (!patch.mask.test(i, j)) continue;
      if (m == 0) {
        if (target.at(x + i, y + j) != c.valid_class) return false;
        continue;
      }
      const int ty0 = std::max(0, y + j - m);
      const int ty1 = std::min(target.height() - 1, y + j + m);
      const int tx0 = std::max(0, x + i - m);
      const int tx1 = std::min(target.width() - 1, x + i + m);
      for (int ty = ty0; ty <= ty1; ++ty) {
        for (int tx = tx0; tx <= tx1; ++tx) {
          if (target.at(tx, ty) != c.valid_class) return false;
        }
      }
    }
  }
  return true;
}

PlacementResult FindPlacement(RandomStream& rng, const LabelMap& target,
                              const Patch& patch,
                              const PlacementConstraints& c) {
  PlacementResult result;
  const int max_x = target.width() - patch.width();
  const int max_y = target.height() - patch.height();
  if (max_x < 0 || max_y < 0) return result;
  for (int a = 0; a < c.max_attempts; ++a) {
    const int x = static_cast<int>(rng.UniformInt(0, max_x));
    const int y = static_cast<int>(rng.UniformInt(0, max_y));
    result.attempts = a + 1;
    if (IsValidPlacement(target, patch, x, y, c)) {
      result.position = Point{x, y};
      return result;
    }
  }
  return result;
}

BinaryMask Composite(ImageRgb& image, LabelMap& label, const Patch& patch,
                     int x, int y) {
  if (!label.same_shape(image.width(), image.height())) {
    throw std::invalid_argument("Composite: image/label dimension mismatch");
  }
  if (x < 0 || y < 0 || x + patch.width() > image.width() ||
      y + patch.height() > image.height()) {
    throw std::invalid_argument("Composite: patch box outside the image");
  }
  BinaryMask placed(image.width(), image.height());
  for (int j = 0; j < patch.height(); ++j) {
    for (int i = 0; i < patch.width(); ++i) {
      if (!patch.mask.test(i, j)) continue;
      for (int c = 0; c < 3; ++c) {
        image.at(x + i, y + j, c) = patch.rgb.at(i, j, c);
      }
      label.at(x + i, y + j) = patch.class_id;
      placed.set(x + i, y + j);
    }
  }
  return placed;
}

const char* OutcomeName(PasteOutcome outcome) {
  switch (outcome) {
    case PasteOutcome::kPasted:
      return "pasted";
    case PasteOutcome::kNoPlacement:
      return "no_placement";
    case PasteOutcome::kCollapsed:
      return "collapsed";
  }
  return "unknown";
}

std::vector<PasteEvent> PasteK(RandomStream& rng, ImageRgb& image,
                               LabelMap& label, const PatchBank& bank,
                               const AugConfig& config) {
  std::vector<PasteEvent> events;
  if (bank.empty()) return events;
  const auto constraints = PlacementConstraints::FromConfig(config);

  for (int round = 0; round < config.patches_per_image; ++round) {
    PasteEvent ev;
    std::optional<Patch> transformed;
    for (int draw = 0; draw <= kMaxCollapseRedraws; ++draw) {
      ev.params = SampleParams(rng, config, bank.size());
      try {
        transformed = TransformPatch(bank[ev.params.patch_ref],
                                     ev.params.scale, ev.params.theta);
        break;
      } catch (const MaskCollapsed&) {
        ev.redraws = draw + 1;
      }
    }
    ev.params.rng_stream =
        SplitStream(rng.stream_id(), static_cast<std::uint64_t>(round));
    if (!transformed) {
      ev.outcome = PasteOutcome::kCollapsed;
      events.push_back(std::move(ev));
      continue;
    }
    ev.patch_width = transformed->width();
    ev.patch_height = transformed->height();
    ev.mask_area = transformed->mask.count();

    const auto placement = FindPlacement(rng, label, *transformed, constraints);
    ev.attempts = placement.attempts;
    if (!placement.position) {
      ev.outcome = PasteOutcome::kNoPlacement;
      events.push_back(std::move(ev));
      continue;
    }
    ev.params.x = placement.position->x;
    ev.params.y = placement.position->y;
    ev.full_mask = Composite(image, label, *transformed, ev.params.x, ev.params.y);
    ev.outcome = PasteOutcome::kPasted;
    events.push_back(std::move(ev));
  }
  return events;
}

}  // namespace rpcp
