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

#ifndef RPCP_PASTE_ENGINE_H_
#define RPCP_PASTE_ENGINE_H_

#include <optional>
#include <string>
#include <vector>

#include "rpcp/config.h"
#include "rpcp/geom_transform.h"
#include "rpcp/patch_bank.h"
#include "rpcp/random.h"
#include "rpcp/raster.h"

namespace rpcp {

struct PlacementConstraints {
  ClassId valid_class = 1;
  int margin = 0;
  int max_attempts = 100;

  static PlacementConstraints FromConfig(const AugConfig& config);
};

// True iff the patch box at (x, y) lies inside the target, and every target
// pixel within Chebyshev distance `margin` of a set mask pixel (and inside
// the target) carries valid_class.
bool IsValidPlacement(const LabelMap& target, const Patch& patch, int x, int y,
                      const PlacementConstraints& c);

struct PlacementResult {
  std::optional<Point> position;
  int attempts = 0;
};

// Rejection sampling over uniformly drawn in-bounds top-left positions.
// Makes at most max_attempts draws; zero draws when the patch does not fit.
PlacementResult FindPlacement(RandomStream& rng, const LabelMap& target,
                              const Patch& patch,
                              const PlacementConstraints& c);

// Copies the patch into the image and label map under its mask:
//   I' = M * P + (1 - M) * I,  Y' = M * class + (1 - M) * Y
// Returns the placed H x W mask. The caller must have checked the
// placement; out-of-bounds boxes raise std::invalid_argument.
BinaryMask Composite(ImageRgb& image, LabelMap& label, const Patch& patch,
                     int x, int y);

enum class PasteOutcome { kPasted, kNoPlacement, kCollapsed };

const char* OutcomeName(PasteOutcome outcome);

struct PasteEvent {
  AugParams params;
  PasteOutcome outcome = PasteOutcome::kNoPlacement;
  int attempts = 0;       // placement draws used
  int redraws = 0;        // parameter draws discarded for mask collapse
  std::int64_t mask_area = 0;
  int patch_width = 0;
  int patch_height = 0;
  BinaryMask full_mask;   // empty unless pasted

  bool succeeded() const { return outcome == PasteOutcome::kPasted; }
};

// Parameter redraws allowed per round when a transform collapses the mask.
inline constexpr int kMaxCollapseRedraws = 8;

// Performs config.patches_per_image sample -> transform -> place ->
// composite rounds in place on (image, label). Later rounds see earlier
// pastes in the label map. Each event's rng_stream is derived from the
// stream id of `rng` and the round index. Failed rounds are recorded, not
// thrown. An empty bank yields no events.
std::vector<PasteEvent> PasteK(RandomStream& rng, ImageRgb& image,
                               LabelMap& label, const PatchBank& bank,
                               const AugConfig& config);

}  // namespace rpcp

#endif  // RPCP_PASTE_ENGINE_H_
