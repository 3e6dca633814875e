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

#ifndef RPCP_GEOM_TRANSFORM_H_
#define RPCP_GEOM_TRANSFORM_H_

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "rpcp/config.h"
#include "rpcp/patch_bank.h"
#include "rpcp/random.h"

namespace rpcp {

// One pasting event: top-left (x, y) of the transformed patch in the target,
// scale s, rotation theta in degrees, the bank index of the patch and the
// stream that drives the event's projection filter.
struct AugParams {
  int x = -1;
  int y = -1;
  double scale = 1.0;
  double theta = 0.0;
  std::size_t patch_ref = 0;
  std::uint64_t rng_stream = 0;

  friend bool operator==(const AugParams&, const AugParams&) = default;
};

// Draws patch_ref, then s, then theta. x and y stay unset (-1).
AugParams SampleParams(RandomStream& rng, const AugConfig& config,
                       std::size_t bank_size);

// Thrown when a transform leaves no mask pixel; callers redraw parameters.
class MaskCollapsed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rotates the patch about its centre by `theta_degrees` (counter-clockwise
// as displayed, y pointing down), scales by `scale`, then crops to the tight
// box of the resulting mask. RGB is resampled bilinearly with edge clamping,
// the mask with nearest neighbour. Multiples of 90 degrees at scale 1 are
// exact pixel permutations.
Patch TransformPatch(const Patch& patch, double scale, double theta_degrees);

}  // namespace rpcp

#endif  // RPCP_GEOM_TRANSFORM_H_
