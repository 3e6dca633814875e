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

#ifndef RPCP_CONFIG_H_
#define RPCP_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rpcp/raster.h"

namespace rpcp {

// Class identifiers used by a dataset. The default models a leaf dataset
// with a background label that metrics ignore:
//   0 background (excluded), 1 healthy leaf, 2 disease lesion,
//   3 insect damage.
struct ClassScheme {
  int class_count = 4;
  std::vector<std::string> names = {"background", "healthy_leaf", "lesion",
                                    "insect_damage"};
  ClassId source_class = 3;
  ClassId valid_class = 1;
  std::vector<ClassId> excluded_classes = {0};

  bool is_excluded(int id) const;
  std::string name(int id) const;
  // Throws ConfigError when an invariant does not hold.
  void Validate() const;
};

// Random-projection refinement settings.
struct RpConfig {
  int filter_height = 3;
  int filter_width = 3;
  double sigma = 0.20;
  double alpha = 0.8;
  bool restandardize = true;

  void Validate() const;
};

struct AugConfig {
  std::uint64_t seed = 0;
  int patches_per_image = 1;
  double scale_min = 0.8;
  double scale_max = 1.2;
  double rotation_min = 0.0;
  double rotation_max = 360.0;
  RpConfig rp;
  int min_patch_area = 16;
  int max_attempts = 100;
  int margin = 0;
  int connectivity = 8;
  ClassScheme class_scheme;

  void Validate() const;
};

// Parses a JSON config document. Missing keys take the defaults above;
// unknown keys, wrong types and invariant violations raise ConfigError with
// the offending key in the message. An empty or whitespace-only document is
// the all-defaults config.
AugConfig ParseConfig(std::string_view text);

AugConfig LoadConfigFile(const std::string& path);

// JSON snapshot using the same keys ParseConfig accepts, so that
// ParseConfig(ConfigToJson(c)) == c.
std::string ConfigToJson(const AugConfig& config);

}  // namespace rpcp

#endif  // RPCP_CONFIG_H_
