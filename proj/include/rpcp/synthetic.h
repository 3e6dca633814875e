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

#ifndef RPCP_SYNTHETIC_H_
#define RPCP_SYNTHETIC_H_

#include <cstdint>
#include <string>

#include "rpcp/dataset_io.h"

namespace rpcp {

// Procedural leaf images labelled with the default ClassScheme: a textured
// leaf (healthy_leaf) on background, a few lesion ellipses and, on most
// images, small irregular insect-damage blobs.
struct SyntheticSpec {
  int count = 10;
  int size = 128;
  std::uint64_t seed = 42;
};

// Intensities are multiples of 1/255, so writing and re-reading is exact.
LoadedPair GenerateSyntheticPair(int index, const SyntheticSpec& spec);

std::string SyntheticId(int index);

// Writes <root>/images/<id>.png and <root>/masks/<id>.png.
void WriteSyntheticDataset(const std::string& root, const SyntheticSpec& spec);

}  // namespace rpcp

#endif  // RPCP_SYNTHETIC_H_
