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

#ifndef RPCP_PNG_CODEC_H_
#define RPCP_PNG_CODEC_H_

#include <cstdint>
#include <string>
#include <vector>

namespace rpcp {

// Decoded 8-bit PNG. `channels` is 1 (gray) or 3 (RGB).
struct PngPixels {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> bytes;
};

// Reads an 8-bit PNG. Palette images expand to their palette indices when
// `keep_palette_indices` is set (index masks), otherwise to RGB. Alpha is
// dropped. 16-bit input is rejected. Throws IoError on failure.
PngPixels ReadPng(const std::string& path, bool keep_palette_indices);

// Writes an 8-bit gray or RGB PNG with fixed encoder settings so that equal
// pixels always produce equal files. Throws IoError on failure.
void WritePng(const std::string& path, const PngPixels& pixels);

}  // namespace rpcp

#endif  // RPCP_PNG_CODEC_H_
