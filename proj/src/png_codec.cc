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

#include "rpcp/png_codec.h"

#include <png.h>
#include <zlib.h>

#include <cstdio>
#include <memory>

#include "rpcp/raster.h"

namespace rpcp {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void OnPngError(png_structp png, png_const_charp msg) {
  auto* err = static_cast<std::string*>(png_get_error_ptr(png));
  if (err) *err = msg;
  png_longjmp(png, 1);
}

void OnPngWarning(png_structp, png_const_charp) {}

}  // namespace

// libpng reports errors through longjmp; only trivially destructible locals
// may live between setjmp and the libpng calls below.
PngPixels ReadPng(const std::string& path, bool keep_palette_indices) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) throw IoError("cannot open " + path);

  png_byte sig[8];
  if (std::fread(sig, 1, 8, file.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
    throw IoError("not a PNG file: " + path);
  }

  std::string error;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error,
                                           OnPngError, OnPngWarning);
  if (!png) throw IoError("libpng init failed for " + path);
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("libpng init failed for " + path);
  }

  PngPixels out;
  std::vector<png_bytep> rows;
  volatile bool unsupported_depth = false;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("decode failure in " + path + ": " + error);
  }

  png_init_io(png, file.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  const int depth = png_get_bit_depth(png, info);
  const int color = png_get_color_type(png, info);
  if (depth == 16) {
    unsupported_depth = true;
  } else {
    if (depth < 8) {
      if (color == PNG_COLOR_TYPE_PALETTE && keep_palette_indices) {
        png_set_packing(png);
      } else if (color == PNG_COLOR_TYPE_GRAY) {
        png_set_expand_gray_1_2_4_to_8(png);
      }
    }
    if (color == PNG_COLOR_TYPE_PALETTE && !keep_palette_indices) {
      png_set_palette_to_rgb(png);
    }
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS) &&
        !(color == PNG_COLOR_TYPE_PALETTE && keep_palette_indices)) {
      // Transparency chunks are ignored: pixels are read as opaque.
      png_set_tRNS_to_alpha(png);
      png_set_strip_alpha(png);
    }
    png_read_update_info(png, info);

    out.width = static_cast<int>(png_get_image_width(png, info));
    out.height = static_cast<int>(png_get_image_height(png, info));
    out.channels = png_get_channels(png, info);
    out.bytes.resize(static_cast<std::size_t>(out.width) * out.height *
                     out.channels);
    rows.resize(out.height);
    for (int y = 0; y < out.height; ++y) {
      rows[y] = out.bytes.data() +
                static_cast<std::size_t>(y) * out.width * out.channels;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
  }
  png_destroy_read_struct(&png, &info, nullptr);

  if (unsupported_depth) throw IoError("16-bit PNG not supported: " + path);
  if (out.channels != 1 && out.channels != 3) {
    throw IoError("unsupported channel layout in " + path);
  }
  return out;
}

void WritePng(const std::string& path, const PngPixels& pixels) {
  if (pixels.channels != 1 && pixels.channels != 3) {
    throw IoError("cannot write " + std::to_string(pixels.channels) +
                  "-channel PNG: " + path);
  }
  if (pixels.bytes.size() != static_cast<std::size_t>(pixels.width) *
                                 pixels.height * pixels.channels) {
    throw IoError("pixel buffer size mismatch for " + path);
  }
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) throw IoError("cannot write " + path);

  std::string error;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &error,
                                            OnPngError, OnPngWarning);
  if (!png) throw IoError("libpng init failed for " + path);
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng init failed for " + path);
  }
  std::vector<png_bytep> rows(pixels.height);
  for (int y = 0; y < pixels.height; ++y) {
    rows[y] = const_cast<png_bytep>(pixels.bytes.data()) +
              static_cast<std::size_t>(y) * pixels.width * pixels.channels;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("encode failure in " + path + ": " + error);
  }
  png_init_io(png, file.get());
  png_set_compression_level(png, Z_BEST_SPEED);
  png_set_filter(png, PNG_FILTER_TYPE_BASE, PNG_FILTER_SUB);
  png_set_IHDR(png, info, pixels.width, pixels.height, 8,
               pixels.channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);

  if (std::fflush(file.get()) != 0) throw IoError("write failure: " + path);
}

}  // namespace rpcp
