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

#ifndef RPCP_RASTER_H_
#define RPCP_RASTER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpcp {

// Error categories map one-to-one onto CLI exit codes (see cli.h).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Box {
  int x0 = 0;
  int y0 = 0;
  int width = 0;
  int height = 0;

  int x1() const { return x0 + width; }
  int y1() const { return y0 + height; }
  bool empty() const { return width <= 0 || height <= 0; }
  std::int64_t area() const {
    return static_cast<std::int64_t>(width) * height;
  }
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

// Row-major interleaved raster. Pixel (x, y) channel c lives at
// ((y * width) + x) * channels + c.
template <typename T>
class Raster {
 public:
  Raster() = default;
  Raster(int width, int height, int channels, T fill = T{})
      : width_(width), height_(height), channels_(channels) {
    if (width < 0 || height < 0 || channels < 1) {
      throw std::invalid_argument("invalid raster shape " +
                                  std::to_string(width) + "x" +
                                  std::to_string(height) + "x" +
                                  std::to_string(channels));
    }
    data_.assign(static_cast<std::size_t>(width) * height * channels, fill);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width_) * height_;
  }
  bool same_shape(int width, int height) const {
    return width_ == width && height_ == height;
  }
  bool contains(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  std::size_t index(int x, int y, int c = 0) const {
    return (static_cast<std::size_t>(y) * width_ + x) * channels_ + c;
  }
  T& at(int x, int y, int c = 0) { return data_[index(x, y, c)]; }
  const T& at(int x, int y, int c = 0) const { return data_[index(x, y, c)]; }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  int channels_ = 1;
  std::vector<T> data_;
};

// H x W x 3 intensities in [0, 1].
class ImageRgb : public Raster<double> {
 public:
  ImageRgb() : Raster<double>(0, 0, 3) {}
  ImageRgb(int width, int height, double fill = 0.0)
      : Raster<double>(width, height, 3, fill) {}
};

using ClassId = std::uint8_t;

// H x W class identifiers.
class LabelMap : public Raster<ClassId> {
 public:
  LabelMap() = default;
  LabelMap(int width, int height, ClassId fill = 0)
      : Raster<ClassId>(width, height, 1, fill) {}
};

// H x W {0, 1} raster.
class BinaryMask : public Raster<std::uint8_t> {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height, std::uint8_t fill = 0)
      : Raster<std::uint8_t>(width, height, 1, fill) {}

  bool test(int x, int y) const { return at(x, y) != 0; }
  void set(int x, int y, bool v = true) { at(x, y) = v ? 1 : 0; }
  std::int64_t count() const;
  // Tight box around the set pixels; empty box when nothing is set.
  Box bounds() const;
};

}  // namespace rpcp

#endif  // RPCP_RASTER_H_
