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

#ifndef RPCP_RANDOM_PROJECTION_H_
#define RPCP_RANDOM_PROJECTION_H_

#include <vector>

#include "rpcp/config.h"
#include "rpcp/random.h"
#include "rpcp/raster.h"

namespace rpcp {

inline constexpr int kRgbChannels = 3;

// h x w x C_in x C_out convolution weights, C_in = C_out = 3.
class RpFilter {
 public:
  RpFilter(int height, int width);

  int height() const { return height_; }
  int width() const { return width_; }
  std::size_t size() const { return weights_.size(); }

  double& at(int dy, int dx, int c_in, int c_out) {
    return weights_[Index(dy, dx, c_in, c_out)];
  }
  double at(int dy, int dx, int c_in, int c_out) const {
    return weights_[Index(dy, dx, c_in, c_out)];
  }
  std::span<const double> weights() const { return weights_; }

  // Centre tap maps each channel onto itself.
  static RpFilter Identity(int height, int width);

 private:
  std::size_t Index(int dy, int dx, int c_in, int c_out) const {
    return ((static_cast<std::size_t>(dy) * width_ + dx) * kRgbChannels + c_in) *
               kRgbChannels +
           c_out;
  }

  int height_;
  int width_;
  std::vector<double> weights_;
};

// Unbounded three-channel raster, the raw result of a convolution.
using RawRaster = Raster<double>;

// Every weight i.i.d. Normal(0, sigma^2), drawn in storage order.
RpFilter SampleFilter(RandomStream& rng, const RpConfig& cfg);

// Reflect-101 border index (..., 2, 1 | 0, 1, ..., n-1 | n-2, ...).
int ReflectIndex(int i, int n);

// out(y, x, co) = sum_{dy, dx, ci} W(dy, dx, ci, co) *
//                 in(y + dy - h/2, x + dx - w/2, ci)
// over the whole image, reflect-101 padding at the borders.
RawRaster Convolve(const ImageRgb& image, const RpFilter& filter);

// Same as Convolve restricted to `box`; the result is box-sized and equals
// the corresponding window of the whole-image convolution.
RawRaster ConvolveRegion(const ImageRgb& image, const RpFilter& filter,
                         const Box& box);

// Per channel, affinely maps `raw` (box-sized, positioned at `box` in the
// reference) so its mean and population std over mask pixels match those
// of `reference`. When raw's masked std is below 1e-6 only the mean is
// shifted. Output is clipped to [0, 1]; pixels outside the mask are mapped
// by the same affine.
RawRaster Restandardize(const RawRaster& raw, const ImageRgb& reference,
                        const BinaryMask& mask, const Box& box);

// Random-projection refinement of one pasted region:
//   out = alpha * X + (1 - alpha) * image   inside the mask,
//   out = image                              outside,
// where X is the filtered image (restandardized when cfg.restandardize)
// and the result is clipped to [0, 1]. sigma == 0, alpha == 0 or an empty
// mask return the input unchanged without consuming randomness.
ImageRgb Refine(const ImageRgb& image, const BinaryMask& full_mask,
                const RpConfig& cfg, RandomStream& rng);

// Refine with an explicit filter; used by Refine after sampling.
ImageRgb RefineWithFilter(const ImageRgb& image, const BinaryMask& full_mask,
                          const RpConfig& cfg, const RpFilter& filter);

}  // namespace rpcp

#endif  // RPCP_RANDOM_PROJECTION_H_
