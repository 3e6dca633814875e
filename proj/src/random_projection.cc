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

#include "rpcp/random_projection.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rpcp {

RpFilter::RpFilter(int height, int width) : height_(height), width_(width) {
  if (height < 1 || width < 1 || height % 2 == 0 || width % 2 == 0) {
    throw std::invalid_argument("filter dimensions must be odd and >= 1");
  }
  weights_.assign(static_cast<std::size_t>(height) * width * kRgbChannels *
                      kRgbChannels,
                  0.0);
}

RpFilter RpFilter::Identity(int height, int width) {
  RpFilter f(height, width);
  for (int c = 0; c < kRgbChannels; ++c) f.at(height / 2, width / 2, c, c) = 1.0;
  return f;
}

RpFilter SampleFilter(RandomStream& rng, const RpConfig& cfg) {
  cfg.Validate();
  RpFilter f(cfg.filter_height, cfg.filter_width);
  for (int dy = 0; dy < f.height(); ++dy) {
    for (int dx = 0; dx < f.width(); ++dx) {
      for (int ci = 0; ci < kRgbChannels; ++ci) {
        for (int co = 0; co < kRgbChannels; ++co) {
          f.at(dy, dx, ci, co) = rng.Normal(cfg.sigma);
        }
      }
    }
  }
  return f;
}

int ReflectIndex(int i, int n) {
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - i;
}

RawRaster ConvolveRegion(const ImageRgb& image, const RpFilter& filter,
                         const Box& box) {
  if (box.x0 < 0 || box.y0 < 0 || box.x1() > image.width() ||
      box.y1() > image.height()) {
    throw std::out_of_range("ConvolveRegion: box outside image");
  }
  RawRaster out(box.width, box.height, kRgbChannels, 0.0);
  if (box.empty()) return out;
  const int ry = filter.height() / 2;
  const int rx = filter.width() / 2;

  // Reflected source coordinates for the box expanded by the filter radius.
  std::vector<int> xs(box.width + 2 * rx), ys(box.height + 2 * ry);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = ReflectIndex(box.x0 - rx + static_cast<int>(i), image.width());
  }
  for (std::size_t i = 0; i < ys.size(); ++i) {
    ys[i] = ReflectIndex(box.y0 - ry + static_cast<int>(i), image.height());
  }

  for (int y = 0; y < box.height; ++y) {
    for (int x = 0; x < box.width; ++x) {
      double acc[kRgbChannels] = {0.0, 0.0, 0.0};
      for (int dy = 0; dy < filter.height(); ++dy) {
        const int sy = ys[y + dy];
        for (int dx = 0; dx < filter.width(); ++dx) {
          const int sx = xs[x + dx];
          for (int ci = 0; ci < kRgbChannels; ++ci) {
            const double v = image.at(sx, sy, ci);
            for (int co = 0; co < kRgbChannels; ++co) {
              acc[co] += filter.at(dy, dx, ci, co) * v;
            }
          }
        }
      }
      for (int co = 0; co < kRgbChannels; ++co) out.at(x, y, co) = acc[co];
    }
  }
  return out;
}

RawRaster Convolve(const ImageRgb& image, const RpFilter& filter) {
  return ConvolveRegion(image, filter,
                        Box{0, 0, image.width(), image.height()});
}

RawRaster Restandardize(const RawRaster& raw, const ImageRgb& reference,
                        const BinaryMask& mask, const Box& box) {
  if (!raw.same_shape(box.width, box.height) || raw.channels() != kRgbChannels) {
    throw std::invalid_argument("Restandardize: raw raster does not match box");
  }
  RawRaster out(box.width, box.height, kRgbChannels, 0.0);
  for (int c = 0; c < kRgbChannels; ++c) {
    double n = 0, raw_sum = 0, ref_sum = 0;
    for (int y = 0; y < box.height; ++y) {
      for (int x = 0; x < box.width; ++x) {
        if (!mask.test(box.x0 + x, box.y0 + y)) continue;
        n += 1;
        raw_sum += raw.at(x, y, c);
        ref_sum += reference.at(box.x0 + x, box.y0 + y, c);
      }
    }
    if (n == 0) throw std::invalid_argument("Restandardize: empty mask");
    const double raw_mean = raw_sum / n;
    const double ref_mean = ref_sum / n;
    double raw_var = 0, ref_var = 0;
    for (int y = 0; y < box.height; ++y) {
      for (int x = 0; x < box.width; ++x) {
        if (!mask.test(box.x0 + x, box.y0 + y)) continue;
        const double a = raw.at(x, y, c) - raw_mean;
        const double b = reference.at(box.x0 + x, box.y0 + y, c) - ref_mean;
        raw_var += a * a;
        ref_var += b * b;
      }
    }
    const double raw_std = std::sqrt(raw_var / n);
    const double ref_std = std::sqrt(ref_var / n);
    const double gain = raw_std < 1e-6 ? 1.0 : ref_std / raw_std;
    for (int y = 0; y < box.height; ++y) {
      for (int x = 0; x < box.width; ++x) {
        const double v = (raw.at(x, y, c) - raw_mean) * gain + ref_mean;
        out.at(x, y, c) = std::clamp(v, 0.0, 1.0);
      }
    }
  }
  return out;
}

ImageRgb RefineWithFilter(const ImageRgb& image, const BinaryMask& full_mask,
                          const RpConfig& cfg, const RpFilter& filter) {
  if (!full_mask.same_shape(image.width(), image.height())) {
    throw std::invalid_argument("Refine: mask and image dimensions differ");
  }
  ImageRgb out = image;
  if (cfg.alpha == 0.0) return out;
  const Box box = full_mask.bounds();
  if (box.empty()) return out;

  RawRaster x = ConvolveRegion(image, filter, box);
  if (cfg.restandardize) x = Restandardize(x, image, full_mask, box);

  const double alpha = cfg.alpha;
  for (int y = 0; y < box.height; ++y) {
    for (int xx = 0; xx < box.width; ++xx) {
      if (!full_mask.test(box.x0 + xx, box.y0 + y)) continue;
      for (int c = 0; c < kRgbChannels; ++c) {
        const double base = image.at(box.x0 + xx, box.y0 + y, c);
        const double v = alpha * x.at(xx, y, c) + (1.0 - alpha) * base;
        out.at(box.x0 + xx, box.y0 + y, c) = std::clamp(v, 0.0, 1.0);
      }
    }
  }
  return out;
}

ImageRgb Refine(const ImageRgb& image, const BinaryMask& full_mask,
                const RpConfig& cfg, RandomStream& rng) {
  cfg.Validate();
  if (cfg.sigma == 0.0 || cfg.alpha == 0.0 || full_mask.count() == 0) {
    if (!full_mask.same_shape(image.width(), image.height())) {
      throw std::invalid_argument("Refine: mask and image dimensions differ");
    }
    return image;
  }
  return RefineWithFilter(image, full_mask, cfg, SampleFilter(rng, cfg));
}

}  // namespace rpcp
