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

#include "rpcp/geom_transform.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rpcp {
namespace {

// Exact values at right angles keep those rotations lossless.
void SinCosDegrees(double degrees, double& s, double& c) {
  double d = std::fmod(degrees, 360.0);
  if (d < 0) d += 360.0;
  if (d == 0.0) {
    s = 0.0, c = 1.0;
  } else if (d == 90.0) {
    s = 1.0, c = 0.0;
  } else if (d == 180.0) {
    s = 0.0, c = -1.0;
  } else if (d == 270.0) {
    s = -1.0, c = 0.0;
  } else {
    const double r = d * std::numbers::pi / 180.0;
    s = std::sin(r);
    c = std::cos(r);
  }
}

double SampleBilinear(const ImageRgb& img, double fx, double fy, int ch) {
  const int w = img.width();
  const int h = img.height();
  const double x0f = std::floor(fx);
  const double y0f = std::floor(fy);
  const double ax = fx - x0f;
  const double ay = fy - y0f;
  const int x0 = std::clamp(static_cast<int>(x0f), 0, w - 1);
  const int y0 = std::clamp(static_cast<int>(y0f), 0, h - 1);
  const int x1 = std::clamp(static_cast<int>(x0f) + 1, 0, w - 1);
  const int y1 = std::clamp(static_cast<int>(y0f) + 1, 0, h - 1);
  return (1 - ax) * (1 - ay) * img.at(x0, y0, ch) +
         ax * (1 - ay) * img.at(x1, y0, ch) +
         (1 - ax) * ay * img.at(x0, y1, ch) + ax * ay * img.at(x1, y1, ch);
}

}  // namespace

AugParams SampleParams(RandomStream& rng, const AugConfig& config,
                       std::size_t bank_size) {
  if (bank_size == 0) throw std::invalid_argument("SampleParams: empty bank");
  AugParams p;
  p.patch_ref = static_cast<std::size_t>(rng.UniformIndex(bank_size));
  p.scale = rng.Uniform(config.scale_min, config.scale_max);
  p.theta = rng.Uniform(config.rotation_min, config.rotation_max);
  return p;
}

Patch TransformPatch(const Patch& patch, double scale, double theta_degrees) {
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be > 0");
  const int w = patch.width();
  const int h = patch.height();
  if (w < 1 || h < 1) throw std::invalid_argument("empty patch");

  double sn, cs;
  SinCosDegrees(theta_degrees, sn, cs);

  // Forward map about the centre: q = s * R * (p - c).
  const double cx = w / 2.0;
  const double cy = h / 2.0;
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (const auto& [px, py] : {std::pair{0.0, 0.0}, std::pair{double(w), 0.0},
                              std::pair{0.0, double(h)},
                              std::pair{double(w), double(h)}}) {
    const double dx = px - cx, dy = py - cy;
    const double qx = scale * (dx * cs + dy * sn);
    const double qy = scale * (-dx * sn + dy * cs);
    if (first) {
      min_x = max_x = qx;
      min_y = max_y = qy;
      first = false;
    }
    min_x = std::min(min_x, qx);
    max_x = std::max(max_x, qx);
    min_y = std::min(min_y, qy);
    max_y = std::max(max_y, qy);
  }
  const int out_w = std::max(1, static_cast<int>(std::ceil(max_x - min_x - 1e-9)));
  const int out_h = std::max(1, static_cast<int>(std::ceil(max_y - min_y - 1e-9)));
  const double ocx = out_w / 2.0;
  const double ocy = out_h / 2.0;

  ImageRgb rgb(out_w, out_h);
  BinaryMask mask(out_w, out_h);
  const double inv = 1.0 / scale;
  for (int v = 0; v < out_h; ++v) {
    for (int u = 0; u < out_w; ++u) {
      const double qx = (u + 0.5 - ocx) * inv;
      const double qy = (v + 0.5 - ocy) * inv;
      const double sx = qx * cs - qy * sn + cx;
      const double sy = qx * sn + qy * cs + cy;
      const int ix = static_cast<int>(std::floor(sx));
      const int iy = static_cast<int>(std::floor(sy));
      if (patch.mask.contains(ix, iy) && patch.mask.test(ix, iy)) {
        mask.set(u, v);
      }
      for (int c = 0; c < 3; ++c) {
        rgb.at(u, v, c) = std::clamp(
            SampleBilinear(patch.rgb, sx - 0.5, sy - 0.5, c), 0.0, 1.0);
      }
    }
  }

  const Box b = mask.bounds();
  if (b.empty()) {
    throw MaskCollapsed("transform (s=" + std::to_string(scale) +
                        ", theta=" + std::to_string(theta_degrees) +
                        ") leaves no mask pixel");
  }
  Patch out;
  out.rgb = ImageRgb(b.width, b.height);
  out.mask = BinaryMask(b.width, b.height);
  out.class_id = patch.class_id;
  out.source_id = patch.source_id;
  out.source_box = patch.source_box;
  for (int y = 0; y < b.height; ++y) {
    for (int x = 0; x < b.width; ++x) {
      out.mask.at(x, y) = mask.at(b.x0 + x, b.y0 + y);
      for (int c = 0; c < 3; ++c) {
        out.rgb.at(x, y, c) = rgb.at(b.x0 + x, b.y0 + y, c);
      }
    }
  }
  return out;
}

}  // namespace rpcp
