#include "oodseg/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace oodseg {

void validate_sample(const ImageSample& s, int num_classes) {
  if (s.rgb.ndim() != 3 || s.rgb.dim(0) != 3) {
    throw std::runtime_error("sample rgb must have shape [3,H,W]");
  }
  const int h = s.rgb.dim(1);
  const int w = s.rgb.dim(2);
  if (s.seg.h != h || s.seg.w != w || s.ood.h != h || s.ood.w != w) {
    throw std::runtime_error("sample label dimensions do not match rgb (" +
                             s.source_id + ")");
  }
  for (size_t i = 0; i < s.seg.size(); ++i) {
    const uint8_t seg = s.seg.v[i];
    const uint8_t ood = s.ood.v[i];
    if (ood != 0 && ood != 1) {
      throw std::runtime_error("ood label outside {0,1} (" + s.source_id + ")");
    }
    if (seg != kIgnoreLabel && seg >= num_classes) {
      throw std::runtime_error("seg label outside class range (" + s.source_id + ")");
    }
    if (ood == 1 && seg != kIgnoreLabel) {
      throw std::runtime_error("ood pixel must carry IGNORE seg label (" +
                               s.source_id + ")");
    }
  }
}

std::array<double, 3> rgb_to_hsv(double r, double g, double b) {
  const double mx = std::max({r, g, b});
  const double mn = std::min({r, g, b});
  const double d = mx - mn;
  double h = 0.0;
  if (d > 0.0) {
    if (mx == r) {
      h = (g - b) / d;
      if (h < 0.0) h += 6.0;
    } else if (mx == g) {
      h = (b - r) / d + 2.0;
    } else {
      h = (r - g) / d + 4.0;
    }
    h /= 6.0;
  }
  const double s = mx > 0.0 ? d / mx : 0.0;
  return {h, s, mx};
}

std::array<double, 3> hsv_to_rgb(double h, double s, double v) {
  h -= std::floor(h);  // wrap to [0,1)
  const double hh = h * 6.0;
  const int i = std::min(5, static_cast<int>(hh));
  const double f = hh - i;
  const double p = v * (1.0 - s);
  const double q = v * (1.0 - s * f);
  const double t = v * (1.0 - s * (1.0 - f));
  switch (i) {
    case 0: return {v, t, p};
    case 1: return {q, v, p};
    case 2: return {p, v, t};
    case 3: return {p, q, v};
    case 4: return {t, p, v};
    default: return {v, p, q};
  }
}

}  // namespace oodseg
