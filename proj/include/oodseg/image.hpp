#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "oodseg/tensor.hpp"

namespace oodseg {

// Label value reserved for pixels outside the class set (void / OoD).
inline constexpr uint8_t kIgnoreLabel = 255;

// Per-pixel byte map (class indices or binary flags).
struct LabelMap {
  int h = 0;
  int w = 0;
  std::vector<uint8_t> v;

  LabelMap() = default;
  LabelMap(int h_, int w_, uint8_t fill = 0)
      : h(h_), w(w_), v(static_cast<size_t>(h_) * w_, fill) {}

  uint8_t& at(int y, int x) { return v[static_cast<size_t>(y) * w + x]; }
  uint8_t at(int y, int x) const { return v[static_cast<size_t>(y) * w + x]; }
  size_t size() const { return v.size(); }
  bool operator==(const LabelMap& o) const { return h == o.h && w == o.w && v == o.v; }
};

// One training/evaluation item: RGB image plus per-pixel class and OoD labels.
// rgb is stored channel-major [3, H, W] with intensities in [0, 1].
struct ImageSample {
  Tensor rgb;
  LabelMap seg;
  LabelMap ood;
  std::string source_id;

  int height() const { return rgb.ndim() == 3 ? rgb.dim(1) : 0; }
  int width() const { return rgb.ndim() == 3 ? rgb.dim(2) : 0; }
};

// Throws std::runtime_error if dimensions disagree or the seg/ood coupling
// is violated (ood=1 requires seg=IGNORE; a class label requires ood=0).
void validate_sample(const ImageSample& s, int num_classes);

// RGB <-> HSV on [0,1] channels; hue is a fraction of the circle in [0,1).
std::array<double, 3> rgb_to_hsv(double r, double g, double b);
std::array<double, 3> hsv_to_rgb(double h, double s, double v);

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace oodseg
