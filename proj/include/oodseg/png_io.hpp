#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oodseg {

// Interleaved 8-bit image buffer as stored on disk.
struct PngImage {
  int h = 0;
  int w = 0;
  int channels = 0;  // 1 (index map) or 3 (RGB)
  std::vector<uint8_t> pixels;
};

// Throws std::runtime_error on I/O or decode failure.
PngImage read_png(const std::string& path);
void write_png(const std::string& path, const PngImage& img);

}  // namespace oodseg
