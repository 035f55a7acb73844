#pragma once

#include <cstdint>
#include <vector>

namespace fpv {

/// Row-major raster of doubles; the working type of the filtering kernels.
struct Raster {
  int width = 0;
  int height = 0;
  std::vector<double> v;

  Raster() = default;
  Raster(int w, int h, double fill = 0.0)
      : width(w), height(h), v(static_cast<std::size_t>(w) * h, fill) {}

  double at(int x, int y) const { return v[static_cast<std::size_t>(y) * width + x]; }
  double& at(int x, int y) { return v[static_cast<std::size_t>(y) * width + x]; }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

  /// Bilinear sample with clamp-to-edge; (x, y) in pixel coordinates.
  double sample(double x, double y) const;
};

/// Row-major boolean raster: foreground masks, binary ridge images, skeletons.
struct BoolImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  BoolImage() = default;
  BoolImage(int w, int h, bool fill = false)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill ? 1 : 0) {}

  bool at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x] != 0; }
  void set(int x, int y, bool b) { data[static_cast<std::size_t>(y) * width + x] = b ? 1 : 0; }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  std::size_t count() const;

  bool operator==(const BoolImage& o) const = default;
};

}  // namespace fpv
