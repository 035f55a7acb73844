#pragma once

#include <complex>
#include <filesystem>
#include <vector>

#include "fpv/raster.hpp"

namespace fpv {

/// Row-major field of complex numbers. Carries the orientation tensor and
/// the symmetry responses; the argument convention is double-angle for
/// orientation-like fields.
struct ComplexField {
  int width = 0;
  int height = 0;
  std::vector<std::complex<double>> values;

  ComplexField() = default;
  ComplexField(int w, int h)
      : width(w), height(h), values(static_cast<std::size_t>(w) * h) {}

  std::complex<double> at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
  std::complex<double>& at(int x, int y) {
    return values[static_cast<std::size_t>(y) * width + x];
  }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

  /// Bilinear sample (componentwise), clamp-to-edge.
  std::complex<double> sample(double x, double y) const;

  Raster magnitude() const;
};

/// Writes |field| scaled to [0,255] and arg(field) mapped from (-pi, pi] to
/// [0,255] as two PGM images next to each other in naming.
void dump_field_pgm(const ComplexField& field, const std::filesystem::path& magnitude_path,
                    const std::filesystem::path& argument_path);

}  // namespace fpv
