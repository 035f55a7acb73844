#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace fpv {

/// 8-bit grayscale raster, row-major. pixel(x, y) = pixels[y * width + x].
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
  std::optional<int> dpi;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  std::size_t size() const { return pixels.size(); }

  bool operator==(const GrayImage& o) const {
    return width == o.width && height == o.height && pixels == o.pixels;
  }
};

/// Minimum side length accepted by the processing pipeline.
inline constexpr int kMinPipelineSide = 16;

/// Throws DomainError if the image is smaller than the pipeline minimum.
void require_pipeline_size(const GrayImage& img);

/// Reads a binary PGM (P5, maxval 255). '#' comments are allowed between
/// header tokens. Malformed header, unsupported maxval and truncated
/// payload are reported as distinct ParseError messages.
GrayImage load_pgm(const std::filesystem::path& path);

/// Writes a binary PGM (P5, maxval 255). A set dpi tag is preserved as a
/// "# dpi:N" comment that load_pgm understands.
void save_pgm(const GrayImage& img, const std::filesystem::path& path);

struct NormalizeResult {
  GrayImage image;
  bool degenerate = false;  ///< input had zero variance and was passed through
};

/// Affine remap of intensities toward (target_mean, target_std), clamped to
/// [0,255]. A constant image is returned unchanged with `degenerate` set.
NormalizeResult normalize_intensity(const GrayImage& img, double target_mean, double target_std);

}  // namespace fpv
