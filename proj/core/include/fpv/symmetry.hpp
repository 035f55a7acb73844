#pragma once

#include "fpv/complex_field.hpp"
#include "fpv/gray_image.hpp"
#include "fpv/raster.hpp"

namespace fpv {

/// Scales of the symmetry filtering chain, in pixels at ~500 dpi.
struct FilterParams {
  double sigma_deriv = 1.0;  ///< Gaussian-derivative scale for the gradients
  double sigma_avg = 4.0;    ///< averaging scale for linear symmetry
  double sigma_para = 3.0;   ///< envelope scale of the order-1 filter
  int filter_order = 1;      ///< 0 reduces to plain averaging

  void validate() const;
};

/// Orientation tensor z = (f_x + i f_y)^2 from Gaussian-derivative
/// gradients at sigma_deriv. All filtering is separable 1D passes.
ComplexField orientation_tensor(const GrayImage& image, const FilterParams& params);
ComplexField orientation_tensor(const Raster& image, const FilterParams& params);

/// Averaged z divided by averaged |z|. Argument is the double-angle ridge
/// orientation, magnitude its reliability in [0,1]. Zero where no gradient
/// evidence exists.
ComplexField linear_symmetry(const ComplexField& z, const FilterParams& params);

/// Response of the order-1 symmetry filter (x+iy)*g applied to z, divided
/// by the response magnitude of the canonical parabolic pattern at the same
/// scales. Argument is the minutia direction, magnitude an occurrence
/// certainty near [0,1].
ComplexField parabolic_symmetry(const ComplexField& z, const FilterParams& params);

/// Calibration constant: center response magnitude of the order-1 filter on
/// the canonical parabolic pattern rendered at these scales.
double ideal_parabolic_response(const FilterParams& params);

/// The canonical parabolic pattern itself (exposed for tests).
Raster ideal_parabolic_pattern(const FilterParams& params);

/// PSi = PS * (1 - |LS|), pointwise. Throws DomainError on dimension mismatch.
ComplexField inhibit(const ComplexField& ps, const ComplexField& ls);

/// One pass of 1D Gaussian smoothing along the local ridge flow
/// (perpendicular to the double-angle orientation arg(LS)/2). Pixels with
/// |LS| below 0.1 are copied unchanged.
GrayImage enhance_oriented(const GrayImage& image, const ComplexField& ls, double sigma);

struct QualityThresholds {
  double min_contrast = 8.0;      ///< block intensity std below this: level 0
  double low_coherence = 0.3;     ///< mean |LS| below this costs a second level
  double high_coherence = 0.5;    ///< mean |LS| below this costs one level
  double max_curvature_deg = 30.0;///< orientation disagreement with neighbors
};

/// Five-level block quality map. Level 0 is background or low contrast;
/// levels 1..4 grade coherence and curvature.
struct QualityMap {
  int block_size = 16;
  int grid_w = 0;
  int grid_h = 0;
  std::vector<int> levels;  // row-major, values in {0..4}

  int at(int bx, int by) const { return levels[static_cast<std::size_t>(by) * grid_w + bx]; }
  int level_at_pixel(int x, int y) const { return at(x / block_size, y / block_size); }
};

QualityMap quality_map(const GrayImage& image, const ComplexField& ls, const BoolImage& mask,
                       int block_size, const QualityThresholds& thresholds = {});

/// Foreground mask: |LS| >= threshold, reduced to the largest 8-connected
/// component. Throws DomainError("no fingerprint area") when empty.
BoolImage segment(const ComplexField& ls, double threshold);

}  // namespace fpv
