#pragma once

#include <vector>

#include "fpv/complex_field.hpp"
#include "fpv/raster.hpp"

namespace fpv {

/// Sampled Gaussian, radius ceil(3*sigma), normalized to unit sum.
std::vector<double> gaussian_kernel(double sigma);

/// Sampled derivative-of-Gaussian responding with +1 to a unit intensity
/// ramp: tap(u) = u/sigma^2 * g(u), rescaled so that sum(u * tap(u)) = 1.
std::vector<double> gaussian_derivative_kernel(double sigma);

/// Separable cross-correlation, clamp-to-edge borders: rows with kx, then
/// columns with ky. Kernels must have odd length.
Raster correlate_separable(const Raster& src, const std::vector<double>& kx,
                           const std::vector<double>& ky);
ComplexField correlate_separable(const ComplexField& src, const std::vector<double>& kx,
                                 const std::vector<double>& ky);

/// Sliding-window box mean with the window clipped at the borders.
Raster box_mean(const Raster& src, int window);

}  // namespace fpv
