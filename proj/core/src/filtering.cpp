#include "fpv/filtering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fpv {

double Raster::sample(double x, double y) const {
  x = std::clamp(x, 0.0, static_cast<double>(width - 1));
  y = std::clamp(y, 0.0, static_cast<double>(height - 1));
  const int x0 = std::min(static_cast<int>(x), width - 2 >= 0 ? width - 2 : 0);
  const int y0 = std::min(static_cast<int>(y), height - 2 >= 0 ? height - 2 : 0);
  const int x1 = std::min(x0 + 1, width - 1);
  const int y1 = std::min(y0 + 1, height - 1);
  const double fx = x - x0, fy = y - y0;
  return (1 - fx) * (1 - fy) * at(x0, y0) + fx * (1 - fy) * at(x1, y0) +
         (1 - fx) * fy * at(x0, y1) + fx * fy * at(x1, y1);
}

std::size_t BoolImage::count() const {
  std::size_t n = 0;
  for (auto b : data) n += b != 0;
  return n;
}

std::complex<double> ComplexField::sample(double x, double y) const {
  x = std::clamp(x, 0.0, static_cast<double>(width - 1));
  y = std::clamp(y, 0.0, static_cast<double>(height - 1));
  const int x0 = std::min(static_cast<int>(x), width - 2 >= 0 ? width - 2 : 0);
  const int y0 = std::min(static_cast<int>(y), height - 2 >= 0 ? height - 2 : 0);
  const int x1 = std::min(x0 + 1, width - 1);
  const int y1 = std::min(y0 + 1, height - 1);
  const double fx = x - x0, fy = y - y0;
  return (1 - fx) * (1 - fy) * at(x0, y0) + fx * (1 - fy) * at(x1, y0) +
         (1 - fx) * fy * at(x0, y1) + fx * fy * at(x1, y1);
}

Raster ComplexField::magnitude() const {
  Raster out(width, height);
  for (std::size_t i = 0; i < values.size(); ++i) out.v[i] = std::abs(values[i]);
  return out;
}

std::vector<double> gaussian_kernel(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_kernel: sigma must be positive");
  const int r = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> k(2 * r + 1);
  double sum = 0.0;
  for (int u = -r; u <= r; ++u) {
    k[u + r] = std::exp(-0.5 * u * u / (sigma * sigma));
    sum += k[u + r];
  }
  for (auto& v : k) v /= sum;
  return k;
}

std::vector<double> gaussian_derivative_kernel(double sigma) {
  auto g = gaussian_kernel(sigma);
  const int r = static_cast<int>(g.size() / 2);
  std::vector<double> k(g.size());
  double ramp = 0.0;
  for (int u = -r; u <= r; ++u) {
    k[u + r] = u / (sigma * sigma) * g[u + r];
    ramp += u * k[u + r];
  }
  // exact unit response to a ramp, independent of truncation
  for (auto& v : k) v /= ramp;
  return k;
}

namespace {

// 1D cross-correlation along rows with clamp-to-edge.
void correlate_rows(const Raster& src, const std::vector<double>& k, Raster& dst) {
  const int r = static_cast<int>(k.size() / 2);
  const int w = src.width;
  for (int y = 0; y < src.height; ++y) {
    const double* row = src.v.data() + static_cast<std::size_t>(y) * w;
    double* out = dst.v.data() + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      if (x >= r && x + r < w) {
        const double* p = row + x - r;
        for (std::size_t i = 0; i < k.size(); ++i) acc += k[i] * p[i];
      } else {
        for (int u = -r; u <= r; ++u) acc += k[u + r] * row[std::clamp(x + u, 0, w - 1)];
      }
      out[x] = acc;
    }
  }
}

void correlate_cols(const Raster& src, const std::vector<double>& k, Raster& dst) {
  const int r = static_cast<int>(k.size() / 2);
  const int w = src.width, h = src.height;
  for (int y = 0; y < h; ++y) {
    double* out = dst.v.data() + static_cast<std::size_t>(y) * w;
    if (y >= r && y + r < h) {
      const double* base = src.v.data() + static_cast<std::size_t>(y - r) * w;
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        const double* p = base + x;
        for (std::size_t i = 0; i < k.size(); ++i) acc += k[i] * p[i * w];
        out[x] = acc;
      }
    } else {
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int u = -r; u <= r; ++u) acc += k[u + r] * src.at(x, std::clamp(y + u, 0, h - 1));
        out[x] = acc;
      }
    }
  }
}

}  // namespace

Raster correlate_separable(const Raster& src, const std::vector<double>& kx,
                           const std::vector<double>& ky) {
  if (kx.size() % 2 == 0 || ky.size() % 2 == 0)
    throw std::invalid_argument("correlate_separable: kernels must have odd length");
  Raster tmp(src.width, src.height), out(src.width, src.height);
  correlate_rows(src, kx, tmp);
  correlate_cols(tmp, ky, out);
  return out;
}

ComplexField correlate_separable(const ComplexField& src, const std::vector<double>& kx,
                                 const std::vector<double>& ky) {
  Raster re(src.width, src.height), im(src.width, src.height);
  for (std::size_t i = 0; i < src.values.size(); ++i) {
    re.v[i] = src.values[i].real();
    im.v[i] = src.values[i].imag();
  }
  const Raster fre = correlate_separable(re, kx, ky);
  const Raster fim = correlate_separable(im, kx, ky);
  ComplexField out(src.width, src.height);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = {fre.v[i], fim.v[i]};
  return out;
}

Raster box_mean(const Raster& src, int window) {
  if (window < 1 || window % 2 == 0) throw std::invalid_argument("box_mean: window must be odd and positive");
  const int r = window / 2;
  const int w = src.width, h = src.height;
  // summed-area table with one pad row/column of zeros
  std::vector<double> sat(static_cast<std::size_t>(w + 1) * (h + 1), 0.0);
  for (int y = 0; y < h; ++y) {
    double rowsum = 0.0;
    for (int x = 0; x < w; ++x) {
      rowsum += src.at(x, y);
      sat[static_cast<std::size_t>(y + 1) * (w + 1) + x + 1] =
          sat[static_cast<std::size_t>(y) * (w + 1) + x + 1] + rowsum;
    }
  }
  auto rect = [&](int x0, int y0, int x1, int y1) {  // inclusive coords
    return sat[static_cast<std::size_t>(y1 + 1) * (w + 1) + x1 + 1] -
           sat[static_cast<std::size_t>(y0) * (w + 1) + x1 + 1] -
           sat[static_cast<std::size_t>(y1 + 1) * (w + 1) + x0] +
           sat[static_cast<std::size_t>(y0) * (w + 1) + x0];
  };
  Raster out(w, h);
  for (int y = 0; y < h; ++y) {
    const int y0 = std::max(0, y - r), y1 = std::min(h - 1, y + r);
    for (int x = 0; x < w; ++x) {
      const int x0 = std::max(0, x - r), x1 = std::min(w - 1, x + r);
      out.at(x, y) = rect(x0, y0, x1, y1) / ((x1 - x0 + 1) * (y1 - y0 + 1));
    }
  }
  return out;
}

}  // namespace fpv
