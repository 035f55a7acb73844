#include "fpv/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "fpv/errors.hpp"
#include "fpv/filtering.hpp"
#include "fpv/geometry.hpp"

namespace fpv {

void FilterParams::validate() const {
  if (!(sigma_deriv > 0.0) || !(sigma_avg > 0.0) || !(sigma_para > 0.0))
    throw DomainError("filter params: all sigmas must be positive");
  if (filter_order != 0 && filter_order != 1)
    throw DomainError("filter params: filter_order must be 0 or 1");
}

namespace {

Raster to_raster(const GrayImage& img) {
  Raster out(img.width, img.height);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) out.v[i] = img.pixels[i];
  return out;
}

}  // namespace

ComplexField orientation_tensor(const Raster& image, const FilterParams& params) {
  params.validate();
  const auto g = gaussian_kernel(params.sigma_deriv);
  const auto d = gaussian_derivative_kernel(params.sigma_deriv);
  const Raster fx = correlate_separable(image, d, g);
  const Raster fy = correlate_separable(image, g, d);
  ComplexField z(image.width, image.height);
  for (std::size_t i = 0; i < z.values.size(); ++i) {
    const double gx = fx.v[i], gy = fy.v[i];
    z.values[i] = {gx * gx - gy * gy, 2.0 * gx * gy};
  }
  return z;
}

ComplexField orientation_tensor(const GrayImage& image, const FilterParams& params) {
  require_pipeline_size(image);
  return orientation_tensor(to_raster(image), params);
}

ComplexField linear_symmetry(const ComplexField& z, const FilterParams& params) {
  params.validate();
  const auto g = gaussian_kernel(params.sigma_avg);
  const ComplexField num = correlate_separable(z, g, g);
  const Raster den = correlate_separable(z.magnitude(), g, g);
  ComplexField ls(z.width, z.height);
  for (std::size_t i = 0; i < ls.values.size(); ++i) {
    if (den.v[i] > 1e-12) {
      auto v = num.values[i] / den.v[i];
      const double m = std::abs(v);
      if (m > 1.0) v /= m;  // guard the |LS| <= 1 invariant against rounding
      ls.values[i] = v;
    }
  }
  return ls;
}

namespace {

// Raw order-1 filter response: inner product of z with the kernel
// (x + iy) * g translated to every position, i.e. cross-correlation with
// the conjugated kernel, assembled from four separable passes.
ComplexField order1_response(const ComplexField& z, double sigma) {
  const auto g = gaussian_kernel(sigma);
  const int r = static_cast<int>(g.size() / 2);
  std::vector<double> xg(g.size());
  for (int u = -r; u <= r; ++u) xg[u + r] = u * g[u + r];

  const ComplexField a = correlate_separable(z, xg, g);  // sum z * x g(x) g(y)
  const ComplexField b = correlate_separable(z, g, xg);  // sum z * y g(x) g(y)
  ComplexField out(z.width, z.height);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = a.values[i] - std::complex<double>(0.0, 1.0) * b.values[i];
  }
  return out;
}

}  // namespace

Raster ideal_parabolic_pattern(const FilterParams& params) {
  const int half = static_cast<int>(std::ceil(3.0 * params.sigma_para + 3.0 * params.sigma_deriv)) + 4;
  const int side = 2 * half + 1;
  // local ridge wavelength 10/3 * sigma at radius sigma
  const double k = 1.2 * kPi / std::sqrt(params.sigma_para);
  Raster img(side, side);
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      const double dx = x - half, dy = y - half;
      const double r = std::hypot(dx, dy);
      const double alpha = std::atan2(dy, dx);
      const double u = std::sqrt(r) * std::sin(alpha / 2.0);
      img.at(x, y) = 127.5 * (1.0 + std::cos(k * u));
    }
  }
  return img;
}

double ideal_parabolic_response(const FilterParams& params) {
  const Raster pattern = ideal_parabolic_pattern(params);
  const ComplexField z = orientation_tensor(pattern, params);
  const ComplexField resp = order1_response(z, params.sigma_para);
  const int c = pattern.width / 2;
  return std::abs(resp.at(c, c));
}

ComplexField parabolic_symmetry(const ComplexField& z, const FilterParams& params) {
  params.validate();
  if (params.filter_order != 1)
    throw DomainError("parabolic_symmetry: requires filter_order = 1");
  ComplexField ps = order1_response(z, params.sigma_para);
  const double calib = ideal_parabolic_response(params);
  if (calib > 0.0) {
    for (auto& v : ps.values) v /= calib;
  }
  return ps;
}

ComplexField inhibit(const ComplexField& ps, const ComplexField& ls) {
  if (ps.width != ls.width || ps.height != ls.height)
    throw DomainError("inhibit: dimension mismatch");
  ComplexField out(ps.width, ps.height);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = ps.values[i] * (1.0 - std::abs(ls.values[i]));
  }
  return out;
}

GrayImage enhance_oriented(const GrayImage& image, const ComplexField& ls, double sigma) {
  if (image.width != ls.width || image.height != ls.height)
    throw DomainError("enhance_oriented: dimension mismatch");
  if (!(sigma > 0.0)) throw DomainError("enhance_oriented: sigma must be positive");

  const auto g = gaussian_kernel(sigma);
  const int r = static_cast<int>(g.size() / 2);
  Raster src(image.width, image.height);
  for (std::size_t i = 0; i < image.pixels.size(); ++i) src.v[i] = image.pixels[i];

  GrayImage out = image;
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      const auto v = ls.at(x, y);
      if (std::abs(v) < 0.1) continue;
      const double flow = std::arg(v) / 2.0 + kPi / 2.0;
      const double cx = std::cos(flow), cy = std::sin(flow);
      double acc = 0.0;
      for (int t = -r; t <= r; ++t) {
        acc += g[t + r] * src.sample(x + t * cx, y + t * cy);
      }
      out.at(x, y) = static_cast<std::uint8_t>(std::lround(std::clamp(acc, 0.0, 255.0)));
    }
  }
  return out;
}

QualityMap quality_map(const GrayImage& image, const ComplexField& ls, const BoolImage& mask,
                       int block_size, const QualityThresholds& thresholds) {
  if (block_size < 8) throw DomainError("quality_map: block_size must be >= 8");
  if (image.width != ls.width || image.height != ls.height ||
      image.width != mask.width || image.height != mask.height)
    throw DomainError("quality_map: dimension mismatch");

  QualityMap qm;
  qm.block_size = block_size;
  qm.grid_w = (image.width + block_size - 1) / block_size;
  qm.grid_h = (image.height + block_size - 1) / block_size;
  qm.levels.assign(static_cast<std::size_t>(qm.grid_w) * qm.grid_h, 0);

  struct BlockStat {
    bool background = true;
    bool low_contrast = true;
    double coherence = 0.0;
    std::complex<double> orient{};  // summed double-angle vector
  };
  std::vector<BlockStat> stats(qm.levels.size());

  for (int by = 0; by < qm.grid_h; ++by) {
    for (int bx = 0; bx < qm.grid_w; ++bx) {
      const int x0 = bx * block_size, y0 = by * block_size;
      const int x1 = std::min(image.width, x0 + block_size);
      const int y1 = std::min(image.height, y0 + block_size);
      const int n = (x1 - x0) * (y1 - y0);
      int in_mask = 0;
      double sum = 0.0, sumsq = 0.0, coh = 0.0;
      std::complex<double> orient{};
      for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
          const double p = image.at(x, y);
          sum += p;
          sumsq += p * p;
          in_mask += mask.at(x, y);
          const auto v = ls.at(x, y);
          coh += std::abs(v);
          orient += v;
        }
      }
      auto& st = stats[static_cast<std::size_t>(by) * qm.grid_w + bx];
      st.background = in_mask * 2 < n;
      const double mean = sum / n;
      st.low_contrast = std::sqrt(std::max(0.0, sumsq / n - mean * mean)) < thresholds.min_contrast;
      st.coherence = coh / n;
      st.orient = orient;
    }
  }

  for (int by = 0; by < qm.grid_h; ++by) {
    for (int bx = 0; bx < qm.grid_w; ++bx) {
      const auto& st = stats[static_cast<std::size_t>(by) * qm.grid_w + bx];
      auto& level = qm.levels[static_cast<std::size_t>(by) * qm.grid_w + bx];
      if (st.background || st.low_contrast) {
        level = 0;
        continue;
      }
      double curvature = 0.0;
      if (std::abs(st.orient) > 1e-12) {
        const double own = rad_to_deg(std::arg(st.orient));
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            const int nx = bx + dx, ny = by + dy;
            if (nx < 0 || nx >= qm.grid_w || ny < 0 || ny >= qm.grid_h) continue;
            const auto& nb = stats[static_cast<std::size_t>(ny) * qm.grid_w + nx];
            if (std::abs(nb.orient) <= 1e-12) continue;
            // halve the double-angle difference to get orientation degrees
            curvature = std::max(curvature,
                                 angle_diff_deg(own, rad_to_deg(std::arg(nb.orient))) / 2.0);
          }
        }
      }
      int l = 4;
      if (st.coherence < thresholds.high_coherence) --l;
      if (st.coherence < thresholds.low_coherence) --l;
      if (curvature > thresholds.max_curvature_deg) --l;
      level = std::max(1, l);
    }
  }
  return qm;
}

BoolImage segment(const ComplexField& ls, double threshold) {
  if (threshold < 0.0 || threshold > 1.0) throw DomainError("segment: threshold must be in [0,1]");
  const int w = ls.width, h = ls.height;
  BoolImage above(w, h);
  bool any = false;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const bool b = std::abs(ls.at(x, y)) >= threshold;
      above.set(x, y, b);
      any = any || b;
    }
  }
  if (!any) throw DomainError("no fingerprint area");

  // keep the largest 8-connected component
  std::vector<int> label(static_cast<std::size_t>(w) * h, -1);
  int best_label = -1;
  std::size_t best_size = 0;
  int next = 0;
  std::vector<std::pair<int, int>> stack;
  for (int sy = 0; sy < h; ++sy) {
    for (int sx = 0; sx < w; ++sx) {
      if (!above.at(sx, sy) || label[static_cast<std::size_t>(sy) * w + sx] >= 0) continue;
      const int id = next++;
      std::size_t size = 0;
      stack.push_back({sx, sy});
      label[static_cast<std::size_t>(sy) * w + sx] = id;
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        ++size;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = x + dx, ny = y + dy;
            if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
            auto& l = label[static_cast<std::size_t>(ny) * w + nx];
            if (l < 0 && above.at(nx, ny)) {
              l = id;
              stack.push_back({nx, ny});
            }
          }
        }
      }
      if (size > best_size) {
        best_size = size;
        best_label = id;
      }
    }
  }

  BoolImage mask(w, h);
  for (std::size_t i = 0; i < mask.data.size(); ++i) mask.data[i] = label[i] == best_label;
  return mask;
}

void dump_field_pgm(const ComplexField& field, const std::filesystem::path& magnitude_path,
                    const std::filesystem::path& argument_path) {
  double vmax = 0.0;
  for (const auto& v : field.values) vmax = std::max(vmax, std::abs(v));
  GrayImage mag(field.width, field.height), arg(field.width, field.height);
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    const double m = std::abs(field.values[i]);
    mag.pixels[i] = static_cast<std::uint8_t>(
        vmax > 0.0 ? std::lround(255.0 * m / vmax) : 0);
    const double a = (std::arg(field.values[i]) + kPi) / (2.0 * kPi);  // [0,1]
    arg.pixels[i] = static_cast<std::uint8_t>(std::lround(std::clamp(a, 0.0, 1.0) * 255.0));
  }
  save_pgm(mag, magnitude_path);
  save_pgm(arg, argument_path);
}

}  // namespace fpv
