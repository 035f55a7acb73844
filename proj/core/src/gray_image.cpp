#include "fpv/gray_image.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <string>

#include "fpv/errors.hpp"

namespace fpv {

void require_pipeline_size(const GrayImage& img) {
  if (img.width < kMinPipelineSide || img.height < kMinPipelineSide) {
    throw DomainError("image smaller than " + std::to_string(kMinPipelineSide) +
                      "x" + std::to_string(kMinPipelineSide) + " rejected");
  }
}

namespace {

// Reads the next header token, skipping whitespace and '#' comments.
// Comments may carry a "dpi:N" tag, which is surfaced through out_dpi.
std::string next_token(std::istream& in, std::optional<int>* out_dpi) {
  for (;;) {
    int c = in.peek();
    if (c == EOF) return {};
    if (c == '#') {
      std::string line;
      std::getline(in, line);
      if (out_dpi) {
        auto pos = line.find("dpi:");
        if (pos != std::string::npos) {
          try {
            *out_dpi = std::stoi(line.substr(pos + 4));
          } catch (...) {
            // not a dpi tag after all; ignore
          }
        }
      }
      continue;
    }
    if (std::isspace(c)) {
      in.get();
      continue;
    }
    break;
  }
  std::string tok;
  while (in.peek() != EOF && !std::isspace(in.peek()) && in.peek() != '#') {
    tok.push_back(static_cast<char>(in.get()));
  }
  return tok;
}

int parse_positive(const std::string& tok, const std::string& file, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v <= 0) throw std::invalid_argument(tok);
    return v;
  } catch (...) {
    throw ParseError(file + ": malformed header (" + std::string(what) + " '" + tok + "')");
  }
}

}  // namespace

GrayImage load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::string name = path.string();

  std::optional<int> dpi;
  if (next_token(in, &dpi) != "P5") throw ParseError(name + ": malformed header (missing P5 magic)");
  GrayImage img;
  img.width = parse_positive(next_token(in, &dpi), name, "width");
  img.height = parse_positive(next_token(in, &dpi), name, "height");
  const std::string maxval = next_token(in, &dpi);
  if (maxval != "255") throw ParseError(name + ": unsupported maxval '" + maxval + "'");
  int sep = in.get();  // exactly one whitespace byte before the raster
  if (sep == EOF || !std::isspace(sep)) throw ParseError(name + ": malformed header (missing raster separator)");

  img.dpi = dpi;
  img.pixels.resize(static_cast<std::size_t>(img.width) * img.height);
  in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
  if (static_cast<std::size_t>(in.gcount()) != img.pixels.size()) {
    throw ParseError(name + ": truncated payload (" + std::to_string(in.gcount()) + " of " +
                     std::to_string(img.pixels.size()) + " bytes)");
  }
  return img;
}

void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << "P5\n";
  if (img.dpi) out << "# dpi:" << *img.dpi << "\n";
  out << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

NormalizeResult normalize_intensity(const GrayImage& img, double target_mean, double target_std) {
  if (target_std <= 0.0) throw DomainError("normalize_intensity: target_std must be positive");
  if (img.pixels.empty()) throw DomainError("normalize_intensity: empty image");

  double sum = 0.0, sumsq = 0.0;
  for (std::uint8_t p : img.pixels) {
    sum += p;
    sumsq += static_cast<double>(p) * p;
  }
  const double n = static_cast<double>(img.pixels.size());
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  if (var <= 0.0) return {img, true};

  const double scale = target_std / std::sqrt(var);
  GrayImage out = img;
  for (auto& p : out.pixels) {
    double v = target_mean + (static_cast<double>(p) - mean) * scale;
    p = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
  }
  return {std::move(out), false};
}

}  // namespace fpv
