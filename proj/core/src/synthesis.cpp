#include "fpv/synthesis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "fpv/errors.hpp"

namespace fpv {

void SyntheticSpec::validate() const {
  if (width < kMinPipelineSide || height < kMinPipelineSide)
    throw DomainError("synthetic spec: image too small");
  if (!(ridge_frequency > 0.0) || ridge_frequency > 0.25)
    throw DomainError("synthetic spec: ridge_frequency must be in (0, 0.25]");
  if (noise_std < 0.0) throw DomainError("synthetic spec: negative noise_std");
  for (const auto& d : dislocations) {
    if (d.sign != 1 && d.sign != -1) throw DomainError("synthetic spec: dislocation sign must be +1 or -1");
    if (d.x < 0.0 || d.x >= width || d.y < 0.0 || d.y >= height)
      throw DomainError("synthetic spec: dislocation outside the image");
  }
}

SyntheticPrint synthesize_fingerprint(const SyntheticSpec& spec) {
  spec.validate();

  const double omega = 2.0 * kPi * spec.ridge_frequency;
  const double t0 = deg_to_rad(spec.base_orientation_deg);
  const double ct = std::cos(t0), st = std::sin(t0);

  GrayImage img(spec.width, spec.height);
  std::mt19937_64 rng(spec.rng_seed);
  std::normal_distribution<double> noise(0.0, spec.noise_std > 0.0 ? spec.noise_std : 1.0);

  std::size_t idx = 0;
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x, ++idx) {
      double phi = omega * (x * ct + y * st);
      for (const auto& d : spec.dislocations) {
        phi += d.sign * std::atan2(y - d.y, x - d.x);
      }
      double v = 127.5 * (1.0 + std::cos(phi));
      if (spec.noise_std > 0.0) v += noise(rng);
      img.pixels[idx] = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
    }
  }

  GroundTruth gt;
  gt.minutiae.reserve(spec.dislocations.size());
  for (const auto& d : spec.dislocations) {
    // ridge flow is perpendicular to the carrier wave normal; the
    // dislocation sign selects the half direction
    gt.minutiae.push_back({d.x, d.y, wrap_deg_360(spec.base_orientation_deg + 90.0 * d.sign)});
  }
  return {std::move(img), std::move(gt)};
}

SyntheticSpec perturbed_spec(const SyntheticSpec& base, double rot_deg, Vec2 shift,
                             std::uint64_t noise_seed) {
  SyntheticSpec out = base;
  out.base_orientation_deg = wrap_deg_360(base.base_orientation_deg + rot_deg);
  out.rng_seed = noise_seed;
  const Vec2 center{(base.width - 1) / 2.0, (base.height - 1) / 2.0};
  const RigidTransform t = about_point(rot_deg, center, shift);
  for (auto& d : out.dislocations) {
    const Vec2 p = t.apply({d.x, d.y});
    d.x = p.x;
    d.y = p.y;
  }
  return out;
}

namespace {

double parse_number(const std::string& value, const std::string& origin, int line) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || p != value.data() + value.size())
    throw ParseError(origin + ":" + std::to_string(line) + ": bad number '" + value + "'");
  return v;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<SynthEntry> parse_synth_spec(std::istream& in, const std::string& origin) {
  std::vector<SynthEntry> entries;
  SynthEntry cur;
  bool open = false;
  double rot = 0.0;
  Vec2 shift{};
  bool perturbed = false;

  auto flush = [&]() {
    if (!open) return;
    if (perturbed) cur.spec = perturbed_spec(cur.spec, rot, shift, cur.spec.rng_seed);
    cur.spec.validate();
    entries.push_back(cur);
    cur = SynthEntry{};
    rot = 0.0;
    shift = {};
    perturbed = false;
    open = false;
  };

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ParseError(origin + ":" + std::to_string(line) + ": expected 'key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ParseError(origin + ":" + std::to_string(line) + ": expected 'key = value'");

    if (key == "print" || key == "finger") {
      flush();
      open = true;
      cur.line = line;
      if (key == "print") cur.name = value;
      else cur.finger = value;
      continue;
    }
    if (!open) throw ParseError(origin + ":" + std::to_string(line) +
                                ": key '" + key + "' before any 'print =' or 'finger =' entry");

    if (key == "impression") {
      cur.impression = value;
    } else if (key == "width") {
      cur.spec.width = static_cast<int>(parse_number(value, origin, line));
    } else if (key == "height") {
      cur.spec.height = static_cast<int>(parse_number(value, origin, line));
    } else if (key == "freq") {
      cur.spec.ridge_frequency = parse_number(value, origin, line);
    } else if (key == "theta0") {
      cur.spec.base_orientation_deg = parse_number(value, origin, line);
    } else if (key == "noise_std") {
      cur.spec.noise_std = parse_number(value, origin, line);
    } else if (key == "seed") {
      cur.spec.rng_seed = static_cast<std::uint64_t>(parse_number(value, origin, line));
    } else if (key == "rot") {
      rot = parse_number(value, origin, line);
      perturbed = true;
    } else if (key == "shift") {
      std::istringstream ss(value);
      std::string sx, sy;
      if (!std::getline(ss, sx, ',') || !std::getline(ss, sy))
        throw ParseError(origin + ":" + std::to_string(line) + ": shift expects 'dx,dy'");
      shift = {parse_number(trim(sx), origin, line), parse_number(trim(sy), origin, line)};
      perturbed = true;
    } else if (key == "dislocation") {
      std::istringstream ss(value);
      std::string sx, sy, sg;
      if (!std::getline(ss, sx, ',') || !std::getline(ss, sy, ',') || !std::getline(ss, sg))
        throw ParseError(origin + ":" + std::to_string(line) + ": dislocation expects 'x,y,sign'");
      Dislocation d;
      d.x = parse_number(trim(sx), origin, line);
      d.y = parse_number(trim(sy), origin, line);
      const std::string g = trim(sg);
      if (g == "+1" || g == "1") d.sign = 1;
      else if (g == "-1") d.sign = -1;
      else throw ParseError(origin + ":" + std::to_string(line) + ": dislocation sign must be +1 or -1");
      cur.spec.dislocations.push_back(d);
    } else {
      throw ParseError(origin + ":" + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  flush();
  return entries;
}

std::vector<SynthEntry> parse_synth_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_synth_spec(in, path.string());
}

void write_ground_truth(const GroundTruth& gt, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << "GTV1 " << gt.minutiae.size() << "\n";
  char buf[96];
  for (const auto& m : gt.minutiae) {
    std::snprintf(buf, sizeof buf, "%.3f %.3f %.2f\n", m.x, m.y, m.direction_deg);
    out << buf;
  }
  if (!out) throw IoError("write failed for " + path.string());
}

GroundTruth read_ground_truth(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string magic;
  std::size_t count = 0;
  if (!(in >> magic >> count) || magic != "GTV1")
    throw ParseError(path.string() + ": not a ground-truth file");
  GroundTruth gt;
  gt.minutiae.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto& m = gt.minutiae[i];
    if (!(in >> m.x >> m.y >> m.direction_deg))
      throw ParseError(path.string() + ": truncated ground truth");
  }
  return gt;
}

}  // namespace fpv
