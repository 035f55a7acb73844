#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "fpv/geometry.hpp"
#include "fpv/gray_image.hpp"

namespace fpv {

/// A phase dislocation of the ridge wave. sign +1 injects an extra ridge
/// (termination-like feature), sign -1 removes one.
struct Dislocation {
  double x = 0.0;
  double y = 0.0;
  int sign = 1;  // +1 or -1
};

/// Parameters of the frequency-modulated ridge model
///   I(x,y) = 127.5 * (1 + cos(phi(x,y))) + noise
///   phi(x,y) = 2*pi*f*(x*cos t0 + y*sin t0) + sum_k sign_k*atan2(y-y_k, x-x_k)
struct SyntheticSpec {
  int width = 224;
  int height = 224;
  double ridge_frequency = 0.1;        // cycles/pixel, (0, 0.25]
  double base_orientation_deg = 0.0;   // wave-normal angle t0
  std::vector<Dislocation> dislocations;
  double noise_std = 0.0;              // gaussian intensity noise
  std::uint64_t rng_seed = 0;

  /// Throws DomainError on invalid frequency, sign or out-of-image dislocations.
  void validate() const;
};

struct PlantedMinutia {
  double x = 0.0;
  double y = 0.0;
  double direction_deg = 0.0;  // [0, 360)
};

struct GroundTruth {
  std::vector<PlantedMinutia> minutiae;  // one per dislocation, same order
};

struct SyntheticPrint {
  GrayImage image;
  GroundTruth truth;
};

/// Renders the spec. Pure function of its argument: the same spec yields a
/// bit-identical image. The planted minutia direction is the ridge-flow
/// angle at the dislocation (perpendicular to the carrier wave normal, the
/// side selected by the dislocation sign).
SyntheticPrint synthesize_fingerprint(const SyntheticSpec& spec);

/// Derives the spec of a rigidly moved impression of the same finger:
/// dislocations and the base orientation are rotated by rot_deg about the
/// image center and shifted; the noise seed is replaced.
SyntheticSpec perturbed_spec(const SyntheticSpec& base, double rot_deg, Vec2 shift,
                             std::uint64_t noise_seed);

// --- plain-text spec files -------------------------------------------------
//
// key = value lines with '#' comments. Keys: width, height, freq, theta0,
// noise_std, seed, and dislocation = "x,y,sign" (repeated). An entry starts
// at a "print = <name>" line or at a "finger = <id>" line; corpus entries
// additionally take impression = <id> and the optional rot / shift keys,
// which derive the impression geometry via perturbed_spec.

struct SynthEntry {
  std::string name;        // output stem for flat entries
  std::string finger;      // corpus placement; empty for flat entries
  std::string impression;
  SyntheticSpec spec;
  int line = 0;            // line number of the entry head, for error messages
};

std::vector<SynthEntry> parse_synth_spec(std::istream& in, const std::string& origin);
std::vector<SynthEntry> parse_synth_spec_file(const std::filesystem::path& path);

/// Ground-truth text file: "GTV1 <count>" header then "x y direction" lines.
void write_ground_truth(const GroundTruth& gt, const std::filesystem::path& path);
GroundTruth read_ground_truth(const std::filesystem::path& path);

}  // namespace fpv
