#pragma once

#include <cmath>
#include <numbers>

namespace fpv {

inline constexpr double kPi = std::numbers::pi;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Wraps an angle in degrees to (-180, 180].
inline double wrap_signed_deg(double deg) {
  double a = std::fmod(deg, 360.0);
  if (a <= -180.0) a += 360.0;
  if (a > 180.0) a -= 360.0;
  return a;
}

/// Wraps an angle in degrees to [0, 360).
inline double wrap_deg_360(double deg) {
  double a = std::fmod(deg, 360.0);
  if (a < 0.0) a += 360.0;
  // fmod of a tiny negative can land exactly on 360
  if (a >= 360.0) a -= 360.0;
  return a;
}

/// Absolute circular distance between two angles, in [0, 180].
inline double angle_diff_deg(double a, double b) {
  return std::abs(wrap_signed_deg(a - b));
}

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double norm() const { return std::hypot(x, y); }
};

/// Angle of the vector from `from` to `to`, degrees in (-180, 180].
/// The frame is the raster frame: x right, y down (row index).
inline double bearing_deg(Vec2 from, Vec2 to) {
  return rad_to_deg(std::atan2(to.y - from.y, to.x - from.x));
}

/// Rotation-then-translation: apply(p) = R(rot_deg) * p + (dx, dy).
struct RigidTransform {
  double dx = 0.0;
  double dy = 0.0;
  double rot_deg = 0.0;

  Vec2 apply(Vec2 p) const {
    const double r = deg_to_rad(rot_deg);
    const double c = std::cos(r), s = std::sin(r);
    return {c * p.x - s * p.y + dx, s * p.x + c * p.y + dy};
  }

  double apply_direction(double dir_deg) const { return wrap_deg_360(dir_deg + rot_deg); }

  RigidTransform inverse() const {
    const double r = deg_to_rad(rot_deg);
    const double c = std::cos(r), s = std::sin(r);
    // inverse rotation applied to -t
    return {-(c * dx + s * dy), -(-s * dx + c * dy), wrap_signed_deg(-rot_deg)};
  }
};

/// Builds the transform rotating by rot_deg about `center`, then shifting by `shift`.
inline RigidTransform about_point(double rot_deg, Vec2 center, Vec2 shift = {}) {
  const double r = deg_to_rad(rot_deg);
  const double c = std::cos(r), s = std::sin(r);
  return {center.x - (c * center.x - s * center.y) + shift.x,
          center.y - (s * center.x + c * center.y) + shift.y, rot_deg};
}

}  // namespace fpv
