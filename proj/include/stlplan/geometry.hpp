#pragma once

#include <algorithm>

#include <Eigen/Core>

#include "stlplan/errors.hpp"

namespace stlplan {

using Vec3 = Eigen::Vector3d;

/// Axis-aligned box, lo[j] < hi[j] on every axis. All lengths in meters.
struct Box3 {
  Vec3 lo = Vec3::Zero();
  Vec3 hi = Vec3::Zero();

  Box3() = default;
  Box3(const Vec3& lo_, const Vec3& hi_) : lo(lo_), hi(hi_) {}

  Vec3 center() const { return 0.5 * (lo + hi); }

  bool well_formed() const {
    return (lo.array() < hi.array()).all();
  }

  /// Closed containment of a point.
  bool contains(const Vec3& p) const {
    return (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
  }

  /// Closed containment of another box.
  bool contains(const Box3& b) const {
    return (b.lo.array() >= lo.array()).all() && (b.hi.array() <= hi.array()).all();
  }

  /// Open (volumetric) overlap; shared faces do not count.
  bool intersects(const Box3& b) const {
    return (lo.array() < b.hi.array()).all() && (b.lo.array() < hi.array()).all();
  }
};

/// Signed distance-to-faces margin: min over the six face margins,
/// positive iff the point lies strictly inside the box.
inline double box_margin(const Vec3& p, const Box3& box) {
  double m = box.hi[0] - p[0];
  for (int j = 0; j < 3; ++j) {
    m = std::min({m, box.hi[j] - p[j], p[j] - box.lo[j]});
  }
  return m;
}

}  // namespace stlplan
