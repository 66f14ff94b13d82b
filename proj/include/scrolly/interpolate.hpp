// Copyright 2026 The Scrolly Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCROLLY_INTERPOLATE_HPP_
#define SCROLLY_INTERPOLATE_HPP_

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "scrolly/story_model.hpp"

namespace scrolly {

template <typename Scalar>
Scalar lerp(Scalar a, Scalar b, Scalar t) {
  return a + (b - a) * t;
}

/// Shortest-arc spherical interpolation, renormalized. t = 0 and t = 1
/// return the inputs unchanged.
template <typename Scalar>
Eigen::Quaternion<Scalar> slerp_shortest(const Eigen::Quaternion<Scalar>& q0,
                                         const Eigen::Quaternion<Scalar>& q1,
                                         Scalar t) {
  if (t <= Scalar(0)) return q0;
  if (t >= Scalar(1)) return q1;
  const Eigen::Matrix<Scalar, 4, 1> a = q0.coeffs().normalized();
  Eigen::Matrix<Scalar, 4, 1> b = q1.coeffs().normalized();
  Scalar dot = a.dot(b);
  if (dot < Scalar(0)) {
    b = -b;
    dot = -dot;
  }
  Eigen::Matrix<Scalar, 4, 1> r;
  if (dot > Scalar(1) - Scalar(1e-12)) {
    r = a + (b - a) * t;
  } else {
    using std::acos;
    using std::sin;
    const Scalar theta = acos(std::min(dot, Scalar(1)));
    const Scalar s = sin(theta);
    r = a * (sin((Scalar(1) - t) * theta) / s) + b * (sin(t * theta) / s);
  }
  r.normalize();
  Eigen::Quaternion<Scalar> q;
  q.coeffs() = r;
  return q;
}

/// Position and zoom linear, rotation by shortest-arc slerp.
template <typename Scalar>
CameraT<Scalar> interpolate_camera(const CameraT<Scalar>& c0,
                                   const CameraT<Scalar>& c1, Scalar t) {
  if (t <= Scalar(0)) return c0;
  if (t >= Scalar(1)) return c1;
  CameraT<Scalar> out;
  out.position = c0.position + (c1.position - c0.position) * t;
  out.rotation = slerp_shortest(c0.rotation, c1.rotation, t);
  out.zoom = lerp(c0.zoom, c1.zoom, t);
  return out;
}

/// Round half up, then clamp into the endpoints' range.
inline std::int64_t interpolate_index(std::int64_t i0, std::int64_t i1,
                                      double t) {
  const double v = lerp(static_cast<double>(i0), static_cast<double>(i1), t);
  const auto rounded = static_cast<std::int64_t>(std::floor(v + 0.5));
  return std::clamp(rounded, std::min(i0, i1), std::max(i0, i1));
}

// ---------------------------------------------------------------------------
// Map views

template <typename Scalar>
struct MapViewT {
  Scalar lat = Scalar(0);
  Scalar lon = Scalar(0);
  Scalar zoom_level = Scalar(1);
  bool operator==(const MapViewT&) const = default;
};

using MapView = MapViewT<double>;

inline MapView map_view_of(const Map& m) { return {m.lat, m.lon, m.zoom_level}; }

inline constexpr double kMercatorMaxLat = 85.0511287798066;

/// Web-Mercator center in normalized world units ([0,1]^2, y down).
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> project_center(const MapViewT<Scalar>& v) {
  using std::log;
  using std::tan;
  const Scalar pi = Scalar(EIGEN_PI);
  const Scalar lat = std::clamp(v.lat, Scalar(-kMercatorMaxLat), Scalar(kMercatorMaxLat));
  const Scalar phi = lat * pi / Scalar(180);
  return {(v.lon + Scalar(180)) / Scalar(360),
          (Scalar(1) - log(tan(pi / Scalar(4) + phi / Scalar(2))) / pi) / Scalar(2)};
}

/// Viewport width in normalized world units.
template <typename Scalar>
Scalar view_width(const MapViewT<Scalar>& v) {
  using std::exp2;
  return exp2(-v.zoom_level);
}

template <typename Scalar>
MapViewT<Scalar> unproject(const Eigen::Matrix<Scalar, 2, 1>& center,
                           Scalar width) {
  using std::atan;
  using std::log2;
  using std::sinh;
  const Scalar pi = Scalar(EIGEN_PI);
  return {atan(sinh(pi * (Scalar(1) - Scalar(2) * center.y()))) * Scalar(180) / pi,
          center.x() * Scalar(360) - Scalar(180), -log2(width)};
}

/// Optimal smooth pan-zoom path between two map views in the projected
/// plane: a geodesic of ds^2 = (rho^2 du^2 + dw^2 / rho^2) / w^2, where u is
/// distance along the straight line between centers and w the view width.
template <typename Scalar>
class PanZoomPath {
 public:
  using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

  PanZoomPath(const MapViewT<Scalar>& from, const MapViewT<Scalar>& to,
              Scalar rho = Scalar(std::numbers::sqrt2))
      : from_(from), to_(to), rho_(rho) {
    using std::abs;
    using std::asinh;
    using std::log;
    c0_ = project_center(from);
    c1_ = project_center(to);
    w0_ = view_width(from);
    w1_ = view_width(to);
    u1_ = (c1_ - c0_).norm();
    const Scalar rho2 = rho_ * rho_;
    if (u1_ <= Scalar(1e-12) * std::max(w0_, w1_)) {
      mode_ = w0_ == w1_ ? Mode::constant : Mode::zoom;
      length_ = abs(log(w1_ / w0_)) / rho_;
      return;
    }
    mode_ = Mode::flight;
    const Scalar b0 = (w1_ * w1_ - w0_ * w0_ + rho2 * rho2 * u1_ * u1_) /
                      (Scalar(2) * w0_ * rho2 * u1_);
    const Scalar b1 = (w1_ * w1_ - w0_ * w0_ - rho2 * rho2 * u1_ * u1_) /
                      (Scalar(2) * w1_ * rho2 * u1_);
    r0_ = -asinh(b0);
    const Scalar r1 = -asinh(b1);
    length_ = (r1 - r0_) / rho_;
  }

  /// Path length in the metric above.
  Scalar length() const { return length_; }

  /// Center and width at parameter t in [0,1] (constant speed in s).
  std::pair<Vector2, Scalar> projected_at(Scalar t) const {
    using std::cosh;
    using std::pow;
    using std::sinh;
    using std::tanh;
    switch (mode_) {
      case Mode::constant:
        return {c0_ + (c1_ - c0_) * t, w0_};
      case Mode::zoom:
        return {c0_ + (c1_ - c0_) * t, w0_ * pow(w1_ / w0_, t)};
      case Mode::flight:
        break;
    }
    const Scalar s = length_ * t;
    const Scalar rho2 = rho_ * rho_;
    const Scalar u = w0_ / rho2 * (cosh(r0_) * tanh(rho_ * s + r0_) - sinh(r0_));
    const Scalar w = w0_ * cosh(r0_) / cosh(rho_ * s + r0_);
    return {c0_ + (c1_ - c0_) * (u / u1_), w};
  }

  MapViewT<Scalar> at(Scalar t) const {
    if (t <= Scalar(0)) return from_;
    if (t >= Scalar(1)) return to_;
    if (mode_ == Mode::constant && from_ == to_) return from_;
    const auto [center, width] = projected_at(t);
    return unproject(center, width);
  }

 private:
  enum class Mode { constant, zoom, flight };

  MapViewT<Scalar> from_, to_;
  Scalar rho_;
  Vector2 c0_, c1_;
  Scalar w0_ = 1, w1_ = 1, u1_ = 0, r0_ = 0, length_ = 0;
  Mode mode_ = Mode::constant;
};

template <typename Scalar>
MapViewT<Scalar> map_flight(const MapViewT<Scalar>& v0,
                            const MapViewT<Scalar>& v1, Scalar t) {
  return PanZoomPath<Scalar>(v0, v1).at(t);
}

}  // namespace scrolly

#endif  // SCROLLY_INTERPOLATE_HPP_
