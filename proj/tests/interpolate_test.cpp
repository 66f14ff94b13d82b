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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "oracles.hpp"
#include "scrolly/interpolate.hpp"

namespace scrolly {
namespace {

constexpr double kTol = 1e-9;

Eigen::Quaterniond random_rotation(gen::Generator& g) {
  Eigen::Vector4d v(g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1));
  Eigen::Quaterniond q;
  q.coeffs() = v.normalized();
  return q;
}

TEST(SlerpTest, HalfTurnAboutZ) {
  const Eigen::Quaterniond q0 = Eigen::Quaterniond::Identity();
  const Eigen::Quaterniond q1(Eigen::AngleAxisd(std::numbers::pi, Eigen::Vector3d::UnitZ()));
  const auto half = slerp_shortest(q0, q1, 0.5);
  EXPECT_NEAR(half.w(), std::sqrt(0.5), kTol);
  EXPECT_NEAR(half.x(), 0.0, kTol);
  EXPECT_NEAR(half.y(), 0.0, kTol);
  EXPECT_NEAR(half.z(), std::sqrt(0.5), kTol);
}

TEST(SlerpTest, EndpointsNormAndShortestArc) {
  gen::Generator g(1);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_rotation(g);
    const auto b = random_rotation(g);
    EXPECT_EQ(slerp_shortest(a, b, 0.0).coeffs(), a.coeffs());
    EXPECT_EQ(slerp_shortest(a, b, 1.0).coeffs(), b.coeffs());
    const double t = g.uniform(0, 1);
    const auto q = slerp_shortest(a, b, t);
    EXPECT_NEAR(q.norm(), 1.0, kTol);
    // Angle travelled is t times the shortest angle between a and b.
    const double total = a.angularDistance(b);
    EXPECT_NEAR(a.angularDistance(q), t * total, 1e-7);
    EXPECT_NEAR(q.angularDistance(b), (1 - t) * total, 1e-7);
  }
}

TEST(SlerpTest, NearlyEqualInputsStayFinite) {
  const Eigen::Quaterniond a(Eigen::AngleAxisd(1e-9, Eigen::Vector3d::UnitX()));
  const auto q = slerp_shortest(Eigen::Quaterniond::Identity(), a, 0.3);
  EXPECT_TRUE(q.coeffs().allFinite());
  EXPECT_NEAR(q.norm(), 1.0, kTol);
  // Antipodal representation of the same rotation blends to itself.
  Eigen::Quaterniond neg;
  neg.coeffs() = -a.coeffs();
  EXPECT_NEAR(slerp_shortest(a, neg, 0.5).angularDistance(a), 0.0, 1e-7);
}

TEST(CameraTest, EndpointsAndLinearParts) {
  Camera c0, c1;
  c0.position = {0, 0, 10};
  c1.position = {4, -2, 0};
  c1.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(1.0, Eigen::Vector3d::UnitY()));
  c0.zoom = 1;
  c1.zoom = 3;
  EXPECT_EQ(interpolate_camera(c0, c1, 0.0), c0);
  EXPECT_EQ(interpolate_camera(c0, c1, 1.0), c1);
  const auto mid = interpolate_camera(c0, c1, 0.25);
  EXPECT_TRUE(mid.position.isApprox(Eigen::Vector3d(1, -0.5, 7.5)));
  EXPECT_DOUBLE_EQ(mid.zoom, 1.5);
  EXPECT_NEAR(mid.rotation.angularDistance(c0.rotation), 0.25, kTol);
}

TEST(SliceIndexTest, RoundHalfUpTable) {
  const std::int64_t expected[] = {10, 11, 11, 12, 12, 13, 13, 14, 14, 15, 15};
  for (int i = 0; i <= 10; ++i) {
    EXPECT_EQ(interpolate_index(10, 15, i / 10.0), expected[i]) << "t=" << i / 10.0;
  }
}

TEST(SliceIndexTest, StaysWithinEndpoints) {
  gen::Generator g(2);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t a = g.uniform_int(-1000, 1000), b = g.uniform_int(-1000, 1000);
    const double t = g.uniform(-0.2, 1.2);
    const auto v = interpolate_index(a, b, t);
    EXPECT_GE(v, std::min(a, b));
    EXPECT_LE(v, std::max(a, b));
  }
  EXPECT_EQ(interpolate_index(15, 10, 0.1), 15);  // 14.5 rounds up
  EXPECT_EQ(interpolate_index(7, 7, 0.5), 7);
}

TEST(MercatorTest, ProjectionRoundTrip) {
  gen::Generator g(3);
  for (int i = 0; i < 1000; ++i) {
    const MapView v{g.uniform(-85, 85), g.uniform(-180, 180), g.uniform(0, 20)};
    const auto back = unproject(project_center(v), view_width(v));
    EXPECT_NEAR(back.lat, v.lat, 1e-9);
    EXPECT_NEAR(back.lon, v.lon, 1e-9);
    EXPECT_NEAR(back.zoom_level, v.zoom_level, 1e-9);
  }
  const auto pole = project_center(MapView{90, 0, 1});
  EXPECT_TRUE(pole.allFinite());
  EXPECT_NEAR(pole.y(), 0.0, 1e-12);
}

MapView random_view(gen::Generator& g) {
  return {g.uniform(-70, 70), g.uniform(-170, 170), g.uniform(1, 16)};
}

TEST(MapFlightTest, EndpointsAreExact) {
  gen::Generator g(4);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_view(g), b = random_view(g);
    EXPECT_EQ(map_flight(a, b, 0.0), a);
    EXPECT_EQ(map_flight(a, b, 1.0), b);
    const auto [c0, w0] = PanZoomPath<double>(a, b).projected_at(0.0);
    const auto [c1, w1] = PanZoomPath<double>(a, b).projected_at(1.0);
    EXPECT_LE((c0 - project_center(a)).norm(), kTol);
    EXPECT_LE((c1 - project_center(b)).norm(), kTol);
    EXPECT_NEAR(w0 / view_width(a), 1.0, kTol);
    EXPECT_NEAR(w1 / view_width(b), 1.0, kTol);
  }
}

TEST(MapFlightTest, LengthIsTheHyperbolicDistance) {
  gen::Generator g(5);
  const double rho = std::numbers::sqrt2;
  for (int i = 0; i < 200; ++i) {
    const auto a = random_view(g), b = random_view(g);
    const PanZoomPath<double> path(a, b);
    const double u1 = (project_center(b) - project_center(a)).norm();
    const double expected = oracle::hyperbolic_length(u1, view_width(a), view_width(b), rho);
    EXPECT_NEAR(path.length(), expected, 1e-9 * std::max(1.0, expected));
    const double numeric = oracle::arc_length(
        [&](double t) { return path.projected_at(t); }, rho, 4000);
    EXPECT_NEAR(numeric / expected, 1.0, 1e-5);
  }
}

TEST(MapFlightTest, ConstantSpeed) {
  const MapView a{51.5, -0.1, 12}, b{40.7, -74.0, 12};
  const PanZoomPath<double> path(a, b);
  const double rho = std::numbers::sqrt2;
  const double total = path.length();
  for (int k = 0; k < 10; ++k) {
    const double piece = oracle::arc_length(
        [&](double t) { return path.projected_at((k + t) / 10.0); }, rho, 2000);
    EXPECT_NEAR(piece, total / 10.0, 1e-5 * total);
  }
}

TEST(MapFlightTest, ReversalSymmetry) {
  gen::Generator g(6);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_view(g), b = random_view(g);
    const PanZoomPath<double> fwd(a, b), back(b, a);
    for (double t : {0.1, 0.25, 0.5, 0.8, 0.97}) {
      const auto [cf, wf] = fwd.projected_at(t);
      const auto [cb, wb] = back.projected_at(1 - t);
      EXPECT_LE((cf - cb).norm(), kTol);
      EXPECT_LE(std::abs(wf - wb), kTol * std::max(wf, 1e-3));
    }
  }
}

TEST(MapFlightTest, DistantEqualZoomDipsAtMidpoint) {
  const MapView a{48.85, 2.35, 10}, b{35.68, 139.69, 10};
  const auto mid = map_flight(a, b, 0.5);
  EXPECT_LT(mid.zoom_level, a.zoom_level - 1.0);
  // The dip is the lowest point and the path is symmetric about it.
  for (double t : {0.1, 0.3, 0.45, 0.55, 0.7, 0.9}) {
    EXPECT_GT(map_flight(a, b, t).zoom_level, mid.zoom_level);
  }
  EXPECT_NEAR(map_flight(a, b, 0.3).zoom_level, map_flight(a, b, 0.7).zoom_level, kTol);
}

TEST(MapFlightTest, DegenerateCases) {
  const MapView a{10, 20, 5};
  EXPECT_EQ(map_flight(a, a, 0.4), a);
  EXPECT_NEAR(PanZoomPath<double>(a, a).length(), 0.0, 0.0);
  const MapView zoomed{10, 20, 9};
  const auto mid = map_flight(a, zoomed, 0.5);
  EXPECT_NEAR(mid.zoom_level, 7.0, kTol);
  EXPECT_NEAR(mid.lat, 10.0, kTol);
  EXPECT_NEAR(mid.lon, 20.0, kTol);
  EXPECT_NEAR(PanZoomPath<double>(a, zoomed).length(), 4 * std::log(2.0) / std::numbers::sqrt2,
              kTol);
}

TEST(MapFlightTest, ExtremeLatitudesStayFinite) {
  const MapView north{89.9, 0, 3}, south{-89.9, 100, 4};
  for (double t = 0; t <= 1.0; t += 0.125) {
    const auto v = map_flight(north, south, t);
    EXPECT_TRUE(std::isfinite(v.lat) && std::isfinite(v.lon) && std::isfinite(v.zoom_level));
    EXPECT_LE(std::abs(v.lat), 90.0);
  }
}

TEST(TemplatesTest, FloatScalarCompiles) {
  const MapViewT<float> a{0.f, 0.f, 2.f}, b{10.f, 10.f, 3.f};
  const auto v = map_flight(a, b, 0.5f);
  EXPECT_TRUE(std::isfinite(v.zoom_level));
  CameraT<float> c0, c1;
  c1.zoom = 2.f;
  EXPECT_FLOAT_EQ(interpolate_camera(c0, c1, 0.5f).zoom, 1.5f);
}

}  // namespace
}  // namespace scrolly
