// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "lsnet/landmarks.hpp"
#include "support/oracles.hpp"

namespace lsnet {
namespace {

using oracle::TestRng;

const PolygonContour kSquare({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
const PolygonContour kTriangle({{0, 0}, {4, 0}, {2, 3}});

void expect_point(const Point& p, double x, double y, double tol = 0.0) {
  EXPECT_NEAR(p.x, x, tol);
  EXPECT_NEAR(p.y, y, tol);
}

TEST(PolygonContour, RejectsDegenerates) {
  EXPECT_THROW(PolygonContour({{0, 0}, {1, 1}}), Error);
  EXPECT_THROW(PolygonContour({{0, 0}, {1, 1}, {2, 2}}), Error);
  EXPECT_THROW(PolygonContour({{0, 0}, {1, 0}, {0, NAN}}), Error);
  try {
    PolygonContour({{0, 0}, {3, 0}, {6, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateGeometry);
  }
}

TEST(PolygonContour, MeasuresMatchOracles) {
  TestRng rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto v = oracle::random_star(rng, rng.integer(3, 40), 10, 10, 8);
    const PolygonContour p(v);
    EXPECT_NEAR(p.signed_area(), oracle::shoelace(v), 1e-9);
    EXPECT_NEAR(p.area(), std::abs(oracle::shoelace(v)), 1e-9);
    const BoundingBox b = p.bounds(), o = oracle::tight_box(v);
    EXPECT_EQ(b, o);
  }
  EXPECT_EQ(kSquare.perimeter(), 8.0);
  EXPECT_EQ(kSquare.area(), 4.0);
}

TEST(ExtremePoints, MidpointOfExtremalRuns) {
  const ExtremeSet s = extreme_points(kSquare);
  expect_point(s.top, 1, 0);
  expect_point(s.left, 0, 1);
  expect_point(s.bottom, 1, 2);
  expect_point(s.right, 2, 1);
  EXPECT_EQ(extreme_box(s), (BoundingBox{0, 0, 2, 2}));

  const ExtremeSet t = extreme_points(kTriangle);
  expect_point(t.bottom, 2, 3);
  expect_point(t.top, 2, 0);
  EXPECT_EQ(extreme_box(t), (BoundingBox{0, 0, 4, 3}));
}

TEST(ExtremePoints, OrderIndependentOfWinding) {
  const PolygonContour reversed({{0, 2}, {2, 2}, {2, 0}, {0, 0}});
  const auto a = extreme_points(kSquare).ordered();
  const auto b = extreme_points(reversed).ordered();
  for (int i = 0; i < 4; ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(ExtremeBox, DegenerateSetGivesZeroAreaBox) {
  const ExtremeSet e{{3, 3}, {3, 3}, {3, 3}, {3, 3}};
  const BoundingBox b = extreme_box(e);
  EXPECT_EQ(b.area(), 0.0);
  EXPECT_EQ(b, (BoundingBox{3, 3, 3, 3}));
}

TEST(ExtremeBox, EqualsTightBoxOfRandomPolygons) {
  TestRng rng(77);
  for (int i = 0; i < 1000; ++i) {
    const auto v = i % 2 ? oracle::random_convex(rng, rng.integer(3, 30), 0, 0, 50)
                         : oracle::random_star(rng, rng.integer(3, 30), 5, -5, 20);
    EXPECT_EQ(extreme_box(extreme_points(PolygonContour(v))), oracle::tight_box(v));
  }
}

TEST(ExtremePoints, MultiPartUsesJointExtremes) {
  const std::vector<PolygonContour> parts{kSquare,
                                          PolygonContour({{5, 1}, {7, 1}, {6, 4}})};
  const ExtremeSet e = extreme_points(parts);
  EXPECT_EQ(extreme_box(e), (BoundingBox{0, 0, 7, 4}));
  expect_point(e.bottom, 6, 4);
}

TEST(ResampleContour, SquareAtFourPoints) {
  const LandmarkSet s = resample_contour(kSquare, 4);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s.role(), LandmarkRole::kContour);
  expect_point(s.landmarks()[0], 1, 0, 1e-12);
  expect_point(s.landmarks()[1], 2, 1, 1e-12);
  expect_point(s.landmarks()[2], 1, 2, 1e-12);
  expect_point(s.landmarks()[3], 0, 1, 1e-12);
  expect_point(s.anchor(), 1, 1);
}

TEST(ResampleContour, RegularPolygonFromTopVertexRecoversVertices) {
  for (int n : {3, 5, 8, 12}) {
    std::vector<Point> v;
    for (int k = 0; k < n; ++k) {
      // Clockwise on screen starting at the top (minimal y).
      const double a = -std::numbers::pi / 2 + 2 * std::numbers::pi * k / n;
      v.push_back({10 * std::cos(a), 10 * std::sin(a)});
    }
    const LandmarkSet s = resample_contour(PolygonContour(v), n);
    for (int k = 0; k < n; ++k) {
      expect_point(s.landmarks()[k], v[k].x, v[k].y, 1e-9);
    }
  }
}

TEST(ResampleContour, CircleWithinOneVertexSpacing) {
  std::vector<Point> v;
  const double r = 100;
  for (int k = 0; k < 360; ++k) {
    const double a = 2 * std::numbers::pi * k / 360;
    v.push_back({r * std::cos(a), r * std::sin(a)});
  }
  const double spacing = 2 * r * std::sin(std::numbers::pi / 360);
  const LandmarkSet s = resample_contour(PolygonContour(v), 36);
  for (int k = 0; k < 36; ++k) {
    const double a = -std::numbers::pi / 2 + 2 * std::numbers::pi * k / 36;
    const Point ideal{r * std::cos(a), r * std::sin(a)};
    EXPECT_LE(distance(s.landmarks()[k], ideal), spacing);
  }
}

TEST(ResampleContour, PointsOnBoundaryWithEqualArcGaps) {
  TestRng rng(99);
  for (int i = 0; i < 300; ++i) {
    const auto v = i % 3 ? oracle::random_convex(rng, rng.integer(3, 25), 40, 40, 30)
                         : oracle::random_star(rng, rng.integer(3, 25), 40, 40, 30);
    const PolygonContour p(v);
    const std::size_t n = static_cast<std::size_t>(rng.integer(3, 72));
    const LandmarkSet s = resample_contour(p, n);
    ASSERT_EQ(s.size(), n);
    EXPECT_EQ(s.landmarks()[0], extreme_points(p).top);
    for (const Point& q : s.landmarks()) {
      EXPECT_LT(oracle::boundary_distance(v, q), 1e-9);
    }
    // Walk the boundary clockwise on screen, as the sampler does.
    std::vector<Point> walk = v;
    if (oracle::shoelace(walk) < 0) std::reverse(walk.begin(), walk.end());
    const double perim = p.perimeter();
    for (double gap : oracle::arc_gaps(walk, s.landmarks())) {
      EXPECT_NEAR(gap, perim / n, 1e-9);
    }
  }
}

TEST(ResampleContour, RejectsTooFewSamples) {
  EXPECT_THROW(resample_contour(kSquare, 2), Error);
}

TEST(KpsBox, VisibleOnly) {
  KeypointInstance k;
  k.points.assign(kKeypointCount, Keypoint{100, 100, 0});
  k.points[0] = {1, 2, 2};
  k.points[4] = {3, 5, 1};
  k.points[9] = {0, 4, 2};
  EXPECT_EQ(kps_box(k), (BoundingBox{0, 2, 3, 5}));
  k.points[10] = {-50, 300, 0};  // invisible: no effect
  EXPECT_EQ(kps_box(k), (BoundingBox{0, 2, 3, 5}));
  std::reverse(k.points.begin(), k.points.end());
  EXPECT_EQ(kps_box(k), (BoundingBox{0, 2, 3, 5}));

  KeypointInstance one;
  one.points.assign(kKeypointCount, Keypoint{});
  one.points[3] = {7, 8, 2};
  EXPECT_EQ(kps_box(one), (BoundingBox{7, 8, 7, 8}));

  KeypointInstance none;
  none.points.assign(kKeypointCount, Keypoint{});
  EXPECT_THROW(kps_box(none), Error);
}

TEST(Rasterize, UnitSquareFillsEveryCell) {
  const PolygonContour unit({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const RasterMask m = rasterize(unit, 8);
  EXPECT_EQ(m.width(), 8);
  EXPECT_EQ(m.height(), 8);
  EXPECT_EQ(m.count(), 64u);
  EXPECT_DOUBLE_EQ(m.covered_area(), 1.0);
}

TEST(Rasterize, DisjointPartsUnion) {
  const std::vector<PolygonContour> parts{
      PolygonContour({{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
      PolygonContour({{3, 0}, {4, 0}, {4, 1}, {3, 1}})};
  const RasterMask both = rasterize(parts, 64);
  const RasterGrid g = both.grid();
  const RasterMask a = rasterize(std::span(parts.data(), 1), g);
  const RasterMask b = rasterize(std::span(parts.data() + 1, 1), g);
  EXPECT_EQ(both.count(), a.count() + b.count());
  for (int r = 0; r < g.height; ++r) {
    for (int c = 0; c < g.width; ++c) {
      EXPECT_EQ(both.at(c, r), a.at(c, r) || b.at(c, r));
    }
  }
}

TEST(Rasterize, TriangleAreaWithinOnePercent) {
  const RasterMask m = rasterize(kTriangle, 256);
  EXPECT_NEAR(m.covered_area(), kTriangle.area(), 0.01 * kTriangle.area());
}

TEST(Rasterize, CellsMatchWindingOracle) {
  TestRng rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto v = oracle::random_star(rng, rng.integer(5, 20), 0, 0, 10);
    const std::vector<PolygonContour> parts{PolygonContour(v)};
    const RasterMask m = rasterize(parts, 97);
    const RasterGrid& g = m.grid();
    int mismatches = 0;
    for (int r = 0; r < g.height; ++r) {
      for (int c = 0; c < g.width; ++c) {
        const Point center{g.origin.x + (c + 0.5) * g.cell, g.origin.y + (r + 0.5) * g.cell};
        if (oracle::boundary_distance(v, center) < 1e-9) continue;
        mismatches += m.at(c, r) != oracle::inside_winding(v, center);
      }
    }
    EXPECT_EQ(mismatches, 0);
  }
}

TEST(Rasterize, AreaConvergesWithResolution) {
  TestRng rng(12);
  double err_lo = 0, err_hi = 0;
  for (int i = 0; i < 30; ++i) {
    const PolygonContour p(oracle::random_convex(rng, 12, 0, 0, 25));
    err_lo += std::abs(rasterize(p, 64).covered_area() - p.area()) / p.area();
    err_hi += std::abs(rasterize(p, 512).covered_area() - p.area()) / p.area();
  }
  EXPECT_LT(err_hi, err_lo / 3.0);
}

TEST(Rasterize, RandomConvexAreaAt512WithinOnePercent) {
  TestRng rng(321);
  for (int i = 0; i < 100; ++i) {
    const PolygonContour p(oracle::random_convex(rng, rng.integer(3, 30), 100, 100,
                                                 rng.uniform(5, 200)));
    EXPECT_NEAR(rasterize(p, 512).covered_area(), p.area(), 0.01 * p.area());
  }
}

TEST(MaskIou, Examples) {
  const std::vector<PolygonContour> left{PolygonContour({{0, 0}, {2, 0}, {2, 2}, {0, 2}})};
  const std::vector<PolygonContour> shifted{PolygonContour({{1, 0}, {3, 0}, {3, 2}, {1, 2}})};
  const std::vector<PolygonContour> far{PolygonContour({{5, 0}, {6, 0}, {6, 1}, {5, 1}})};
  std::vector<PolygonContour> all = left;
  all.insert(all.end(), shifted.begin(), shifted.end());
  all.insert(all.end(), far.begin(), far.end());
  const RasterGrid g = grid_for(all, 120);
  const RasterMask a = rasterize(left, g);
  EXPECT_EQ(mask_iou(a, a), 1.0);
  EXPECT_EQ(mask_iou(a, rasterize(far, g)), 0.0);
  EXPECT_NEAR(mask_iou(a, rasterize(shifted, g)), 1.0 / 3.0, 1e-12);
  EXPECT_THROW(mask_iou(a, rasterize(left, 64)), Error);
}

TEST(GridFor, CoversBoundsWithSquareCells) {
  const RasterGrid g = grid_for(std::vector<PolygonContour>{kTriangle}, 100);
  EXPECT_EQ(g.width, 100);
  EXPECT_EQ(g.height, 75);
  EXPECT_DOUBLE_EQ(g.cell, 0.04);
  EXPECT_THROW(grid_for(std::vector<PolygonContour>{kTriangle}, 4), Error);
}

TEST(Anchor, ExtremeBoxCenter) {
  EXPECT_EQ(anchor_from_polygon(kSquare), (Point{1, 1}));
  EXPECT_EQ(anchor_from_polygon(kTriangle), (Point{2, 1.5}));
  const PolygonContour ell({{0, 0}, {1, 0}, {1, 3}, {3, 3}, {3, 4}, {0, 4}});
  const Point a = anchor_from_polygon(ell);
  EXPECT_EQ(a, (Point{1.5, 2}));
  EXPECT_FALSE(oracle::inside_winding(ell.vertices(), a));
}

TEST(IsSimple, DetectsSelfIntersection) {
  const std::vector<Point> bowtie{{0, 0}, {2, 2}, {2, 0}, {0, 2}};
  EXPECT_FALSE(is_simple(bowtie));
  EXPECT_TRUE(is_simple(kSquare.vertices()));
}

TEST(RayCrossings, ConvexVersusSpiral) {
  EXPECT_EQ(max_ray_crossings(std::vector<PolygonContour>{kSquare}, {1, 1}), 1);
  // C-shape around the anchor: some ray crosses three edges.
  const PolygonContour c({{0, 0}, {6, 0}, {6, 1}, {1, 1}, {1, 5}, {6, 5}, {6, 6}, {0, 6}});
  EXPECT_GE(max_ray_crossings(std::vector<PolygonContour>{c}, {3, 3}), 2);
  const PolygonContour u({{0, 0}, {6, 0}, {6, 6}, {4, 6}, {4, 2}, {2, 2}, {2, 6}, {0, 6}});
  EXPECT_GE(max_ray_crossings(std::vector<PolygonContour>{u}, {3, 1}), 3);
}

TEST(DistanceToBoundary, MatchesOracle) {
  TestRng rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto v = oracle::random_star(rng, 9, 0, 0, 5);
    const Point p{rng.uniform(-6, 6), rng.uniform(-6, 6)};
    EXPECT_NEAR(distance_to_boundary(PolygonContour(v), p),
                oracle::boundary_distance(v, p), 1e-12);
  }
}

}  // namespace
}  // namespace lsnet
