// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#include "lsnet/landmarks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

namespace lsnet {

namespace {

double shoelace(std::span<const Point> v) {
  double twice = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

// Cumulative arc length at each vertex; cum[n] is the perimeter.
std::vector<double> cumulative_lengths(std::span<const Point> v) {
  const std::size_t n = v.size();
  std::vector<double> cum(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    cum[i + 1] = cum[i] + distance(v[i], v[(i + 1) % n]);
  }
  return cum;
}

Point lerp(const Point& a, const Point& b, double t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

// Point at arc length s (0 <= s < perimeter) along the closed polyline.
Point point_at(std::span<const Point> v, std::span<const double> cum,
               double s) {
  const std::size_t n = v.size();
  auto it = std::upper_bound(cum.begin(), cum.end(), s);
  std::size_t edge = static_cast<std::size_t>(it - cum.begin());
  edge = edge == 0 ? 0 : edge - 1;
  if (edge >= n) edge = n - 1;
  const double len = cum[edge + 1] - cum[edge];
  const double t = len > 0.0 ? std::clamp((s - cum[edge]) / len, 0.0, 1.0) : 0.0;
  return lerp(v[edge], v[(edge + 1) % n], t);
}

// Midpoint of the longest run of consecutive vertices minimising key(p).
// Ties between equally long runs go to the run that starts earliest along
// the vertex order.
Point extremal_run_midpoint(std::span<const Point> v,
                            const std::function<double(const Point&)>& key) {
  const std::size_t n = v.size();
  double best_value = std::numeric_limits<double>::infinity();
  for (const Point& p : v) best_value = std::min(best_value, key(p));

  std::vector<double> cum = cumulative_lengths(v);
  auto on_run = [&](std::size_t i) { return key(v[i % n]) == best_value; };

  double best_len = -1.0;
  double best_start_arc = std::numeric_limits<double>::infinity();
  Point best_mid = v[0];
  for (std::size_t i = 0; i < n; ++i) {
    if (!on_run(i) || on_run(i + n - 1)) continue;  // not a run start
    double len = 0.0;
    std::size_t j = i;
    while (on_run(j + 1) && (j + 1) % n != i) {
      len += distance(v[j % n], v[(j + 1) % n]);
      ++j;
    }
    const double start_arc = cum[i];
    if (len > best_len || (len == best_len && start_arc < best_start_arc)) {
      best_len = len;
      best_start_arc = start_arc;
      // Walk half the run length from vertex i.
      double remaining = 0.5 * len;
      std::size_t k = i;
      Point mid = v[i];
      while (true) {
        const Point& a = v[k % n];
        const Point& b = v[(k + 1) % n];
        const double seg = distance(a, b);
        if (k == j || remaining <= seg) {
          mid = (k == j || seg == 0.0) ? a : lerp(a, b, remaining / seg);
          break;
        }
        remaining -= seg;
        ++k;
      }
      best_mid = mid;
    }
  }
  return best_mid;
}

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
  const double vx = b.x - a.x;
  const double vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = std::clamp(((p.x - a.x) * vx + (p.y - a.y) * vy) / len2, 0.0, 1.0);
  }
  return distance(p, {a.x + t * vx, a.y + t * vy});
}

double orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_touch(const Point& p1, const Point& p2, const Point& q1,
                    const Point& q2) {
  const double d1 = orient(q1, q2, p1);
  const double d2 = orient(q1, q2, p2);
  const double d3 = orient(p1, p2, q1);
  const double d4 = orient(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

void fill_part(const PolygonContour& part, RasterMask& mask,
               std::vector<double>& xs) {
  const RasterGrid& g = mask.grid();
  const auto& v = part.vertices();
  const std::size_t n = v.size();
  for (int row = 0; row < g.height; ++row) {
    const double yc = g.origin.y + (row + 0.5) * g.cell;
    xs.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = v[i];
      const Point& b = v[(i + 1) % n];
      // Half-open in y: an edge spans [min y, max y).
      if ((a.y <= yc) != (b.y <= yc)) {
        xs.push_back(a.x + (yc - a.y) * (b.x - a.x) / (b.y - a.y));
      }
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      // Cells whose centers fall in [xs[k], xs[k+1]).
      const double lo = (xs[k] - g.origin.x) / g.cell - 0.5;
      const double hi = (xs[k + 1] - g.origin.x) / g.cell - 0.5;
      const int first = std::max(0, static_cast<int>(std::ceil(lo)));
      const int last = std::min(g.width, static_cast<int>(std::ceil(hi)));
      for (int col = first; col < last; ++col) mask.set(col, row);
    }
  }
}

}  // namespace

PolygonContour::PolygonContour(std::vector<Point> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    fail(ErrorCode::kDegenerateGeometry, "polygon needs at least 3 vertices");
  }
  for (const Point& p : vertices_) {
    if (!is_finite(p)) {
      fail(ErrorCode::kDegenerateGeometry, "polygon vertex is not finite");
    }
  }
  signed_area_ = shoelace(vertices_);
  if (signed_area_ == 0.0 || !std::isfinite(signed_area_)) {
    fail(ErrorCode::kDegenerateGeometry, "polygon has zero area");
  }
}

double PolygonContour::area() const { return std::abs(signed_area_); }

double PolygonContour::perimeter() const {
  return cumulative_lengths(vertices_).back();
}

BoundingBox PolygonContour::bounds() const {
  BoundingBox b{vertices_[0].x, vertices_[0].y, vertices_[0].x, vertices_[0].y};
  for (const Point& p : vertices_) {
    b.x_min = std::min(b.x_min, p.x);
    b.y_min = std::min(b.y_min, p.y);
    b.x_max = std::max(b.x_max, p.x);
    b.y_max = std::max(b.y_max, p.y);
  }
  return b;
}

void KeypointInstance::validate() const {
  require(points.size() == kKeypointCount,
          "keypoint instance needs exactly 17 keypoints");
  require(std::isfinite(scale) && scale > 0.0,
          "keypoint instance scale must be positive");
  for (const Keypoint& k : points) {
    require(std::isfinite(k.x) && std::isfinite(k.y),
            "keypoint coordinates must be finite");
    require(k.visibility >= 0 && k.visibility <= 2,
            "keypoint visibility must be 0, 1 or 2");
  }
}

RasterMask::RasterMask(const RasterGrid& grid) : grid_(grid) {
  require(grid.width > 0 && grid.height > 0, "raster grid must be non-empty");
  require(grid.cell > 0.0 && std::isfinite(grid.cell),
          "raster cell size must be positive");
  bits_.assign(static_cast<std::size_t>(grid.width) * grid.height, 0);
}

std::size_t RasterMask::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

ExtremeSet extreme_points(const PolygonContour& poly) {
  std::span<const Point> v = poly.vertices();
  return {
      extremal_run_midpoint(v, [](const Point& p) { return p.y; }),
      extremal_run_midpoint(v, [](const Point& p) { return p.x; }),
      extremal_run_midpoint(v, [](const Point& p) { return -p.y; }),
      extremal_run_midpoint(v, [](const Point& p) { return -p.x; }),
  };
}

ExtremeSet extreme_points(std::span<const PolygonContour> parts) {
  if (parts.empty()) {
    fail(ErrorCode::kDegenerateGeometry, "instance has no polygon parts");
  }
  ExtremeSet best = extreme_points(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const ExtremeSet e = extreme_points(parts[i]);
    if (e.top.y < best.top.y) best.top = e.top;
    if (e.left.x < best.left.x) best.left = e.left;
    if (e.bottom.y > best.bottom.y) best.bottom = e.bottom;
    if (e.right.x > best.right.x) best.right = e.right;
  }
  return best;
}

BoundingBox extreme_box(const ExtremeSet& e) {
  return {e.left.x, e.top.y, e.right.x, e.bottom.y};
}

LandmarkSet resample_contour(const PolygonContour& poly, std::size_t n) {
  require(n >= 3, "contour resampling needs n >= 3");
  const ExtremeSet ext = extreme_points(poly);

  std::vector<Point> v = poly.vertices();
  if (poly.signed_area() < 0.0) std::reverse(v.begin(), v.end());
  const std::vector<double> cum = cumulative_lengths(v);
  const double perimeter = cum.back();
  const std::size_t count = v.size();

  // Arc position of the top extreme point: a vertex, or inside a
  // horizontal edge lying on the minimal y.
  double start = -1.0;
  for (std::size_t i = 0; i < count && start < 0.0; ++i) {
    if (v[i] == ext.top) start = cum[i];
  }
  for (std::size_t i = 0; i < count && start < 0.0; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % count];
    if (a.y == ext.top.y && b.y == ext.top.y &&
        std::min(a.x, b.x) <= ext.top.x && ext.top.x <= std::max(a.x, b.x)) {
      start = cum[i] + std::abs(ext.top.x - a.x);
    }
  }
  if (start < 0.0) start = 0.0;

  std::vector<Point> samples;
  samples.reserve(n);
  const double spacing = perimeter / static_cast<double>(n);
  samples.push_back(ext.top);
  for (std::size_t k = 1; k < n; ++k) {
    double s = start + static_cast<double>(k) * spacing;
    if (s >= perimeter) s -= perimeter;
    samples.push_back(point_at(v, cum, s));
  }
  return LandmarkSet(extreme_box(ext).center(), std::move(samples),
                     LandmarkRole::kContour);
}

BoundingBox kps_box(const KeypointInstance& k) {
  bool any = false;
  BoundingBox b;
  for (const Keypoint& p : k.points) {
    if (p.visibility <= 0) continue;
    require(std::isfinite(p.x) && std::isfinite(p.y),
            "keypoint coordinates must be finite");
    if (!any) {
      b = {p.x, p.y, p.x, p.y};
      any = true;
      continue;
    }
    b.x_min = std::min(b.x_min, p.x);
    b.y_min = std::min(b.y_min, p.y);
    b.x_max = std::max(b.x_max, p.x);
    b.y_max = std::max(b.y_max, p.y);
  }
  require(any, "kps_box needs at least one visible keypoint");
  return b;
}

BoundingBox bounds_of(std::span<const PolygonContour> parts) {
  if (parts.empty()) {
    fail(ErrorCode::kDegenerateGeometry, "instance has no polygon parts");
  }
  BoundingBox b = parts[0].bounds();
  for (const PolygonContour& p : parts.subspan(1)) {
    const BoundingBox pb = p.bounds();
    b.x_min = std::min(b.x_min, pb.x_min);
    b.y_min = std::min(b.y_min, pb.y_min);
    b.x_max = std::max(b.x_max, pb.x_max);
    b.y_max = std::max(b.y_max, pb.y_max);
  }
  return b;
}

RasterGrid grid_for(std::span<const PolygonContour> parts, int max_dim) {
  require(max_dim >= 8, "raster max_dim must be at least 8");
  const BoundingBox b = bounds_of(parts);
  const double longest = std::max(b.width(), b.height());
  if (!(longest > 0.0)) {
    fail(ErrorCode::kDegenerateGeometry, "instance bounds are empty");
  }
  RasterGrid g;
  g.cell = longest / max_dim;
  g.origin = {b.x_min, b.y_min};
  g.width = std::clamp(static_cast<int>(std::ceil(b.width() / g.cell)), 1, max_dim);
  g.height = std::clamp(static_cast<int>(std::ceil(b.height() / g.cell)), 1, max_dim);
  return g;
}

RasterMask rasterize(std::span<const PolygonContour> parts,
                     const RasterGrid& grid) {
  RasterMask mask(grid);
  std::vector<double> xs;
  for (const PolygonContour& part : parts) fill_part(part, mask, xs);
  return mask;
}

RasterMask rasterize(std::span<const PolygonContour> parts, int max_dim) {
  return rasterize(parts, grid_for(parts, max_dim));
}

RasterMask rasterize(const PolygonContour& poly, int max_dim) {
  return rasterize(std::span<const PolygonContour>(&poly, 1), max_dim);
}

double mask_iou(const RasterMask& a, const RasterMask& b) {
  require(a.grid() == b.grid(), "mask_iou needs masks on the same grid");
  std::size_t inter = 0;
  std::size_t uni = 0;
  const auto ab = a.bits();
  const auto bb = b.bits();
  for (std::size_t i = 0; i < ab.size(); ++i) {
    inter += ab[i] & bb[i];
    uni += ab[i] | bb[i];
  }
  if (uni == 0) return 1.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

AnchorPoint anchor_from_polygon(const PolygonContour& poly) {
  return extreme_box(extreme_points(poly)).center();
}

AnchorPoint anchor_from_polygon(std::span<const PolygonContour> parts) {
  return extreme_box(extreme_points(parts)).center();
}

double distance_to_boundary(const PolygonContour& poly, const Point& p) {
  const auto& v = poly.vertices();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    best = std::min(best, point_segment_distance(p, v[i], v[(i + 1) % v.size()]));
  }
  return best;
}

bool is_simple(std::span<const Point> v) {
  const std::size_t n = v.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_touch(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) {
        return false;
      }
    }
  }
  return true;
}

int max_ray_crossings(std::span<const PolygonContour> parts,
                      const Point& origin, int rays) {
  require(rays > 0, "ray count must be positive");
  int best = 0;
  for (int k = 0; k < rays; ++k) {
    // Half-step offset keeps rays off axis-aligned vertices.
    const double theta = 2.0 * std::numbers::pi * (k + 0.5) / rays;
    const double dx = std::cos(theta);
    const double dy = std::sin(theta);
    int crossings = 0;
    for (const PolygonContour& part : parts) {
      const auto& v = part.vertices();
      for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        const double ex = b.x - a.x;
        const double ey = b.y - a.y;
        const double denom = dx * ey - dy * ex;
        if (denom == 0.0) continue;
        const double wx = a.x - origin.x;
        const double wy = a.y - origin.y;
        const double t = (wx * ey - wy * ex) / denom;  // along the ray
        const double u = (wx * dy - wy * dx) / denom;  // along the edge
        if (t > 0.0 && u >= 0.0 && u < 1.0) ++crossings;
      }
    }
    best = std::max(best, crossings);
  }
  return best;
}

}  // namespace lsnet
