// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors
//
// Independent reference computations for tests. Nothing here calls into the
// library's geometry or loss code.

#ifndef LSNET_TESTS_ORACLES_HPP_
#define LSNET_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "lsnet/types.hpp"

namespace lsnet::oracle {

class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

// Summed elementwise min over summed max.
inline double cross_iou_ref(const std::array<double, 4>& a,
                            const std::array<double, 4>& b) {
  long double lo = 0, hi = 0;
  for (int i = 0; i < 4; ++i) {
    lo += std::min(a[i], b[i]);
    hi += std::max(a[i], b[i]);
  }
  if (hi == 0) return 1.0;
  return static_cast<double>(lo / hi);
}

// Central difference of f along coordinate i.
inline double central_difference(const std::function<double(std::array<double, 4>)>& f,
                                 std::array<double, 4> x, int i, double h) {
  std::array<double, 4> up = x, down = x;
  up[i] += h;
  down[i] -= h;
  return (f(up) - f(down)) / (2.0 * h);
}

inline double shoelace(const std::vector<Point>& v) {
  long double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    s += static_cast<long double>(a.x) * b.y - static_cast<long double>(b.x) * a.y;
  }
  return static_cast<double>(s / 2);
}

inline BoundingBox tight_box(const std::vector<Point>& v) {
  BoundingBox b{v[0].x, v[0].y, v[0].x, v[0].y};
  for (const Point& p : v) {
    b.x_min = std::min(b.x_min, p.x);
    b.y_min = std::min(b.y_min, p.y);
    b.x_max = std::max(b.x_max, p.x);
    b.y_max = std::max(b.y_max, p.y);
  }
  return b;
}

inline double segment_distance(const Point& p, const Point& a, const Point& b) {
  const double vx = b.x - a.x, vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * vx), p.y - (a.y + t * vy));
}

inline double boundary_distance(const std::vector<Point>& v, const Point& p) {
  double best = INFINITY;
  for (std::size_t i = 0; i < v.size(); ++i) {
    best = std::min(best, segment_distance(p, v[i], v[(i + 1) % v.size()]));
  }
  return best;
}

// Arc-length position of boundary point q along v, measured from v[0] in
// vertex order.
inline double arc_position(const std::vector<Point>& v, const Point& q) {
  double acc = 0, best = INFINITY, at = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Point& a = v[k];
    const Point& b = v[(k + 1) % v.size()];
    const double d = segment_distance(q, a, b);
    if (d < best) {
      best = d;
      at = acc + std::hypot(q.x - a.x, q.y - a.y);
    }
    acc += std::hypot(b.x - a.x, b.y - a.y);
  }
  return at;
}

// Consecutive arc gaps of samples q along v, walking in v's vertex order.
inline std::vector<double> arc_gaps(const std::vector<Point>& v,
                                    const std::vector<Point>& q) {
  double perim = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Point& a = v[k];
    const Point& b = v[(k + 1) % v.size()];
    perim += std::hypot(b.x - a.x, b.y - a.y);
  }
  std::vector<double> gaps;
  const double start = arc_position(v, q[0]);
  double prev = 0;
  for (std::size_t k = 1; k < q.size(); ++k) {
    double a = arc_position(v, q[k]) - start;
    if (a < 0) a += perim;
    gaps.push_back(a - prev);
    prev = a;
  }
  gaps.push_back(perim - prev);
  return gaps;
}

// Winding number test; nonzero means inside for simple polygons.
inline bool inside_winding(const std::vector<Point>& v, const Point& p) {
  int wn = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    const double cross = (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y);
    if (a.y <= p.y) {
      if (b.y > p.y && cross > 0) ++wn;
    } else if (b.y <= p.y && cross < 0) {
      --wn;
    }
  }
  return wn != 0;
}

// Convex polygon from sorted random angles on an ellipse-ish radius profile.
inline std::vector<Point> random_convex(TestRng& rng, int n, double cx, double cy,
                                        double r) {
  std::vector<double> angles(n);
  for (double& a : angles) a = rng.uniform(0.0, 2.0 * std::numbers::pi);
  std::sort(angles.begin(), angles.end());
  const double ax = rng.uniform(0.5, 1.0), ay = rng.uniform(0.5, 1.0);
  std::vector<Point> out;
  for (double a : angles) out.push_back({cx + r * ax * std::cos(a), cy + r * ay * std::sin(a)});
  return out;
}

// Simple star polygon: angles sorted, radii random, so it never self-crosses.
inline std::vector<Point> random_star(TestRng& rng, int n, double cx, double cy,
                                      double r) {
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * (i + rng.uniform(0.1, 0.9)) / n;
    const double rad = r * rng.uniform(0.3, 1.0);
    out.push_back({cx + rad * std::cos(a), cy + rad * std::sin(a)});
  }
  return out;
}

}  // namespace lsnet::oracle

#endif  // LSNET_TESTS_ORACLES_HPP_
