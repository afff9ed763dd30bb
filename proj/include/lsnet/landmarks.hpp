// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#ifndef LSNET_LANDMARKS_HPP_
#define LSNET_LANDMARKS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lsnet/cross_coord.hpp"
#include "lsnet/types.hpp"

namespace lsnet {

// A closed planar polygon describing one simply-connected part of an
// instance boundary. The closing edge (last -> first) is implicit.
class PolygonContour {
 public:
  // Throws kDegenerateGeometry for < 3 vertices, non-finite coordinates, or
  // zero signed area.
  explicit PolygonContour(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  // Shoelace area on raw image coordinates. Positive means clockwise as
  // seen on screen (y down).
  double signed_area() const { return signed_area_; }
  double area() const;
  double perimeter() const;
  BoundingBox bounds() const;

 private:
  std::vector<Point> vertices_;
  double signed_area_ = 0.0;
};

// Multi-part instance: each part handled independently, holes dropped.
using PolygonParts = std::vector<PolygonContour>;

struct ExtremeSet {
  Point top;
  Point left;
  Point bottom;
  Point right;

  std::array<Point, 4> ordered() const { return {top, left, bottom, right}; }
};

// Per-keypoint record with a visibility flag in {0, 1, 2}.
struct Keypoint {
  double x = 0.0;
  double y = 0.0;
  int visibility = 0;

  friend bool operator==(const Keypoint&, const Keypoint&) = default;
};

struct KeypointInstance {
  std::vector<Keypoint> points;  // exactly kKeypointCount entries
  double scale = 1.0;

  void validate() const;
};

// Cell geometry shared by masks that are compared against each other.
struct RasterGrid {
  int width = 0;
  int height = 0;
  Point origin;      // top-left corner of cell (0, 0)
  double cell = 1.0; // side length of a square cell, pixels

  friend bool operator==(const RasterGrid&, const RasterGrid&) = default;
};

class RasterMask {
 public:
  explicit RasterMask(const RasterGrid& grid);

  const RasterGrid& grid() const { return grid_; }
  int width() const { return grid_.width; }
  int height() const { return grid_.height; }

  bool at(int col, int row) const {
    return bits_[static_cast<std::size_t>(row) * grid_.width + col] != 0;
  }
  void set(int col, int row) {
    bits_[static_cast<std::size_t>(row) * grid_.width + col] = 1;
  }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::size_t count() const;
  // Area covered by set cells, in source units squared.
  double covered_area() const {
    return static_cast<double>(count()) * grid_.cell * grid_.cell;
  }

 private:
  RasterGrid grid_;
  std::vector<std::uint8_t> bits_;
};

inline constexpr int kDefaultRasterDim = 512;

ExtremeSet extreme_points(const PolygonContour& poly);
ExtremeSet extreme_points(std::span<const PolygonContour> parts);
BoundingBox extreme_box(const ExtremeSet& e);

// n landmarks at equal arc-length spacing, starting at the top extreme
// point and running clockwise on screen. Anchor is the extreme-box center.
LandmarkSet resample_contour(const PolygonContour& poly,
                             std::size_t n = kDefaultContourCount);

BoundingBox kps_box(const KeypointInstance& k);

// Grid over the joint bounds of the parts with max_dim cells on the longest
// side.
RasterGrid grid_for(std::span<const PolygonContour> parts, int max_dim);
// A cell is set when its center lies inside any part (even-odd rule). Centers
// on a horizontal edge belong to the region below it; centers on a vertical
// edge belong to the region to its right.
RasterMask rasterize(std::span<const PolygonContour> parts,
                     const RasterGrid& grid);
RasterMask rasterize(std::span<const PolygonContour> parts, int max_dim);
RasterMask rasterize(const PolygonContour& poly, int max_dim);

double mask_iou(const RasterMask& a, const RasterMask& b);

AnchorPoint anchor_from_polygon(const PolygonContour& poly);
AnchorPoint anchor_from_polygon(std::span<const PolygonContour> parts);

// Joint tight bounds of several parts.
BoundingBox bounds_of(std::span<const PolygonContour> parts);

// Distance from p to the polygon boundary.
double distance_to_boundary(const PolygonContour& poly, const Point& p);

// True when no two non-adjacent edges touch.
bool is_simple(std::span<const Point> vertices);

// Largest number of boundary crossings over `rays` evenly spaced rays cast
// from origin through all parts.
int max_ray_crossings(std::span<const PolygonContour> parts,
                      const Point& origin, int rays = 360);

}  // namespace lsnet

#endif  // LSNET_LANDMARKS_HPP_
