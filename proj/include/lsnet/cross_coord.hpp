// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#ifndef LSNET_CROSS_COORD_HPP_
#define LSNET_CROSS_COORD_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "lsnet/types.hpp"

namespace lsnet {

inline constexpr double kDefaultAlpha = 0.2;

// Signed offset from an anchor point to a landmark, in pixels.
struct OffsetVector {
  double dx = 0.0;
  double dy = 0.0;

  friend bool operator==(const OffsetVector&, const OffsetVector&) = default;
};

// Four-component non-negative encoding of an offset. Storage order is
// [x_neg, x_pos, y_neg, y_pos]; with y pointing down, y_neg is the "top"
// component and y_pos the "bottom" one.
struct CrossOffset {
  double x_neg = 0.0;
  double x_pos = 0.0;
  double y_neg = 0.0;
  double y_pos = 0.0;

  static constexpr std::size_t kSize = 4;

  static CrossOffset from_array(const std::array<double, kSize>& v) {
    return {v[0], v[1], v[2], v[3]};
  }
  std::array<double, kSize> to_array() const {
    return {x_neg, x_pos, y_neg, y_pos};
  }

  double operator[](std::size_t i) const {
    switch (i) {
      case 0: return x_neg;
      case 1: return x_pos;
      case 2: return y_neg;
      default: return y_pos;
    }
  }

  CrossOffset scaled(double s) const {
    return {s * x_neg, s * x_pos, s * y_neg, s * y_pos};
  }

  friend bool operator==(const CrossOffset&, const CrossOffset&) = default;
};

using AnchorPoint = Point;

enum class LandmarkRole { kExtreme, kContour, kKeypoints };

inline constexpr std::size_t kExtremeCount = 4;
inline constexpr std::size_t kDefaultContourCount = 36;
inline constexpr std::size_t kKeypointCount = 17;

std::string_view to_string(LandmarkRole role);

// An anchor point plus an ordered list of role-tagged landmarks. Extreme
// landmarks are ordered top, left, bottom, right.
class LandmarkSet {
 public:
  LandmarkSet(AnchorPoint anchor, std::vector<Point> landmarks,
              LandmarkRole role);

  const AnchorPoint& anchor() const { return anchor_; }
  const std::vector<Point>& landmarks() const { return landmarks_; }
  LandmarkRole role() const { return role_; }
  std::size_t size() const { return landmarks_.size(); }

 private:
  AnchorPoint anchor_;
  std::vector<Point> landmarks_;
  LandmarkRole role_;
};

bool is_hard_encoded(const CrossOffset& q);

CrossOffset encode_offset(const OffsetVector& delta);

// Raises the zero side of each axis to alpha times the nonzero side.
// An all-zero axis stays zero.
CrossOffset soften_target(const CrossOffset& hard, double alpha);

// Max-decode: the larger side of each axis wins; ties decode positive.
OffsetVector decode_offset(const CrossOffset& pred);

std::vector<CrossOffset> landmarks_to_cross(const AnchorPoint& anchor,
                                            std::span<const Point> landmarks);
std::vector<CrossOffset> landmarks_to_cross(const LandmarkSet& set);

}  // namespace lsnet

#endif  // LSNET_CROSS_COORD_HPP_
