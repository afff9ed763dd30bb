// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#include "lsnet/cross_coord.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lsnet {

namespace {

bool all_finite_non_negative(const CrossOffset& q) {
  for (std::size_t i = 0; i < CrossOffset::kSize; ++i) {
    if (!std::isfinite(q[i]) || q[i] < 0.0) return false;
  }
  return true;
}

// One axis of softening: (neg, pos) -> softened pair.
void soften_axis(double& neg, double& pos, double alpha) {
  if (neg == 0.0 && pos == 0.0) return;
  if (neg == 0.0) {
    neg = alpha * pos;
  } else {
    pos = alpha * neg;
  }
}

double decode_axis(double neg, double pos) {
  return pos >= neg ? pos : -neg;
}

}  // namespace

std::string_view to_string(LandmarkRole role) {
  switch (role) {
    case LandmarkRole::kExtreme: return "extreme";
    case LandmarkRole::kContour: return "contour";
    case LandmarkRole::kKeypoints: return "keypoints";
  }
  return "unknown";
}

LandmarkSet::LandmarkSet(AnchorPoint anchor, std::vector<Point> landmarks,
                         LandmarkRole role)
    : anchor_(anchor), landmarks_(std::move(landmarks)), role_(role) {
  require(is_finite(anchor_), "anchor point must be finite");
  for (const Point& p : landmarks_) {
    require(is_finite(p), "landmarks must be finite");
  }
  switch (role_) {
    case LandmarkRole::kExtreme:
      require(landmarks_.size() == kExtremeCount,
              "extreme landmark set needs exactly 4 points");
      break;
    case LandmarkRole::kKeypoints:
      require(landmarks_.size() == kKeypointCount,
              "keypoint landmark set needs exactly 17 points");
      break;
    case LandmarkRole::kContour:
      require(landmarks_.size() >= 3,
              "contour landmark set needs at least 3 points");
      break;
  }
}

bool is_hard_encoded(const CrossOffset& q) {
  return q.x_neg * q.x_pos == 0.0 && q.y_neg * q.y_pos == 0.0;
}

CrossOffset encode_offset(const OffsetVector& delta) {
  require(std::isfinite(delta.dx) && std::isfinite(delta.dy),
          "offset must be finite");
  return {std::max(-delta.dx, 0.0), std::max(delta.dx, 0.0),
          std::max(-delta.dy, 0.0), std::max(delta.dy, 0.0)};
}

CrossOffset soften_target(const CrossOffset& hard, double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  require(all_finite_non_negative(hard),
          "cross offset components must be finite and non-negative");
  require(is_hard_encoded(hard),
          "soften_target expects a hard encoding (one nonzero side per axis)");
  CrossOffset soft = hard;
  soften_axis(soft.x_neg, soft.x_pos, alpha);
  soften_axis(soft.y_neg, soft.y_pos, alpha);
  return soft;
}

OffsetVector decode_offset(const CrossOffset& pred) {
  require(all_finite_non_negative(pred),
          "cross offset components must be finite and non-negative");
  // -0.0 from a (0, 0) axis would compare equal but print oddly.
  OffsetVector out{decode_axis(pred.x_neg, pred.x_pos),
                   decode_axis(pred.y_neg, pred.y_pos)};
  if (out.dx == 0.0) out.dx = 0.0;
  if (out.dy == 0.0) out.dy = 0.0;
  return out;
}

std::vector<CrossOffset> landmarks_to_cross(const AnchorPoint& anchor,
                                            std::span<const Point> landmarks) {
  std::vector<CrossOffset> out;
  out.reserve(landmarks.size());
  for (const Point& p : landmarks) {
    out.push_back(encode_offset({p.x - anchor.x, p.y - anchor.y}));
  }
  return out;
}

std::vector<CrossOffset> landmarks_to_cross(const LandmarkSet& set) {
  return landmarks_to_cross(set.anchor(), set.landmarks());
}

}  // namespace lsnet
