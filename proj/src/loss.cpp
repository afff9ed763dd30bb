// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#include "lsnet/loss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lsnet {

namespace {

void require_cross_offset(const CrossOffset& q) {
  for (std::size_t i = 0; i < CrossOffset::kSize; ++i) {
    require(std::isfinite(q[i]) && q[i] >= 0.0,
            "cross offset components must be finite and non-negative");
  }
}

struct MinMaxSums {
  double s_min = 0.0;
  double s_max = 0.0;
};

MinMaxSums min_max_sums(const CrossOffset& q, const CrossOffset& q_star) {
  MinMaxSums s;
  for (std::size_t i = 0; i < CrossOffset::kSize; ++i) {
    s.s_min += std::min(q[i], q_star[i]);
    s.s_max += std::max(q[i], q_star[i]);
  }
  return s;
}

void require_box(const BoundingBox& b) {
  require(is_valid(b), "bounding box must be finite with min <= max");
}

double intersection_area(const BoundingBox& a, const BoundingBox& b) {
  const double iw = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
  const double ih = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  return iw * ih;
}

}  // namespace

double cross_iou(const CrossOffset& q, const CrossOffset& q_star) {
  require_cross_offset(q);
  require_cross_offset(q_star);
  if (q == q_star) return 1.0;
  const MinMaxSums s = min_max_sums(q, q_star);
  const double ratio = s.s_min / std::max(s.s_max, kCrossIouEpsilon);
  // Unequal inputs never score a perfect match, even when the sums collide
  // after rounding.
  return std::min(ratio, std::nextafter(1.0, 0.0));
}

LossValue cross_iou_loss(std::span<const CrossOffset> pred,
                         std::span<const CrossOffset> target) {
  require(!pred.empty(), "cross_iou_loss needs at least one landmark");
  require(pred.size() == target.size(),
          "prediction and target landmark counts differ");
  LossValue out;
  out.per_landmark.reserve(pred.size());
  double sum = 0.0;
  for (std::size_t n = 0; n < pred.size(); ++n) {
    const double c = cross_iou(pred[n], target[n]);
    out.per_landmark.push_back(c);
    sum += c;
  }
  out.value = 1.0 - sum / static_cast<double>(pred.size());
  if (out.value < 0.0) out.value = 0.0;
  return out;
}

std::array<double, 4> cross_iou_grad(const CrossOffset& q,
                                     const CrossOffset& q_star) {
  require_cross_offset(q);
  require_cross_offset(q_star);
  const MinMaxSums s = min_max_sums(q, q_star);
  const double denom = std::max(s.s_max, kCrossIouEpsilon);
  const double below = 1.0 / denom;                   // q_i < q*_i
  const double above = -s.s_min / (denom * denom);    // q_i > q*_i
  std::array<double, 4> g{};
  for (std::size_t i = 0; i < CrossOffset::kSize; ++i) {
    if (q[i] < q_star[i]) {
      g[i] = below;
    } else if (q[i] > q_star[i]) {
      g[i] = above;
    } else {
      g[i] = 0.5 * (below + above);
    }
  }
  return g;
}

double smooth_l1_loss(std::span<const double> pred,
                      std::span<const double> target, double beta) {
  require(beta > 0.0, "smooth-l1 beta must be positive");
  require(pred.size() == target.size(), "smooth-l1 length mismatch");
  require(!pred.empty(), "smooth-l1 needs at least one element");
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = std::abs(pred[i] - target[i]);
    sum += d < beta ? 0.5 * d * d / beta : d - 0.5 * beta;
  }
  return sum / static_cast<double>(pred.size());
}

std::vector<double> smooth_l1_grad(std::span<const double> pred,
                                   std::span<const double> target,
                                   double beta) {
  require(beta > 0.0, "smooth-l1 beta must be positive");
  require(pred.size() == target.size(), "smooth-l1 length mismatch");
  require(!pred.empty(), "smooth-l1 needs at least one element");
  const double inv_n = 1.0 / static_cast<double>(pred.size());
  std::vector<double> g(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = pred[i] - target[i];
    if (std::abs(d) < beta) {
      g[i] = d / beta * inv_n;
    } else {
      g[i] = (d > 0.0 ? 1.0 : -1.0) * inv_n;
    }
  }
  return g;
}

double box_iou(const BoundingBox& a, const BoundingBox& b) {
  require_box(a);
  require_box(b);
  const double inter = intersection_area(a, b);
  const double uni = a.area() + b.area() - inter;
  if (uni <= 0.0) return 0.0;
  return inter / uni;
}

double giou(const BoundingBox& a, const BoundingBox& b) {
  require_box(a);
  require_box(b);
  const double inter = intersection_area(a, b);
  const double uni = a.area() + b.area() - inter;
  const double enclose = (std::max(a.x_max, b.x_max) - std::min(a.x_min, b.x_min)) *
                         (std::max(a.y_max, b.y_max) - std::min(a.y_min, b.y_min));
  const double iou = uni > 0.0 ? inter / uni : 0.0;
  if (enclose <= 0.0) return iou;
  return iou - (enclose - uni) / enclose;
}

std::array<double, 4> giou_loss_grad(const BoundingBox& p,
                                     const BoundingBox& t) {
  require_box(p);
  require_box(t);
  const double pw = p.width();
  const double ph = p.height();

  const double iw = std::min(p.x_max, t.x_max) - std::max(p.x_min, t.x_min);
  const double ih = std::min(p.y_max, t.y_max) - std::max(p.y_min, t.y_min);
  const bool overlap = iw > 0.0 && ih > 0.0;
  const double inter = overlap ? iw * ih : 0.0;
  const double uni = p.area() + t.area() - inter;

  const double cw = std::max(p.x_max, t.x_max) - std::min(p.x_min, t.x_min);
  const double ch = std::max(p.y_max, t.y_max) - std::min(p.y_min, t.y_min);
  const double enclose = cw * ch;
  if (uni <= 0.0 || enclose <= 0.0) return {0.0, 0.0, 0.0, 0.0};

  // Partial derivatives of the pred area, intersection, and enclosing area
  // with respect to x_min, y_min, x_max, y_max.
  const std::array<double, 4> d_area{-ph, -pw, ph, pw};
  std::array<double, 4> d_inter{};
  if (overlap) {
    d_inter[0] = p.x_min >= t.x_min ? -ih : 0.0;
    d_inter[1] = p.y_min >= t.y_min ? -iw : 0.0;
    d_inter[2] = p.x_max <= t.x_max ? ih : 0.0;
    d_inter[3] = p.y_max <= t.y_max ? iw : 0.0;
  }
  const std::array<double, 4> d_enclose{
      p.x_min <= t.x_min ? -ch : 0.0, p.y_min <= t.y_min ? -cw : 0.0,
      p.x_max >= t.x_max ? ch : 0.0, p.y_max >= t.y_max ? cw : 0.0};

  // giou = I/U - 1 + U/C
  std::array<double, 4> g{};
  for (std::size_t k = 0; k < 4; ++k) {
    const double d_uni = d_area[k] - d_inter[k];
    const double d_giou = d_inter[k] / uni - inter * d_uni / (uni * uni) +
                          d_uni / enclose -
                          uni * d_enclose[k] / (enclose * enclose);
    g[k] = -d_giou;
  }
  return g;
}

}  // namespace lsnet
