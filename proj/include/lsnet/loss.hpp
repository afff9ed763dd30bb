// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#ifndef LSNET_LOSS_HPP_
#define LSNET_LOSS_HPP_

#include <array>
#include <span>
#include <vector>

#include "lsnet/cross_coord.hpp"
#include "lsnet/types.hpp"

namespace lsnet {

inline constexpr double kCrossIouEpsilon = 1e-12;

struct LossValue {
  double value = 0.0;
  std::vector<double> per_landmark;
};

// Ratio of the l1-norms of the elementwise minimum and maximum of q and
// q_star. Equal inputs (including two all-zero offsets) score exactly 1.
double cross_iou(const CrossOffset& q, const CrossOffset& q_star);

// 1 - mean cross-IoU over landmark pairs; per_landmark holds each cross-IoU.
LossValue cross_iou_loss(std::span<const CrossOffset> pred,
                         std::span<const CrossOffset> target);

// Subgradient of cross_iou(q, q_star) with respect to q. At q_i == q*_i the
// midpoint of the two one-sided derivatives is used.
std::array<double, 4> cross_iou_grad(const CrossOffset& q,
                                     const CrossOffset& q_star);

// Mean elementwise smooth-l1.
double smooth_l1_loss(std::span<const double> pred,
                      std::span<const double> target, double beta);
// Gradient of smooth_l1_loss with respect to pred.
std::vector<double> smooth_l1_grad(std::span<const double> pred,
                                   std::span<const double> target,
                                   double beta);

double box_iou(const BoundingBox& a, const BoundingBox& b);

double giou(const BoundingBox& a, const BoundingBox& b);
inline double giou_loss(const BoundingBox& a, const BoundingBox& b) {
  return 1.0 - giou(a, b);
}
// Gradient of giou_loss(pred, target) with respect to
// (pred.x_min, pred.y_min, pred.x_max, pred.y_max).
std::array<double, 4> giou_loss_grad(const BoundingBox& pred,
                                     const BoundingBox& target);

}  // namespace lsnet

#endif  // LSNET_LOSS_HPP_
