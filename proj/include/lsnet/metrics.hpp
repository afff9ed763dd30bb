// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#ifndef LSNET_METRICS_HPP_
#define LSNET_METRICS_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "lsnet/landmarks.hpp"

namespace lsnet {

// Per-keypoint falloff constants of the COCO keypoint protocol, expressed
// as kappa = 2 * sigma so that oks = exp(-d^2 / (2 s^2 kappa^2)) with
// s = sqrt(object area). Order: nose, eyes, ears, shoulders, elbows, wrists,
// hips, knees, ankles (left before right).
inline constexpr std::array<double, kKeypointCount> kOksKappa{
    0.052, 0.050, 0.050, 0.070, 0.070, 0.158, 0.158, 0.144, 0.144,
    0.124, 0.124, 0.214, 0.214, 0.174, 0.174, 0.178, 0.178};

double oks(const KeypointInstance& pred, const KeypointInstance& gt);

inline constexpr std::size_t kThresholdCount = 10;

struct ThresholdSweep {
  std::array<double, kThresholdCount> thresholds{};
  std::array<double, kThresholdCount> per_threshold_recall{};
  double ap = 0.0;
};

// IoU thresholds 0.50, 0.55, ..., 0.95.
std::array<double, kThresholdCount> iou_thresholds();

ThresholdSweep ap_over_thresholds(std::span<const double> ious);

struct QuantizationRow {
  std::size_t n = 0;
  double ap = 0.0;
  double mean_iou = 0.0;
  std::size_t instances = 0;  // instances scored
  std::size_t skipped = 0;    // instances with failing geometry
};

struct QuantizationOptions {
  int max_dim = kDefaultRasterDim;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// For each n, resamples every part of every instance to n landmarks,
// rasterizes the landmark polygons and the source parts on a shared grid,
// and scores the mask IoU per instance.
std::vector<QuantizationRow> quantization_report(
    std::span<const PolygonParts> instances, std::span<const std::size_t> n_values,
    const QuantizationOptions& options = {});

// Mask IoU of one instance quantized to n landmarks per part.
double quantized_mask_iou(const PolygonParts& parts, std::size_t n,
                          int max_dim);

}  // namespace lsnet

#endif  // LSNET_METRICS_HPP_
