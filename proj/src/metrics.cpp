// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#include "lsnet/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <thread>

namespace lsnet {

double oks(const KeypointInstance& pred, const KeypointInstance& gt) {
  pred.validate();
  gt.validate();
  const double s2 = gt.scale * gt.scale;
  double sum = 0.0;
  int visible = 0;
  for (std::size_t i = 0; i < kKeypointCount; ++i) {
    const Keypoint& g = gt.points[i];
    if (g.visibility <= 0) continue;
    const Keypoint& p = pred.points[i];
    const double dx = p.x - g.x;
    const double dy = p.y - g.y;
    const double k2 = kOksKappa[i] * kOksKappa[i];
    sum += std::exp(-(dx * dx + dy * dy) / (2.0 * s2 * k2));
    ++visible;
  }
  require(visible > 0, "oks needs at least one visible ground-truth keypoint");
  return sum / visible;
}

std::array<double, kThresholdCount> iou_thresholds() {
  std::array<double, kThresholdCount> t{};
  for (std::size_t k = 0; k < kThresholdCount; ++k) {
    t[k] = static_cast<double>(50 + 5 * k) / 100.0;
  }
  return t;
}

ThresholdSweep ap_over_thresholds(std::span<const double> ious) {
  require(!ious.empty(), "ap_over_thresholds needs at least one IoU");
  ThresholdSweep sweep;
  sweep.thresholds = iou_thresholds();
  double total = 0.0;
  for (std::size_t k = 0; k < kThresholdCount; ++k) {
    const double t = sweep.thresholds[k];
    const auto hits = std::count_if(ious.begin(), ious.end(),
                                    [t](double v) { return v >= t; });
    sweep.per_threshold_recall[k] =
        static_cast<double>(hits) / static_cast<double>(ious.size());
    total += sweep.per_threshold_recall[k];
  }
  sweep.ap = total / kThresholdCount;
  return sweep;
}

double quantized_mask_iou(const PolygonParts& parts, std::size_t n,
                          int max_dim) {
  const RasterGrid grid = grid_for(parts, max_dim);
  PolygonParts quantized;
  quantized.reserve(parts.size());
  for (const PolygonContour& part : parts) {
    quantized.emplace_back(resample_contour(part, n).landmarks());
  }
  return mask_iou(rasterize(quantized, grid), rasterize(parts, grid));
}

std::vector<QuantizationRow> quantization_report(
    std::span<const PolygonParts> instances, std::span<const std::size_t> n_values,
    const QuantizationOptions& options) {
  require(!instances.empty(), "quantization report needs a non-empty corpus");
  require(!n_values.empty(), "quantization report needs at least one n");
  for (std::size_t n : n_values) require(n >= 3, "landmark count must be >= 3");
  require(options.max_dim >= 8, "raster max_dim must be at least 8");

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(instances.size()));

  std::vector<QuantizationRow> rows;
  for (std::size_t n : n_values) {
    // Slot per instance; empty slot = skipped. Reduction runs in instance
    // order so results do not depend on the thread count.
    std::vector<std::optional<double>> ious(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < instances.size(); i = next++) {
        try {
          ious[i] = quantized_mask_iou(instances[i], n, options.max_dim);
        } catch (const Error&) {
          ious[i].reset();
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
      worker();
    }

    QuantizationRow row;
    row.n = n;
    std::vector<double> scored;
    scored.reserve(instances.size());
    for (const auto& v : ious) {
      if (v) {
        scored.push_back(*v);
      } else {
        ++row.skipped;
      }
    }
    row.instances = scored.size();
    if (!scored.empty()) {
      row.ap = ap_over_thresholds(scored).ap;
      double sum = 0.0;
      for (double v : scored) sum += v;
      row.mean_iou = sum / static_cast<double>(scored.size());
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lsnet
