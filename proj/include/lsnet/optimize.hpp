// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#ifndef LSNET_OPTIMIZE_HPP_
#define LSNET_OPTIMIZE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lsnet/cross_coord.hpp"
#include "lsnet/types.hpp"

namespace lsnet {

enum class LossKind { kCrossIou, kSmoothL1, kGiou };
enum class OptimizerKind { kFixedStep, kAdaptive };
// kExtreme regresses the four extreme points; kRectangle regresses the four
// axis-aligned vectors from the anchor to the box edges.
enum class BoxStyle { kExtreme, kRectangle };
// kAtTarget starts from the loss minimiser (softened target for cross-IoU).
enum class InitMode { kSeeded, kAtTarget };

std::string_view to_string(LossKind kind);
std::string_view to_string(OptimizerKind kind);
std::string_view to_string(BoxStyle style);
std::string_view to_string(InitMode mode);
std::optional<LossKind> loss_kind_from_string(std::string_view name);
std::optional<OptimizerKind> optimizer_from_string(std::string_view name);
std::optional<BoxStyle> box_style_from_string(std::string_view name);
std::optional<InitMode> init_mode_from_string(std::string_view name);

struct FitConfig {
  LossKind loss = LossKind::kCrossIou;
  OptimizerKind optimizer = OptimizerKind::kAdaptive;
  BoxStyle box_style = BoxStyle::kExtreme;
  InitMode init = InitMode::kSeeded;
  double step_size = 0.02;
  std::size_t max_steps = 3000;
  double alpha = kDefaultAlpha;  // cross-IoU target softening
  double beta = 1.0;             // smooth-l1 transition point, pixels
  std::uint64_t seed = 0;
  double convergence_iou = 0.99;

  // Throws for out-of-range values and for giou with the extreme style.
  void validate() const;
};

// Fixed-step stability bound for smooth-l1: its gradient is Lipschitz with
// constant 1 / (beta * scalars), so any step_size strictly below
// 2 * beta * scalars gives a non-increasing loss trajectory. `scalars` is
// the number of regressed values (2 per landmark). Cross-IoU has no such
// bound: fixed-step subgradient descent oscillates across the kinks at
// q_i == q*_i once a component reaches its target.
inline double smooth_l1_stability_bound(double beta, std::size_t scalars) {
  return 2.0 * beta * static_cast<double>(scalars);
}

struct FitReport {
  std::vector<double> loss_trajectory;  // steps_taken + 1 entries
  std::size_t steps_taken = 0;
  double final_decoded_iou = 0.0;
  bool converged = false;
  double target_scale = 0.0;            // diagonal of the target's box
  std::vector<Point> final_landmarks;   // decoded prediction

  double initial_loss() const { return loss_trajectory.front(); }
};

// Fits predicted offsets to `target` under config.loss. Convergence is
// judged on the decoded extreme box (extreme role) or on the mean hard
// cross-IoU of the decoded landmarks (other roles).
FitReport fit_offsets(const LandmarkSet& target, const FitConfig& config);

// Extreme-point target from a seeded random convex polygon whose tight box
// has longest side `scale`; the anchor sits at the origin, which is the
// center of the extreme box.
LandmarkSet extreme_target(std::uint64_t seed, double scale);

struct SweepEntry {
  double scale = 0.0;
  double initial_loss = 0.0;
  FitReport report;
};

// Fits the same seeded unit target scaled by each entry of `scales`.
std::vector<SweepEntry> scale_sweep(LossKind loss, std::span<const double> scales,
                                    FitConfig config);

struct CompareRow {
  LossKind loss = LossKind::kCrossIou;
  BoxStyle box_style = BoxStyle::kExtreme;
  std::size_t targets = 0;
  std::size_t converged = 0;
  double convergence_rate = 0.0;
  double mean_final_iou = 0.0;
};

inline constexpr double kCompareMinScale = 1.0;
inline constexpr double kCompareMaxScale = 1000.0;

// Fits every config against `corpus_size` seeded extreme-point targets with
// log-uniform scales in [1, 1000].
std::vector<CompareRow> compare_losses(std::size_t corpus_size,
                                       std::uint64_t seed,
                                       std::span<const FitConfig> configs);

}  // namespace lsnet

#endif  // LSNET_OPTIMIZE_HPP_
