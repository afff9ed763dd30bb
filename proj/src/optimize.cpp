// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#include "lsnet/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "lsnet/ingest.hpp"
#include "lsnet/landmarks.hpp"
#include "lsnet/loss.hpp"
#include "rng.hpp"

namespace lsnet {

namespace {

constexpr double kAdamBeta1 = 0.9;
constexpr double kAdamBeta2 = 0.999;
constexpr double kAdamEpsilon = 1e-8;
constexpr double kMagnitudeDecay = 0.9;

BoundingBox tight_box(std::span<const Point> pts) {
  BoundingBox b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const Point& p : pts) {
    b.x_min = std::min(b.x_min, p.x);
    b.y_min = std::min(b.y_min, p.y);
    b.x_max = std::max(b.x_max, p.x);
    b.y_max = std::max(b.y_max, p.y);
  }
  return b;
}

double diagonal(const BoundingBox& b) { return std::hypot(b.width(), b.height()); }

// Box spanned by landmarks ordered top, left, bottom, right; an inverted
// prediction scores zero.
double decoded_box_iou(std::span<const Point> p, const BoundingBox& target) {
  if (p[1].x > p[3].x || p[0].y > p[2].y) return 0.0;
  return box_iou({p[1].x, p[0].y, p[3].x, p[2].y}, target);
}

// The regression problem after box-style conversion: anchor, target
// landmarks, and the scale used for initialization.
struct Problem {
  AnchorPoint anchor;
  std::vector<Point> landmarks;
  std::vector<OffsetVector> offsets;    // landmark - anchor
  std::vector<CrossOffset> hard;        // encoded offsets
  BoundingBox target_box;               // extreme box or tight box
  bool box_judged = false;              // convergence on the decoded box
  double init_scale = 0.0;
};

Problem make_problem(const LandmarkSet& target, const FitConfig& config) {
  Problem pr;
  pr.anchor = target.anchor();
  const bool extreme = target.role() == LandmarkRole::kExtreme;
  pr.box_judged = extreme;
  if (extreme) {
    const auto& lm = target.landmarks();
    pr.target_box = {lm[1].x, lm[0].y, lm[3].x, lm[2].y};
    require(is_valid(pr.target_box),
            "extreme landmarks must be ordered top, left, bottom, right");
  } else {
    pr.target_box = tight_box(target.landmarks());
  }
  if (config.box_style == BoxStyle::kRectangle) {
    const BoundingBox& b = pr.target_box;
    const Point a = pr.anchor;
    pr.landmarks = {{a.x, b.y_min}, {b.x_min, a.y}, {a.x, b.y_max}, {b.x_max, a.y}};
  } else {
    pr.landmarks = target.landmarks();
  }
  for (const Point& p : pr.landmarks) {
    pr.offsets.push_back({p.x - pr.anchor.x, p.y - pr.anchor.y});
  }
  pr.hard = landmarks_to_cross(pr.anchor, pr.landmarks);
  pr.init_scale = diagonal(pr.target_box) / 10.0;
  return pr;
}

// Parameter layouts:
//   cross-IoU   4 components per landmark, [x_neg, x_pos, y_neg, y_pos]
//   smooth-l1   signed (dx, dy) per landmark
//   giou        box edges relative to the anchor (x_min, y_min, x_max, y_max)
class Objective {
 public:
  Objective(const Problem& pr, const FitConfig& config)
      : pr_(pr), config_(config) {
    if (config.loss == LossKind::kCrossIou) {
      for (const CrossOffset& h : pr.hard) {
        soft_.push_back(soften_target(h, config.alpha));
      }
    }
    for (const OffsetVector& o : pr.offsets) {
      flat_target_.push_back(o.dx);
      flat_target_.push_back(o.dy);
    }
    const Point a = pr.anchor;
    target_rel_box_ = {pr.target_box.x_min - a.x, pr.target_box.y_min - a.y,
                       pr.target_box.x_max - a.x, pr.target_box.y_max - a.y};
  }

  std::vector<double> initial(std::uint64_t seed) const {
    const std::size_t n = pr_.landmarks.size();
    std::vector<CrossOffset> q(n);
    if (config_.init == InitMode::kAtTarget) {
      return at_target();
    }
    detail::Rng rng(seed);
    for (CrossOffset& c : q) {
      std::array<double, 4> v{};
      for (double& x : v) x = rng.uniform(0.1, 1.0) * pr_.init_scale;
      c = CrossOffset::from_array(v);
    }
    return from_cross(q);
  }

  double loss(std::span<const double> theta) const {
    switch (config_.loss) {
      case LossKind::kCrossIou:
        return cross_iou_loss(as_cross(theta), soft_).value;
      case LossKind::kSmoothL1:
        return smooth_l1_loss(theta, flat_target_, config_.beta);
      case LossKind::kGiou:
        return giou_loss(as_box(theta), target_rel_box_);
    }
    return 0.0;
  }

  std::vector<double> gradient(std::span<const double> theta) const {
    switch (config_.loss) {
      case LossKind::kCrossIou: {
        const std::vector<CrossOffset> q = as_cross(theta);
        std::vector<double> g(theta.size());
        const double inv_n = 1.0 / static_cast<double>(q.size());
        for (std::size_t n = 0; n < q.size(); ++n) {
          const auto gi = cross_iou_grad(q[n], soft_[n]);
          for (std::size_t i = 0; i < 4; ++i) g[4 * n + i] = -gi[i] * inv_n;
        }
        return g;
      }
      case LossKind::kSmoothL1:
        return smooth_l1_grad(theta, flat_target_, config_.beta);
      case LossKind::kGiou: {
        const auto g = giou_loss_grad(as_box(theta), target_rel_box_);
        return {g.begin(), g.end()};
      }
    }
    return {};
  }

  // Keeps parameters in their feasible set after a step.
  void project(std::vector<double>& theta) const {
    if (config_.loss == LossKind::kCrossIou) {
      for (double& v : theta) v = std::max(v, 0.0);
    } else if (config_.loss == LossKind::kGiou) {
      for (std::size_t lo : {0u, 1u}) {
        if (theta[lo] > theta[lo + 2]) {
          const double mid = 0.5 * (theta[lo] + theta[lo + 2]);
          theta[lo] = theta[lo + 2] = mid;
        }
      }
    }
  }

  std::vector<Point> decode(std::span<const double> theta) const {
    const Point a = pr_.anchor;
    std::vector<Point> out;
    switch (config_.loss) {
      case LossKind::kCrossIou:
        for (const CrossOffset& q : as_cross(theta)) {
          const OffsetVector d = decode_offset(q);
          out.push_back({a.x + d.dx, a.y + d.dy});
        }
        break;
      case LossKind::kSmoothL1:
        for (std::size_t n = 0; 2 * n + 1 < theta.size(); ++n) {
          out.push_back({a.x + theta[2 * n], a.y + theta[2 * n + 1]});
        }
        break;
      case LossKind::kGiou: {
        const BoundingBox b = as_box(theta);
        out = {{a.x, a.y + b.y_min}, {a.x + b.x_min, a.y},
               {a.x, a.y + b.y_max}, {a.x + b.x_max, a.y}};
        break;
      }
    }
    return out;
  }

  double decoded_iou(std::span<const double> theta) const {
    const std::vector<Point> pts = decode(theta);
    if (pr_.box_judged) return decoded_box_iou(pts, pr_.target_box);
    const std::vector<CrossOffset> pred = landmarks_to_cross(pr_.anchor, pts);
    return 1.0 - cross_iou_loss(pred, pr_.hard).value;
  }

 private:
  std::vector<double> at_target() const {
    switch (config_.loss) {
      case LossKind::kCrossIou: return from_cross(soft_);
      case LossKind::kSmoothL1: return flat_target_;
      case LossKind::kGiou:
        return {target_rel_box_.x_min, target_rel_box_.y_min,
                target_rel_box_.x_max, target_rel_box_.y_max};
    }
    return {};
  }

  std::vector<double> from_cross(std::span<const CrossOffset> q) const {
    std::vector<double> theta;
    switch (config_.loss) {
      case LossKind::kCrossIou:
        for (const CrossOffset& c : q) {
          const auto v = c.to_array();
          theta.insert(theta.end(), v.begin(), v.end());
        }
        break;
      case LossKind::kSmoothL1:
        for (const CrossOffset& c : q) {
          const OffsetVector d = decode_offset(c);
          theta.push_back(d.dx);
          theta.push_back(d.dy);
        }
        break;
      case LossKind::kGiou: {
        // Landmarks are top, left, bottom, right straight vectors.
        const double top = decode_offset(q[0]).dy;
        const double left = decode_offset(q[1]).dx;
        const double bottom = decode_offset(q[2]).dy;
        const double right = decode_offset(q[3]).dx;
        theta = {std::min(left, right), std::min(top, bottom),
                 std::max(left, right), std::max(top, bottom)};
        break;
      }
    }
    return theta;
  }

  static std::vector<CrossOffset> as_cross(std::span<const double> theta) {
    std::vector<CrossOffset> q(theta.size() / 4);
    for (std::size_t n = 0; n < q.size(); ++n) {
      q[n] = {theta[4 * n], theta[4 * n + 1], theta[4 * n + 2], theta[4 * n + 3]};
    }
    return q;
  }

  static BoundingBox as_box(std::span<const double> theta) {
    return {theta[0], theta[1], theta[2], theta[3]};
  }

  const Problem& pr_;
  const FitConfig& config_;
  std::vector<CrossOffset> soft_;
  std::vector<double> flat_target_;
  BoundingBox target_rel_box_;
};

double rms(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s / static_cast<double>(v.size()));
}

// Adam on the gradient rescaled by a running parameter magnitude; the step
// is then expressed in that magnitude, so rescaling parameters and target
// by s rescales the whole trajectory by s.
class AdaptiveStepper {
 public:
  AdaptiveStepper(std::size_t dim, double step, double initial_magnitude)
      : step_(step), magnitude_(initial_magnitude), m_(dim, 0.0), v_(dim, 0.0) {}

  void apply(std::vector<double>& theta, std::span<const double> grad) {
    ++t_;
    const double scale = std::max(magnitude_, 1e-300);
    const double c1 = 1.0 - std::pow(kAdamBeta1, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(kAdamBeta2, static_cast<double>(t_));
    for (std::size_t i = 0; i < theta.size(); ++i) {
      const double g = grad[i] * scale;
      m_[i] = kAdamBeta1 * m_[i] + (1.0 - kAdamBeta1) * g;
      v_[i] = kAdamBeta2 * v_[i] + (1.0 - kAdamBeta2) * g * g;
      const double m_hat = m_[i] / c1;
      const double v_hat = v_[i] / c2;
      theta[i] -= step_ * scale * m_hat / (std::sqrt(v_hat) + kAdamEpsilon);
    }
  }

  void observe(std::span<const double> theta) {
    magnitude_ = kMagnitudeDecay * magnitude_ + (1.0 - kMagnitudeDecay) * rms(theta);
  }

 private:
  double step_;
  double magnitude_;
  std::vector<double> m_;
  std::vector<double> v_;
  long t_ = 0;
};

}  // namespace

std::string_view to_string(LossKind kind) {
  switch (kind) {
    case LossKind::kCrossIou: return "cross_iou";
    case LossKind::kSmoothL1: return "smooth_l1";
    case LossKind::kGiou: return "giou";
  }
  return "unknown";
}

std::string_view to_string(OptimizerKind kind) {
  return kind == OptimizerKind::kAdaptive ? "adaptive" : "fixed_step";
}

std::string_view to_string(BoxStyle style) {
  return style == BoxStyle::kRectangle ? "rectangle" : "extreme";
}

std::string_view to_string(InitMode mode) {
  return mode == InitMode::kAtTarget ? "at_target" : "seeded";
}

namespace {
bool same_name(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const char ca = a[i] == '-' ? '_' : a[i];
    const char cb = b[i] == '-' ? '_' : b[i];
    if (ca != cb) return false;
  }
  return true;
}
}  // namespace

std::optional<LossKind> loss_kind_from_string(std::string_view name) {
  for (LossKind k : {LossKind::kCrossIou, LossKind::kSmoothL1, LossKind::kGiou}) {
    if (same_name(name, to_string(k))) return k;
  }
  return std::nullopt;
}

std::optional<OptimizerKind> optimizer_from_string(std::string_view name) {
  for (OptimizerKind k : {OptimizerKind::kFixedStep, OptimizerKind::kAdaptive}) {
    if (same_name(name, to_string(k))) return k;
  }
  return std::nullopt;
}

std::optional<BoxStyle> box_style_from_string(std::string_view name) {
  for (BoxStyle s : {BoxStyle::kExtreme, BoxStyle::kRectangle}) {
    if (same_name(name, to_string(s))) return s;
  }
  return std::nullopt;
}

std::optional<InitMode> init_mode_from_string(std::string_view name) {
  for (InitMode m : {InitMode::kSeeded, InitMode::kAtTarget}) {
    if (same_name(name, to_string(m))) return m;
  }
  return std::nullopt;
}

void FitConfig::validate() const {
  require(std::isfinite(step_size) && step_size > 0.0, "step_size must be positive");
  require(max_steps >= 1, "max_steps must be positive");
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  require(std::isfinite(beta) && beta > 0.0, "beta must be positive");
  require(convergence_iou > 0.0 && convergence_iou <= 1.0,
          "convergence_iou must lie in (0, 1]");
  if (loss == LossKind::kGiou && box_style != BoxStyle::kRectangle) {
    fail(ErrorCode::kUnsupported,
         "giou regresses rectangles only; use box_style=rectangle");
  }
}

FitReport fit_offsets(const LandmarkSet& target, const FitConfig& config) {
  config.validate();
  if ((config.loss == LossKind::kGiou || config.box_style == BoxStyle::kRectangle) &&
      target.role() != LandmarkRole::kExtreme) {
    fail(ErrorCode::kUnsupported,
         "rectangle regression needs an extreme-point target");
  }

  const Problem pr = make_problem(target, config);
  const Objective objective(pr, config);

  FitReport report;
  report.target_scale = diagonal(pr.target_box);
  std::vector<double> theta = objective.initial(config.seed);
  objective.project(theta);

  report.loss_trajectory.push_back(objective.loss(theta));
  double iou = objective.decoded_iou(theta);

  AdaptiveStepper adaptive(theta.size(), config.step_size, rms(theta));
  while (iou < config.convergence_iou && report.steps_taken < config.max_steps) {
    const std::vector<double> grad = objective.gradient(theta);
    if (config.optimizer == OptimizerKind::kAdaptive) {
      adaptive.apply(theta, grad);
    } else {
      for (std::size_t i = 0; i < theta.size(); ++i) {
        theta[i] -= config.step_size * grad[i];
      }
    }
    objective.project(theta);
    adaptive.observe(theta);
    ++report.steps_taken;
    report.loss_trajectory.push_back(objective.loss(theta));
    iou = objective.decoded_iou(theta);
  }

  report.final_decoded_iou = iou;
  report.converged = iou >= config.convergence_iou;
  report.final_landmarks = objective.decode(theta);
  return report;
}

LandmarkSet extreme_target(std::uint64_t seed, double scale) {
  require(std::isfinite(scale) && scale > 0.0, "target scale must be positive");
  detail::Rng rng(seed);
  const int vertices = rng.uniform_int(8, 32);
  const PolygonContour unit = random_unit_convex(rng.next(), vertices);
  const ExtremeSet e = extreme_points(unit);
  const Point c = extreme_box(e).center();
  std::vector<Point> lm;
  for (const Point& p : e.ordered()) {
    lm.push_back({(p.x - c.x) * scale, (p.y - c.y) * scale});
  }
  return LandmarkSet({0.0, 0.0}, std::move(lm), LandmarkRole::kExtreme);
}

std::vector<SweepEntry> scale_sweep(LossKind loss, std::span<const double> scales,
                                    FitConfig config) {
  require(!scales.empty(), "scale_sweep needs at least one scale");
  config.loss = loss;
  const std::uint64_t target_seed = detail::derive_seed(config.seed, 0);
  std::vector<SweepEntry> out;
  for (double s : scales) {
    SweepEntry e;
    e.scale = s;
    e.report = fit_offsets(extreme_target(target_seed, s), config);
    e.initial_loss = e.report.initial_loss();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CompareRow> compare_losses(std::size_t corpus_size, std::uint64_t seed,
                                       std::span<const FitConfig> configs) {
  require(corpus_size >= 1, "compare_losses needs corpus_size >= 1");
  require(!configs.empty(), "compare_losses needs at least one config");
  for (const FitConfig& c : configs) c.validate();

  std::vector<LandmarkSet> targets;
  targets.reserve(corpus_size);
  for (std::size_t i = 0; i < corpus_size; ++i) {
    detail::Rng rng(detail::derive_seed(seed, i));
    const double scale = rng.log_uniform(kCompareMinScale, kCompareMaxScale);
    targets.push_back(extreme_target(rng.next(), scale));
  }

  std::vector<CompareRow> rows;
  for (const FitConfig& base : configs) {
    CompareRow row;
    row.loss = base.loss;
    row.box_style = base.box_style;
    row.targets = corpus_size;
    double iou_sum = 0.0;
    for (std::size_t i = 0; i < corpus_size; ++i) {
      FitConfig c = base;
      c.seed = detail::derive_seed(base.seed, i);
      const FitReport r = fit_offsets(targets[i], c);
      if (r.converged) ++row.converged;
      iou_sum += r.final_decoded_iou;
    }
    row.convergence_rate = static_cast<double>(row.converged) / corpus_size;
    row.mean_final_iou = iou_sum / static_cast<double>(corpus_size);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lsnet
