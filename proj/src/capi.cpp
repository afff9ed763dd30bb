// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#include "lsnet/lsnet.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <memory>
#include <new>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsnet/cross_coord.hpp"
#include "lsnet/ingest.hpp"
#include "lsnet/landmarks.hpp"
#include "lsnet/loss.hpp"
#include "lsnet/metrics.hpp"
#include "lsnet/optimize.hpp"

struct lsn_dataset {
  lsnet::Dataset data;
  mutable std::size_t multi_crossing = std::numeric_limits<std::size_t>::max();
};

struct lsn_fit_report {
  lsnet::FitReport report;
};

struct lsn_sweep {
  std::vector<double> scales;
  std::vector<double> initial_losses;
  std::vector<lsn_fit_report> reports;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_parse_offset = 0;

lsn_status to_status(lsnet::ErrorCode code) {
  switch (code) {
    case lsnet::ErrorCode::kInvalidArgument: return LSN_ERR_INVALID_ARGUMENT;
    case lsnet::ErrorCode::kDegenerateGeometry: return LSN_ERR_DEGENERATE_GEOMETRY;
    case lsnet::ErrorCode::kParse: return LSN_ERR_PARSE;
    case lsnet::ErrorCode::kIo: return LSN_ERR_IO;
    case lsnet::ErrorCode::kUnsupported: return LSN_ERR_UNSUPPORTED;
    case lsnet::ErrorCode::kNotFound: return LSN_ERR_NOT_FOUND;
  }
  return LSN_ERR_INTERNAL;
}

lsn_status set_error(lsn_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
lsn_status guarded(Body&& body) noexcept {
  try {
    body();
    return LSN_OK;
  } catch (const lsnet::ParseError& e) {
    g_last_parse_offset = e.byte_offset();
    return set_error(LSN_ERR_PARSE, e.what());
  } catch (const lsnet::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(LSN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(LSN_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(LSN_ERR_INTERNAL, "unknown error");
  }
}

void require_ptr(const void* p, const char* name) {
  if (p == nullptr) {
    throw lsnet::Error(lsnet::ErrorCode::kInvalidArgument,
                       std::string(name) + " must not be NULL");
  }
}

lsnet::CrossOffset cross(const double* v) { return {v[0], v[1], v[2], v[3]}; }

void store(const lsnet::CrossOffset& q, double* out) {
  out[0] = q.x_neg;
  out[1] = q.x_pos;
  out[2] = q.y_neg;
  out[3] = q.y_pos;
}

lsnet::BoundingBox box(const double* v) { return {v[0], v[1], v[2], v[3]}; }

void store(const lsnet::BoundingBox& b, double* out) {
  out[0] = b.x_min;
  out[1] = b.y_min;
  out[2] = b.x_max;
  out[3] = b.y_max;
}

std::vector<lsnet::CrossOffset> cross_list(const double* v, std::size_t n) {
  std::vector<lsnet::CrossOffset> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = cross(v + 4 * i);
  return out;
}

lsnet::KeypointInstance keypoints(const double* v, double scale) {
  lsnet::KeypointInstance k;
  k.scale = scale;
  for (std::size_t i = 0; i < lsnet::kKeypointCount; ++i) {
    const double vis = v[3 * i + 2];
    if (vis != 0.0 && vis != 1.0 && vis != 2.0) {
      throw lsnet::Error(lsnet::ErrorCode::kInvalidArgument,
                         "keypoint visibility must be 0, 1 or 2");
    }
    k.points.push_back({v[3 * i], v[3 * i + 1], static_cast<int>(vis)});
  }
  return k;
}

lsnet::FitConfig to_config(const lsn_fit_config& c) {
  lsnet::FitConfig out;
  switch (c.loss) {
    case LSN_LOSS_CROSS_IOU: out.loss = lsnet::LossKind::kCrossIou; break;
    case LSN_LOSS_SMOOTH_L1: out.loss = lsnet::LossKind::kSmoothL1; break;
    case LSN_LOSS_GIOU: out.loss = lsnet::LossKind::kGiou; break;
    default: lsnet::fail(lsnet::ErrorCode::kInvalidArgument, "unknown loss kind");
  }
  switch (c.optimizer) {
    case LSN_OPT_FIXED_STEP: out.optimizer = lsnet::OptimizerKind::kFixedStep; break;
    case LSN_OPT_ADAPTIVE: out.optimizer = lsnet::OptimizerKind::kAdaptive; break;
    default: lsnet::fail(lsnet::ErrorCode::kInvalidArgument, "unknown optimizer");
  }
  switch (c.box_style) {
    case LSN_BOX_EXTREME: out.box_style = lsnet::BoxStyle::kExtreme; break;
    case LSN_BOX_RECTANGLE: out.box_style = lsnet::BoxStyle::kRectangle; break;
    default: lsnet::fail(lsnet::ErrorCode::kInvalidArgument, "unknown box style");
  }
  switch (c.init) {
    case LSN_INIT_SEEDED: out.init = lsnet::InitMode::kSeeded; break;
    case LSN_INIT_AT_TARGET: out.init = lsnet::InitMode::kAtTarget; break;
    default: lsnet::fail(lsnet::ErrorCode::kInvalidArgument, "unknown init mode");
  }
  out.step_size = c.step_size;
  out.max_steps = static_cast<std::size_t>(c.max_steps);
  out.alpha = c.alpha;
  out.beta = c.beta;
  out.seed = c.seed;
  out.convergence_iou = c.convergence_iou;
  return out;
}

template <typename Enum, typename Core, typename Parse>
lsn_status parse_name(const char* name, Enum* out, Parse parse,
                      const char* what) {
  return guarded([&] {
    require_ptr(name, "name");
    require_ptr(out, "out");
    const std::optional<Core> v = parse(name);
    if (!v) {
      lsnet::fail(lsnet::ErrorCode::kInvalidArgument,
                  std::string("unknown ") + what + " '" + name + "'");
    }
    *out = static_cast<Enum>(static_cast<int>(*v));
  });
}

}  // namespace

extern "C" {

const char* lsn_version(void) { return "1.0.0"; }

const char* lsn_status_name(lsn_status status) {
  switch (status) {
    case LSN_OK: return "ok";
    case LSN_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case LSN_ERR_DEGENERATE_GEOMETRY: return "degenerate_geometry";
    case LSN_ERR_PARSE: return "parse_error";
    case LSN_ERR_IO: return "io_error";
    case LSN_ERR_UNSUPPORTED: return "unsupported";
    case LSN_ERR_NOT_FOUND: return "not_found";
    case LSN_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* lsn_last_error(void) { return g_last_error.c_str(); }

size_t lsn_last_parse_offset(void) { return g_last_parse_offset; }

lsn_status lsn_encode_offset(double dx, double dy, double out[4]) {
  return guarded([&] {
    require_ptr(out, "out");
    store(lsnet::encode_offset({dx, dy}), out);
  });
}

lsn_status lsn_soften_target(const double hard[4], double alpha, double out[4]) {
  return guarded([&] {
    require_ptr(hard, "hard");
    require_ptr(out, "out");
    store(lsnet::soften_target(cross(hard), alpha), out);
  });
}

lsn_status lsn_decode_offset(const double pred[4], double* dx, double* dy) {
  return guarded([&] {
    require_ptr(pred, "pred");
    require_ptr(dx, "dx");
    require_ptr(dy, "dy");
    const lsnet::OffsetVector d = lsnet::decode_offset(cross(pred));
    *dx = d.dx;
    *dy = d.dy;
  });
}

lsn_status lsn_cross_iou(const double q[4], const double q_star[4], double* out) {
  return guarded([&] {
    require_ptr(q, "q");
    require_ptr(q_star, "q_star");
    require_ptr(out, "out");
    *out = lsnet::cross_iou(cross(q), cross(q_star));
  });
}

lsn_status lsn_cross_iou_loss(const double* pred, const double* target,
                              size_t n_landmarks, double* value,
                              double* per_landmark) {
  return guarded([&] {
    require_ptr(pred, "pred");
    require_ptr(target, "target");
    require_ptr(value, "value");
    const lsnet::LossValue v = lsnet::cross_iou_loss(
        cross_list(pred, n_landmarks), cross_list(target, n_landmarks));
    *value = v.value;
    if (per_landmark != nullptr) {
      std::memcpy(per_landmark, v.per_landmark.data(),
                  v.per_landmark.size() * sizeof(double));
    }
  });
}

lsn_status lsn_cross_iou_grad(const double q[4], const double q_star[4],
                              double grad[4]) {
  return guarded([&] {
    require_ptr(q, "q");
    require_ptr(q_star, "q_star");
    require_ptr(grad, "grad");
    const auto g = lsnet::cross_iou_grad(cross(q), cross(q_star));
    std::memcpy(grad, g.data(), sizeof(double) * 4);
  });
}

lsn_status lsn_smooth_l1_loss(const double* pred, const double* target,
                              size_t n, double beta, double* out) {
  return guarded([&] {
    require_ptr(pred, "pred");
    require_ptr(target, "target");
    require_ptr(out, "out");
    *out = lsnet::smooth_l1_loss({pred, n}, {target, n}, beta);
  });
}

lsn_status lsn_box_iou(const double a[4], const double b[4], double* out) {
  return guarded([&] {
    require_ptr(a, "a");
    require_ptr(b, "b");
    require_ptr(out, "out");
    *out = lsnet::box_iou(box(a), box(b));
  });
}

lsn_status lsn_giou(const double a[4], const double b[4], double* out) {
  return guarded([&] {
    require_ptr(a, "a");
    require_ptr(b, "b");
    require_ptr(out, "out");
    *out = lsnet::giou(box(a), box(b));
  });
}

lsn_status lsn_rectangle_from_cross(const double offsets[16], double out[4]) {
  return guarded([&] {
    require_ptr(offsets, "offsets");
    require_ptr(out, "box");
    const std::vector<lsnet::CrossOffset> q = cross_list(offsets, 4);
    // top and bottom are vertical vectors, left and right horizontal.
    const bool rectangle =
        q[0].x_neg == 0.0 && q[0].x_pos == 0.0 && q[2].x_neg == 0.0 &&
        q[2].x_pos == 0.0 && q[1].y_neg == 0.0 && q[1].y_pos == 0.0 &&
        q[3].y_neg == 0.0 && q[3].y_pos == 0.0;
    if (!rectangle) {
      lsnet::fail(lsnet::ErrorCode::kUnsupported,
                  "giou supports rectangles only: expected straight top, "
                  "left, bottom, right vectors (no angled offsets)");
    }
    const lsnet::BoundingBox b{lsnet::decode_offset(q[1]).dx,
                               lsnet::decode_offset(q[0]).dy,
                               lsnet::decode_offset(q[3]).dx,
                               lsnet::decode_offset(q[2]).dy};
    if (!lsnet::is_valid(b)) {
      lsnet::fail(lsnet::ErrorCode::kInvalidArgument,
                  "rectangle vectors are inverted (left of right / top of bottom)");
    }
    store(b, out);
  });
}

lsn_status lsn_oks(const double pred[51], const double gt[51], double gt_scale,
                   double* out) {
  return guarded([&] {
    require_ptr(pred, "pred");
    require_ptr(gt, "gt");
    require_ptr(out, "out");
    *out = lsnet::oks(keypoints(pred, gt_scale), keypoints(gt, gt_scale));
  });
}

lsn_status lsn_kps_box(const double kps[51], double out[4]) {
  return guarded([&] {
    require_ptr(kps, "keypoints");
    require_ptr(out, "box");
    store(lsnet::kps_box(keypoints(kps, 1.0)), out);
  });
}

lsn_status lsn_dataset_read_file(const char* path, lsn_dataset** out) {
  return guarded([&] {
    require_ptr(path, "path");
    require_ptr(out, "out");
    *out = new lsn_dataset{lsnet::read_coco_file(path)};
  });
}

lsn_status lsn_dataset_parse(const char* bytes, size_t len, lsn_dataset** out) {
  return guarded([&] {
    require_ptr(bytes, "bytes");
    require_ptr(out, "out");
    *out = new lsn_dataset{lsnet::parse_coco({bytes, len})};
  });
}

lsn_status lsn_dataset_synth(size_t count, uint64_t seed, const char* family,
                             lsn_dataset** out) {
  return guarded([&] {
    require_ptr(family, "family");
    require_ptr(out, "out");
    const auto f = lsnet::shape_family_from_string(family);
    if (!f) {
      lsnet::fail(lsnet::ErrorCode::kInvalidArgument,
                  std::string("unknown shape family '") + family + "'");
    }
    *out = new lsn_dataset{lsnet::synth_shapes(count, seed, *f)};
  });
}

void lsn_dataset_free(lsn_dataset* dataset) { delete dataset; }

size_t lsn_dataset_size(const lsn_dataset* d) {
  return d ? d->data.records.size() : 0;
}

size_t lsn_dataset_skipped(const lsn_dataset* d) { return d ? d->data.skipped : 0; }

size_t lsn_dataset_multi_crossing(const lsn_dataset* d) {
  if (d == nullptr) return 0;
  if (d->multi_crossing == std::numeric_limits<std::size_t>::max()) {
    d->multi_crossing = lsnet::count_multi_crossing(d->data);
  }
  return d->multi_crossing;
}

lsn_status lsn_dataset_record_id(const lsn_dataset* d, size_t index, int64_t* id) {
  return guarded([&] {
    require_ptr(d, "dataset");
    require_ptr(id, "id");
    lsnet::require(index < d->data.records.size(), "record index out of range");
    *id = d->data.records[index].instance_id;
  });
}

lsn_status lsn_dataset_find(const lsn_dataset* d, int64_t id, size_t* index) {
  return guarded([&] {
    require_ptr(d, "dataset");
    require_ptr(index, "index");
    const auto& recs = d->data.records;
    for (std::size_t i = 0; i < recs.size(); ++i) {
      if (recs[i].instance_id == id) {
        *index = i;
        return;
      }
    }
    lsnet::fail(lsnet::ErrorCode::kNotFound,
                "no record with id " + std::to_string(id));
  });
}

lsn_status lsn_dataset_part_count(const lsn_dataset* d, size_t index,
                                  size_t* parts) {
  return guarded([&] {
    require_ptr(d, "dataset");
    require_ptr(parts, "parts");
    lsnet::require(index < d->data.records.size(), "record index out of range");
    *parts = d->data.records[index].parts.size();
  });
}

lsn_status lsn_dataset_keypoints(const lsn_dataset* d, size_t index,
                                 double out[51], double* scale) {
  return guarded([&] {
    require_ptr(d, "dataset");
    require_ptr(out, "out");
    require_ptr(scale, "scale");
    lsnet::require(index < d->data.records.size(), "record index out of range");
    const auto& rec = d->data.records[index];
    if (!rec.keypoints) {
      lsnet::fail(lsnet::ErrorCode::kNotFound,
                  "record " + std::to_string(rec.instance_id) + " has no keypoints");
    }
    for (std::size_t i = 0; i < lsnet::kKeypointCount; ++i) {
      const lsnet::Keypoint& k = rec.keypoints->points[i];
      out[3 * i] = k.x;
      out[3 * i + 1] = k.y;
      out[3 * i + 2] = k.visibility;
    }
    *scale = rec.keypoints->scale;
  });
}

lsn_status lsn_dataset_write(const lsn_dataset* d, char** bytes, size_t* len) {
  return guarded([&] {
    require_ptr(d, "dataset");
    require_ptr(bytes, "bytes");
    require_ptr(len, "len");
    const std::string s = lsnet::write_dataset(d->data);
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (buf == nullptr) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *bytes = buf;
    *len = s.size();
  });
}

void lsn_free_buffer(char* bytes) { std::free(bytes); }

void lsn_fit_config_default(lsn_fit_config* c) {
  if (c == nullptr) return;
  const lsnet::FitConfig d;
  c->loss = LSN_LOSS_CROSS_IOU;
  c->optimizer = LSN_OPT_ADAPTIVE;
  c->box_style = LSN_BOX_EXTREME;
  c->init = LSN_INIT_SEEDED;
  c->step_size = d.step_size;
  c->max_steps = d.max_steps;
  c->alpha = d.alpha;
  c->beta = d.beta;
  c->seed = d.seed;
  c->convergence_iou = d.convergence_iou;
}

const char* lsn_loss_kind_name(lsn_loss_kind kind) {
  switch (kind) {
    case LSN_LOSS_CROSS_IOU: return "cross_iou";
    case LSN_LOSS_SMOOTH_L1: return "smooth_l1";
    case LSN_LOSS_GIOU: return "giou";
  }
  return "unknown";
}

lsn_status lsn_loss_kind_parse(const char* name, lsn_loss_kind* out) {
  return parse_name<lsn_loss_kind, lsnet::LossKind>(
      name, out, lsnet::loss_kind_from_string, "loss kind");
}

const char* lsn_optimizer_name(lsn_optimizer kind) {
  return kind == LSN_OPT_ADAPTIVE ? "adaptive" : "fixed_step";
}

lsn_status lsn_optimizer_parse(const char* name, lsn_optimizer* out) {
  return parse_name<lsn_optimizer, lsnet::OptimizerKind>(
      name, out, lsnet::optimizer_from_string, "optimizer");
}

const char* lsn_box_style_name(lsn_box_style style) {
  return style == LSN_BOX_RECTANGLE ? "rectangle" : "extreme";
}

lsn_status lsn_box_style_parse(const char* name, lsn_box_style* out) {
  return parse_name<lsn_box_style, lsnet::BoxStyle>(
      name, out, lsnet::box_style_from_string, "box style");
}

const char* lsn_init_mode_name(lsn_init_mode mode) {
  return mode == LSN_INIT_AT_TARGET ? "at_target" : "seeded";
}

lsn_status lsn_init_mode_parse(const char* name, lsn_init_mode* out) {
  return parse_name<lsn_init_mode, lsnet::InitMode>(
      name, out, lsnet::init_mode_from_string, "init mode");
}

lsn_status lsn_fit(const lsn_fit_config* config, double anchor_x,
                   double anchor_y, const double* landmarks_xy,
                   size_t n_landmarks, lsn_role role, lsn_fit_report** out) {
  return guarded([&] {
    require_ptr(config, "config");
    require_ptr(landmarks_xy, "landmarks");
    require_ptr(out, "out");
    lsnet::LandmarkRole r;
    switch (role) {
      case LSN_ROLE_EXTREME: r = lsnet::LandmarkRole::kExtreme; break;
      case LSN_ROLE_CONTOUR: r = lsnet::LandmarkRole::kContour; break;
      case LSN_ROLE_KEYPOINTS: r = lsnet::LandmarkRole::kKeypoints; break;
      default: lsnet::fail(lsnet::ErrorCode::kInvalidArgument, "unknown role");
    }
    std::vector<lsnet::Point> pts(n_landmarks);
    for (std::size_t i = 0; i < n_landmarks; ++i) {
      pts[i] = {landmarks_xy[2 * i], landmarks_xy[2 * i + 1]};
    }
    const lsnet::LandmarkSet target({anchor_x, anchor_y}, std::move(pts), r);
    *out = new lsn_fit_report{lsnet::fit_offsets(target, to_config(*config))};
  });
}

lsn_status lsn_fit_generated(const lsn_fit_config* config, uint64_t target_seed,
                             double scale, lsn_fit_report** out) {
  return guarded([&] {
    require_ptr(config, "config");
    require_ptr(out, "out");
    *out = new lsn_fit_report{lsnet::fit_offsets(
        lsnet::extreme_target(target_seed, scale), to_config(*config))};
  });
}

void lsn_fit_report_free(lsn_fit_report* report) { delete report; }

size_t lsn_fit_report_steps(const lsn_fit_report* r) {
  return r ? r->report.steps_taken : 0;
}

size_t lsn_fit_report_trajectory(const lsn_fit_report* r, double* out,
                                 size_t capacity) {
  if (r == nullptr) return 0;
  const auto& t = r->report.loss_trajectory;
  if (out != nullptr) {
    std::memcpy(out, t.data(), std::min(capacity, t.size()) * sizeof(double));
  }
  return t.size();
}

double lsn_fit_report_final_iou(const lsn_fit_report* r) {
  return r ? r->report.final_decoded_iou : 0.0;
}

int lsn_fit_report_converged(const lsn_fit_report* r) {
  return r && r->report.converged ? 1 : 0;
}

double lsn_fit_report_target_scale(const lsn_fit_report* r) {
  return r ? r->report.target_scale : 0.0;
}

size_t lsn_fit_report_landmarks(const lsn_fit_report* r, double* xy,
                                size_t capacity) {
  if (r == nullptr) return 0;
  const auto& lm = r->report.final_landmarks;
  if (xy != nullptr) {
    for (std::size_t i = 0; i < std::min(capacity, lm.size()); ++i) {
      xy[2 * i] = lm[i].x;
      xy[2 * i + 1] = lm[i].y;
    }
  }
  return lm.size();
}

lsn_status lsn_scale_sweep(const lsn_fit_config* config, const double* scales,
                           size_t n_scales, lsn_sweep** out) {
  return guarded([&] {
    require_ptr(config, "config");
    require_ptr(out, "out");
    lsnet::require(scales != nullptr || n_scales == 0, "scales must not be NULL");
    const lsnet::FitConfig c = to_config(*config);
    auto entries = lsnet::scale_sweep(c.loss, {scales, n_scales}, c);
    auto sweep = std::make_unique<lsn_sweep>();
    for (auto& e : entries) {
      sweep->scales.push_back(e.scale);
      sweep->initial_losses.push_back(e.initial_loss);
      sweep->reports.push_back({std::move(e.report)});
    }
    *out = sweep.release();
  });
}

void lsn_sweep_free(lsn_sweep* sweep) { delete sweep; }

size_t lsn_sweep_size(const lsn_sweep* s) { return s ? s->scales.size() : 0; }

double lsn_sweep_scale(const lsn_sweep* s, size_t i) {
  return s && i < s->scales.size() ? s->scales[i] : 0.0;
}

double lsn_sweep_initial_loss(const lsn_sweep* s, size_t i) {
  return s && i < s->initial_losses.size() ? s->initial_losses[i] : 0.0;
}

const lsn_fit_report* lsn_sweep_report(const lsn_sweep* s, size_t i) {
  return s && i < s->reports.size() ? &s->reports[i] : nullptr;
}

lsn_status lsn_compare_losses(size_t corpus_size, uint64_t seed,
                              const lsn_fit_config* configs, size_t n_configs,
                              lsn_compare_row* rows) {
  return guarded([&] {
    require_ptr(configs, "configs");
    require_ptr(rows, "rows");
    std::vector<lsnet::FitConfig> cs;
    for (std::size_t i = 0; i < n_configs; ++i) cs.push_back(to_config(configs[i]));
    const auto out = lsnet::compare_losses(corpus_size, seed, cs);
    for (std::size_t i = 0; i < out.size(); ++i) {
      rows[i].loss = configs[i].loss;
      rows[i].box_style = configs[i].box_style;
      rows[i].targets = out[i].targets;
      rows[i].converged = out[i].converged;
      rows[i].convergence_rate = out[i].convergence_rate;
      rows[i].mean_final_iou = out[i].mean_final_iou;
    }
  });
}

lsn_status lsn_quantize(const lsn_dataset* d, const size_t* n_values,
                        size_t n_count, int max_dim, unsigned threads,
                        lsn_quant_row* rows) {
  return guarded([&] {
    require_ptr(d, "dataset");
    require_ptr(n_values, "n_values");
    require_ptr(rows, "rows");
    std::vector<lsnet::PolygonParts> instances;
    std::size_t without_parts = 0;
    for (const auto& rec : d->data.records) {
      if (rec.parts.empty()) {
        ++without_parts;
      } else {
        instances.push_back(rec.parts);
      }
    }
    if (instances.empty()) {
      lsnet::fail(lsnet::ErrorCode::kInvalidArgument,
                  "dataset has no polygon instances to quantize");
    }
    lsnet::QuantizationOptions opts;
    opts.max_dim = max_dim;
    opts.threads = threads;
    const auto out = lsnet::quantization_report(
        instances, std::span<const std::size_t>(n_values, n_count), opts);
    for (std::size_t i = 0; i < out.size(); ++i) {
      rows[i] = {out[i].n, out[i].ap, out[i].mean_iou, out[i].instances,
                 out[i].skipped + without_parts};
    }
  });
}

}  // extern "C"
