// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors
//
// lsnet: command-line front-end over liblsnet.
//
//   lsnet loss     --pred .. --target .. [--loss cross_iou|smooth_l1|giou]
//   lsnet fit      [--scale S | --sweep S1,S2,..] [FitConfig flags]
//   lsnet compare  [--corpus N] [FitConfig flags]
//   lsnet quantize (--annotations FILE | --synth-count N) [--n 18,36,72]
//   lsnet oks      --pred FILE --gt FILE
//   lsnet synth    --count N --seed S --family F --output FILE
//
// Every command writes a JSON report to stdout (or --report FILE) and, with
// --csv FILE, a CSV table of the report rows.
// Exit codes: 0 success, 1 runtime or data failure, 2 usage error.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsnet/lsnet.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuntimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(lsn_status s, const std::string& what) {
  if (s != LSN_OK) {
    throw RuntimeError(what + ": " + lsn_status_name(s) + ": " + lsn_last_error());
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using DatasetPtr = std::unique_ptr<lsn_dataset, Deleter<lsn_dataset, lsn_dataset_free>>;
using SweepPtr = std::unique_ptr<lsn_sweep, Deleter<lsn_sweep, lsn_sweep_free>>;

// Shortest round-trip text for a double.
std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

// Parses numbers separated by commas, semicolons or whitespace.
std::vector<double> parse_numbers(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || c == ';' || c == ' ' || c == '\t' || c == '\n') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ',' && text[j] != ';' && text[j] != ' ' &&
           text[j] != '\t' && text[j] != '\n') {
      ++j;
    }
    const char* first = text.data() + i;
    const char* last = text.data() + j;
    if (*first == '+') ++first;
    double v = 0.0;
    const auto r = std::from_chars(first, last, v);
    if (r.ec != std::errc() || r.ptr != last) {
      throw UsageError(std::string(flag) + ": malformed number '" +
                       text.substr(i, j - i) + "'");
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

std::vector<std::size_t> parse_counts(const std::string& text, const char* flag) {
  std::vector<std::size_t> out;
  for (double v : parse_numbers(text, flag)) {
    if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
      throw UsageError(std::string(flag) + ": expected non-negative integers");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RuntimeError("cannot write " + path);
  out << bytes;
  if (!out) throw RuntimeError("write failed: " + path);
}

// Common output flags.
struct Output {
  std::string report;
  std::string csv;
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--report", out.report, "JSON report path (default: stdout)");
  cmd->add_option("--csv", out.csv, "CSV sidecar path");
}

std::string csv_cell(const ordered_json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

// Emits the report and the CSV table of `columns` taken from each row.
void emit(const ordered_json& report, const Output& out,
          const std::vector<std::string>& columns) {
  const std::string text = report.dump(2) + "\n";
  if (out.report.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_file(out.report, text);
  }
  if (out.csv.empty()) return;
  std::string csv;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    csv += (i ? "," : "") + columns[i];
  }
  csv += "\n";
  for (const auto& row : report["rows"]) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      csv += (i ? "," : "") + csv_cell(row.at(columns[i]));
    }
    csv += "\n";
  }
  write_file(out.csv, csv);
}

ordered_json new_report(const char* command, ordered_json config) {
  ordered_json r;
  r["command"] = command;
  r["schema_version"] = kSchemaVersion;
  r["config_echo"] = std::move(config);
  r["rows"] = ordered_json::array();
  return r;
}

// ---- FitConfig flags -------------------------------------------------------

struct FitFlags {
  std::string loss = "cross_iou";
  std::string optimizer = "adaptive";
  std::string box_style = "extreme";
  std::string init = "seeded";
  lsn_fit_config config{};

  FitFlags() { lsn_fit_config_default(&config); }

  void add(CLI::App* cmd) {
    cmd->add_option("--loss", loss, "cross_iou | smooth_l1 | giou")
        ->capture_default_str();
    cmd->add_option("--optimizer", optimizer, "fixed_step | adaptive")
        ->capture_default_str();
    cmd->add_option("--box-style", box_style, "extreme | rectangle")
        ->capture_default_str();
    cmd->add_option("--init", init, "seeded | at_target")->capture_default_str();
    cmd->add_option("--step-size", config.step_size, "optimizer step size")
        ->capture_default_str();
    cmd->add_option("--max-steps", config.max_steps, "step budget")
        ->capture_default_str();
    cmd->add_option("--alpha", config.alpha, "cross-IoU target softening")
        ->capture_default_str();
    cmd->add_option("--beta", config.beta, "smooth-l1 transition point")
        ->capture_default_str();
    cmd->add_option("--seed", config.seed, "seed")->capture_default_str();
    cmd->add_option("--convergence-iou", config.convergence_iou,
                    "decoded-box IoU counted as converged")
        ->capture_default_str();
  }

  // Resolves enum names; unknown names are usage errors.
  void resolve() {
    if (lsn_loss_kind_parse(loss.c_str(), &config.loss) != LSN_OK ||
        lsn_optimizer_parse(optimizer.c_str(), &config.optimizer) != LSN_OK ||
        lsn_box_style_parse(box_style.c_str(), &config.box_style) != LSN_OK ||
        lsn_init_mode_parse(init.c_str(), &config.init) != LSN_OK) {
      throw UsageError(lsn_last_error());
    }
  }

  ordered_json echo() const {
    ordered_json j;
    j["loss"] = lsn_loss_kind_name(config.loss);
    j["optimizer"] = lsn_optimizer_name(config.optimizer);
    j["box_style"] = lsn_box_style_name(config.box_style);
    j["init"] = lsn_init_mode_name(config.init);
    j["step_size"] = config.step_size;
    j["max_steps"] = config.max_steps;
    j["alpha"] = config.alpha;
    j["beta"] = config.beta;
    j["seed"] = config.seed;
    j["convergence_iou"] = config.convergence_iou;
    return j;
  }
};

// ---- loss ------------------------------------------------------------------

struct LossCmd {
  std::string pred;
  std::string target;
  std::string loss = "cross_iou";
  double alpha = 0.2;
  bool soften = false;
  double beta = 1.0;
  Output out;
};

const std::vector<std::string> kLossColumns = {"landmark", "metric", "loss"};

int run_loss(const LossCmd& c) {
  lsn_loss_kind kind;
  if (lsn_loss_kind_parse(c.loss.c_str(), &kind) != LSN_OK) {
    throw UsageError(lsn_last_error());
  }
  const std::vector<double> pred = parse_numbers(c.pred, "--pred");
  std::vector<double> target = parse_numbers(c.target, "--target");
  if (pred.empty() || pred.size() % 4 != 0) {
    throw UsageError("--pred: expected groups of 4 offsets [x_neg,x_pos,y_neg,y_pos]");
  }
  if (target.size() != pred.size()) {
    throw UsageError("--target: expected as many offsets as --pred");
  }
  if (c.soften && !(c.alpha > 0.0 && c.alpha < 1.0)) {
    throw UsageError("--alpha: must lie in (0, 1)");
  }
  const std::size_t n = pred.size() / 4;

  ordered_json config;
  config["loss"] = lsn_loss_kind_name(kind);
  config["pred"] = pred;
  config["target"] = target;
  config["soften_target"] = c.soften;
  config["alpha"] = c.alpha;
  config["beta"] = c.beta;
  config["seed"] = nullptr;
  if (c.soften) {
    for (std::size_t i = 0; i < n; ++i) {
      check(lsn_soften_target(&target[4 * i], c.alpha, &target[4 * i]), "soften target");
    }
  }
  ordered_json report = new_report("loss", std::move(config));
  ordered_json& rows = report["rows"];

  double value = 0.0;
  switch (kind) {
    case LSN_LOSS_CROSS_IOU: {
      std::vector<double> per(n);
      check(lsn_cross_iou_loss(pred.data(), target.data(), n, &value, per.data()),
            "cross-iou loss");
      for (std::size_t i = 0; i < n; ++i) {
        rows.push_back({{"landmark", i}, {"metric", per[i]}, {"loss", 1.0 - per[i]}});
      }
      report["metric_name"] = "cross_iou";
      break;
    }
    case LSN_LOSS_SMOOTH_L1: {
      // Regresses the decoded (dx, dy) vectors.
      std::vector<double> p(2 * n), t(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        check(lsn_decode_offset(&pred[4 * i], &p[2 * i], &p[2 * i + 1]), "decode");
        check(lsn_decode_offset(&target[4 * i], &t[2 * i], &t[2 * i + 1]), "decode");
      }
      check(lsn_smooth_l1_loss(p.data(), t.data(), 2 * n, c.beta, &value),
            "smooth-l1 loss");
      for (std::size_t i = 0; i < n; ++i) {
        double li = 0.0;
        check(lsn_smooth_l1_loss(&p[2 * i], &t[2 * i], 2, c.beta, &li), "smooth-l1");
        rows.push_back({{"landmark", i}, {"metric", li}, {"loss", li}});
      }
      report["metric_name"] = "smooth_l1";
      break;
    }
    case LSN_LOSS_GIOU: {
      if (n != 4) {
        throw RuntimeError(
            "giou supports rectangles only: expected exactly 4 straight vectors "
            "(top, left, bottom, right), got " + std::to_string(n) + " landmarks");
      }
      double pb[4], tb[4], g = 0.0;
      check(lsn_rectangle_from_cross(pred.data(), pb), "pred");
      check(lsn_rectangle_from_cross(target.data(), tb), "target");
      check(lsn_giou(pb, tb, &g), "giou");
      value = 1.0 - g;
      rows.push_back({{"landmark", nullptr}, {"metric", g}, {"loss", value}});
      report["metric_name"] = "giou";
      break;
    }
  }
  report["value"] = value;
  emit(report, c.out, kLossColumns);
  return 0;
}

// ---- fit -------------------------------------------------------------------

struct FitCmd {
  FitFlags fit;
  double scale = 100.0;
  std::string sweep;
  Output out;
};

const std::vector<std::string> kFitColumns = {
    "scale", "initial_loss", "initial_loss_ratio", "final_loss",
    "steps_taken", "converged", "final_iou", "target_scale"};

int run_fit(FitCmd& c) {
  c.fit.resolve();
  std::vector<double> scales;
  if (c.sweep.empty()) {
    scales.push_back(c.scale);
  } else {
    scales = parse_numbers(c.sweep, "--sweep");
    if (scales.empty()) throw UsageError("--sweep: expected at least one scale");
  }
  for (double s : scales) {
    if (!(s > 0.0)) throw UsageError("scales must be positive");
  }

  ordered_json config = c.fit.echo();
  config["scales"] = scales;
  config["mode"] = c.sweep.empty() ? "single" : "sweep";

  lsn_sweep* raw = nullptr;
  check(lsn_scale_sweep(&c.fit.config, scales.data(), scales.size(), &raw), "fit");
  const SweepPtr sweep(raw);

  ordered_json report = new_report("fit", std::move(config));
  ordered_json& rows = report["rows"];
  const double base = lsn_sweep_initial_loss(sweep.get(), 0);
  for (std::size_t i = 0; i < lsn_sweep_size(sweep.get()); ++i) {
    const lsn_fit_report* r = lsn_sweep_report(sweep.get(), i);
    std::vector<double> traj(lsn_fit_report_trajectory(r, nullptr, 0));
    lsn_fit_report_trajectory(r, traj.data(), traj.size());
    std::vector<double> xy(2 * lsn_fit_report_landmarks(r, nullptr, 0));
    lsn_fit_report_landmarks(r, xy.data(), xy.size() / 2);
    const double initial = lsn_sweep_initial_loss(sweep.get(), i);
    ordered_json row;
    row["scale"] = lsn_sweep_scale(sweep.get(), i);
    row["initial_loss"] = initial;
    row["initial_loss_ratio"] = base > 0.0 ? ordered_json(initial / base) : ordered_json();
    row["final_loss"] = traj.back();
    row["steps_taken"] = lsn_fit_report_steps(r);
    row["converged"] = lsn_fit_report_converged(r) != 0;
    row["final_iou"] = lsn_fit_report_final_iou(r);
    row["target_scale"] = lsn_fit_report_target_scale(r);
    row["final_landmarks"] = xy;
    row["loss_trajectory"] = traj;
    rows.push_back(std::move(row));
  }
  // Ratio of the last scale's initial loss to the first's.
  const double last = lsn_sweep_initial_loss(sweep.get(), scales.size() - 1);
  report["initial_loss_ratio"] = base > 0.0 ? ordered_json(last / base) : ordered_json();
  emit(report, c.out, kFitColumns);
  return 0;
}

// ---- compare ---------------------------------------------------------------

struct CompareCmd {
  FitFlags fit;
  std::size_t corpus = 100;
  Output out;
};

const std::vector<std::string> kCompareColumns = {
    "loss", "box_style", "targets", "converged", "convergence_rate",
    "mean_final_iou"};

int run_compare(CompareCmd& c) {
  c.fit.resolve();
  if (c.corpus == 0) throw UsageError("--corpus: must be positive");
  // One shared hyperparameter set across every loss.
  const std::pair<lsn_loss_kind, lsn_box_style> setups[] = {
      {LSN_LOSS_CROSS_IOU, LSN_BOX_EXTREME},
      {LSN_LOSS_SMOOTH_L1, LSN_BOX_EXTREME},
      {LSN_LOSS_SMOOTH_L1, LSN_BOX_RECTANGLE},
      {LSN_LOSS_GIOU, LSN_BOX_RECTANGLE}};
  std::vector<lsn_fit_config> configs;
  for (const auto& [loss, style] : setups) {
    lsn_fit_config cfg = c.fit.config;
    cfg.loss = loss;
    cfg.box_style = style;
    configs.push_back(cfg);
  }
  std::vector<lsn_compare_row> rows(configs.size());
  check(lsn_compare_losses(c.corpus, c.fit.config.seed, configs.data(),
                           configs.size(), rows.data()),
        "compare");

  ordered_json config = c.fit.echo();
  config.erase("loss");
  config.erase("box_style");
  config["corpus"] = c.corpus;
  ordered_json report = new_report("compare", std::move(config));
  for (const lsn_compare_row& r : rows) {
    report["rows"].push_back({{"loss", lsn_loss_kind_name(r.loss)},
                              {"box_style", lsn_box_style_name(r.box_style)},
                              {"targets", r.targets},
                              {"converged", r.converged},
                              {"convergence_rate", r.convergence_rate},
                              {"mean_final_iou", r.mean_final_iou}});
  }
  emit(report, c.out, kCompareColumns);
  return 0;
}

// ---- quantize --------------------------------------------------------------

struct QuantizeCmd {
  std::string annotations;
  std::size_t synth_count = 0;
  std::uint64_t seed = 0;
  std::string family = "convex";
  std::string n_list = "18,36,72";
  int max_dim = 512;
  unsigned threads = 0;
  Output out;
};

const std::vector<std::string> kQuantizeColumns = {"n", "ap", "mean_iou",
                                                   "instances", "skipped"};

int run_quantize(const QuantizeCmd& c) {
  const bool from_file = !c.annotations.empty();
  if (from_file == (c.synth_count > 0)) {
    throw UsageError("give exactly one of --annotations or --synth-count");
  }
  const std::vector<std::size_t> ns = parse_counts(c.n_list, "--n");
  if (ns.empty()) throw UsageError("--n: expected at least one landmark count");
  for (std::size_t n : ns) {
    if (n < 3) throw UsageError("--n: landmark counts must be >= 3");
  }
  if (c.max_dim < 8) throw UsageError("--max-dim: must be at least 8");

  lsn_dataset* raw = nullptr;
  ordered_json config;
  if (from_file) {
    check(lsn_dataset_read_file(c.annotations.c_str(), &raw), "read annotations");
    config["source"] = "annotations";
    config["annotations"] = c.annotations;
    config["seed"] = nullptr;
  } else {
    const lsn_status s =
        lsn_dataset_synth(c.synth_count, c.seed, c.family.c_str(), &raw);
    if (s == LSN_ERR_INVALID_ARGUMENT) throw UsageError(lsn_last_error());
    check(s, "synth");
    config["source"] = "synth";
    config["synth_count"] = c.synth_count;
    config["family"] = c.family;
    config["seed"] = c.seed;
  }
  const DatasetPtr data(raw);
  config["n"] = ns;
  config["max_dim"] = c.max_dim;
  config["threads"] = c.threads;

  std::vector<lsn_quant_row> rows(ns.size());
  check(lsn_quantize(data.get(), ns.data(), ns.size(), c.max_dim, c.threads,
                     rows.data()),
        "quantize");
  ordered_json report = new_report("quantize", std::move(config));
  report["records"] = lsn_dataset_size(data.get());
  report["skipped_on_load"] = lsn_dataset_skipped(data.get());
  for (const lsn_quant_row& r : rows) {
    report["rows"].push_back({{"n", r.n},
                              {"ap", r.ap},
                              {"mean_iou", r.mean_iou},
                              {"instances", r.instances},
                              {"skipped", r.skipped}});
  }
  emit(report, c.out, kQuantizeColumns);
  return 0;
}

// ---- oks -------------------------------------------------------------------

struct OksCmd {
  std::string pred;
  std::string gt;
  Output out;
};

const std::vector<std::string> kOksColumns = {"id", "oks"};

std::vector<std::int64_t> keypoint_ids(const lsn_dataset* d) {
  std::vector<std::int64_t> ids;
  double kps[51];
  double scale = 0.0;
  for (std::size_t i = 0; i < lsn_dataset_size(d); ++i) {
    if (lsn_dataset_keypoints(d, i, kps, &scale) != LSN_OK) continue;
    std::int64_t id = 0;
    check(lsn_dataset_record_id(d, i, &id), "record id");
    ids.push_back(id);
  }
  return ids;
}

int run_oks(const OksCmd& c) {
  lsn_dataset* raw = nullptr;
  check(lsn_dataset_read_file(c.pred.c_str(), &raw), "read --pred");
  const DatasetPtr pred(raw);
  check(lsn_dataset_read_file(c.gt.c_str(), &raw), "read --gt");
  const DatasetPtr gt(raw);

  const std::vector<std::int64_t> gt_ids = keypoint_ids(gt.get());
  const std::vector<std::int64_t> pred_ids = keypoint_ids(pred.get());
  std::vector<std::int64_t> missing_pred, missing_gt;
  for (std::int64_t id : gt_ids) {
    if (std::find(pred_ids.begin(), pred_ids.end(), id) == pred_ids.end()) {
      missing_pred.push_back(id);
    }
  }
  for (std::int64_t id : pred_ids) {
    if (std::find(gt_ids.begin(), gt_ids.end(), id) == gt_ids.end()) {
      missing_gt.push_back(id);
    }
  }
  if (!missing_pred.empty() || !missing_gt.empty()) {
    std::string msg = "instance ids do not match";
    auto list = [&](const char* label, const std::vector<std::int64_t>& ids) {
      if (ids.empty()) return;
      msg += std::string("; ") + label + ":";
      for (std::int64_t id : ids) msg += " " + std::to_string(id);
    };
    list("missing from --pred", missing_pred);
    list("missing from --gt", missing_gt);
    throw RuntimeError(msg);
  }
  if (gt_ids.empty()) throw RuntimeError("no keypoint instances in --gt");

  ordered_json config;
  config["pred"] = c.pred;
  config["gt"] = c.gt;
  config["seed"] = nullptr;
  ordered_json report = new_report("oks", std::move(config));
  double sum = 0.0;
  for (std::int64_t id : gt_ids) {
    std::size_t gi = 0, pi = 0;
    check(lsn_dataset_find(gt.get(), id, &gi), "find");
    check(lsn_dataset_find(pred.get(), id, &pi), "find");
    double g[51], p[51], scale = 0.0, unused = 0.0, value = 0.0;
    check(lsn_dataset_keypoints(gt.get(), gi, g, &scale), "gt keypoints");
    check(lsn_dataset_keypoints(pred.get(), pi, p, &unused), "pred keypoints");
    check(lsn_oks(p, g, scale, &value), "oks for id " + std::to_string(id));
    sum += value;
    report["rows"].push_back({{"id", id}, {"oks", value}});
  }
  report["mean_oks"] = sum / static_cast<double>(gt_ids.size());
  emit(report, c.out, kOksColumns);
  return 0;
}

// ---- synth -----------------------------------------------------------------

struct SynthCmd {
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string family = "convex";
  std::string output;
  Output out;
};

const std::vector<std::string> kSynthColumns = {"family", "count", "seed",
                                                "multi_crossing", "output"};

int run_synth(const SynthCmd& c) {
  if (c.count == 0) throw UsageError("--count: must be positive");
  lsn_dataset* raw = nullptr;
  const lsn_status s = lsn_dataset_synth(c.count, c.seed, c.family.c_str(), &raw);
  if (s == LSN_ERR_INVALID_ARGUMENT) throw UsageError(lsn_last_error());
  check(s, "synth");
  const DatasetPtr data(raw);

  char* bytes = nullptr;
  std::size_t len = 0;
  check(lsn_dataset_write(data.get(), &bytes, &len), "serialize");
  const std::string text(bytes, len);
  lsn_free_buffer(bytes);
  write_file(c.output, text);

  const std::size_t multi = lsn_dataset_multi_crossing(data.get());
  ordered_json config;
  config["count"] = c.count;
  config["seed"] = c.seed;
  config["family"] = c.family;
  config["output"] = c.output;
  ordered_json report = new_report("synth", std::move(config));
  report["rows"].push_back({{"family", c.family},
                            {"count", c.count},
                            {"seed", c.seed},
                            {"multi_crossing", multi},
                            {"output", c.output}});
  report["multi_crossing"] = multi;
  report["note"] =
      multi > 0 ? std::to_string(multi) +
                      " instances have a ray from the anchor crossing the "
                      "boundary 3 or more times"
                : "no multi-crossing instances";
  emit(report, c.out, kSynthColumns);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lsnet: landmark-offset regression experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lsn_version()));

  LossCmd loss;
  CLI::App* loss_cmd = app.add_subcommand("loss", "evaluate a loss on given offsets");
  loss_cmd->add_option("--pred", loss.pred, "predicted offsets, 4 per landmark")
      ->required();
  loss_cmd->add_option("--target", loss.target, "target offsets, 4 per landmark")
      ->required();
  loss_cmd->add_option("--loss", loss.loss, "cross_iou | smooth_l1 | giou")
      ->capture_default_str();
  loss_cmd->add_flag("--soften", loss.soften, "soften the target with --alpha");
  loss_cmd->add_option("--alpha", loss.alpha, "softening factor")
      ->capture_default_str();
  loss_cmd->add_option("--beta", loss.beta, "smooth-l1 transition point")
      ->capture_default_str();
  add_output_flags(loss_cmd, loss.out);

  FitCmd fit;
  CLI::App* fit_cmd = app.add_subcommand("fit", "fit offsets to a seeded extreme-point target");
  fit.fit.add(fit_cmd);
  fit_cmd->add_option("--scale", fit.scale, "target scale (longest box side)")
      ->capture_default_str();
  fit_cmd->add_option("--sweep", fit.sweep, "comma-separated scales to sweep");
  add_output_flags(fit_cmd, fit.out);

  CompareCmd compare;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "compare losses over a seeded target corpus");
  compare.fit.add(compare_cmd);
  compare_cmd->add_option("--corpus", compare.corpus, "number of targets")
      ->capture_default_str();
  add_output_flags(compare_cmd, compare.out);

  QuantizeCmd quant;
  CLI::App* quant_cmd =
      app.add_subcommand("quantize", "mask AP of n-point contour approximations");
  quant_cmd->add_option("--annotations", quant.annotations, "COCO annotation file");
  quant_cmd->add_option("--synth-count", quant.synth_count, "synthetic corpus size");
  quant_cmd->add_option("--seed", quant.seed, "synthetic corpus seed")
      ->capture_default_str();
  quant_cmd->add_option("--family", quant.family, "convex | star | multi_part")
      ->capture_default_str();
  quant_cmd->add_option("--n", quant.n_list, "landmark counts")->capture_default_str();
  quant_cmd->add_option("--max-dim", quant.max_dim, "raster size")->capture_default_str();
  quant_cmd->add_option("--threads", quant.threads, "worker threads (0 = all)")
      ->capture_default_str();
  add_output_flags(quant_cmd, quant.out);

  OksCmd oks;
  CLI::App* oks_cmd = app.add_subcommand("oks", "object keypoint similarity per instance");
  oks_cmd->add_option("--pred", oks.pred, "predicted keypoints (COCO)")->required();
  oks_cmd->add_option("--gt", oks.gt, "ground-truth keypoints (COCO)")->required();
  add_output_flags(oks_cmd, oks.out);

  SynthCmd synth;
  CLI::App* synth_cmd = app.add_subcommand("synth", "write a seeded synthetic shape corpus");
  synth_cmd->add_option("--count", synth.count, "number of shapes")->required();
  synth_cmd->add_option("--seed", synth.seed, "seed")->capture_default_str();
  synth_cmd->add_option("--family", synth.family, "convex | star | multi_part")
      ->capture_default_str();
  synth_cmd->add_option("--output", synth.output, "COCO output path")->required();
  add_output_flags(synth_cmd, synth.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*loss_cmd) return run_loss(loss);
    if (*fit_cmd) return run_fit(fit);
    if (*compare_cmd) return run_compare(compare);
    if (*quant_cmd) return run_quantize(quant);
    if (*oks_cmd) return run_oks(oks);
    if (*synth_cmd) return run_synth(synth);
  } catch (const UsageError& e) {
    std::cerr << "lsnet: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "lsnet: error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
