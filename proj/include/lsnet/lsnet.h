/* SPDX-License-Identifier: Apache-2.0 */
/* Copyright 2026 The lsnet Authors */

/*
 * C interface to liblsnet.
 *
 * Every fallible call returns an lsn_status. On failure a description is
 * available from lsn_last_error() on the calling thread until the next
 * failing call on that thread. Objects returned through an out-pointer are
 * owned by the caller and released with the matching *_free function.
 *
 * Cross offsets are passed as 4 doubles in the order
 * [x_neg, x_pos, y_neg, y_pos]; boxes as [x_min, y_min, x_max, y_max];
 * keypoint instances as 51 doubles (x, y, visibility) x 17.
 */

#ifndef LSNET_LSNET_H_
#define LSNET_LSNET_H_

#include <stddef.h>
#include <stdint.h>

#if defined(LSNET_BUILDING_LIBRARY)
#define LSNET_API __attribute__((visibility("default")))
#else
#define LSNET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lsn_status {
  LSN_OK = 0,
  LSN_ERR_INVALID_ARGUMENT = 1,
  LSN_ERR_DEGENERATE_GEOMETRY = 2,
  LSN_ERR_PARSE = 3,
  LSN_ERR_IO = 4,
  LSN_ERR_UNSUPPORTED = 5,
  LSN_ERR_NOT_FOUND = 6,
  LSN_ERR_INTERNAL = 99
} lsn_status;

LSNET_API const char* lsn_version(void);
LSNET_API const char* lsn_status_name(lsn_status status);
LSNET_API const char* lsn_last_error(void);
/* Byte offset of the last LSN_ERR_PARSE failure on this thread. */
LSNET_API size_t lsn_last_parse_offset(void);

/* ---- cross-coordinate encoding ---------------------------------------- */

LSNET_API lsn_status lsn_encode_offset(double dx, double dy, double out[4]);
LSNET_API lsn_status lsn_soften_target(const double hard[4], double alpha,
                                       double out[4]);
LSNET_API lsn_status lsn_decode_offset(const double pred[4], double* dx,
                                       double* dy);

/* ---- losses ------------------------------------------------------------ */

LSNET_API lsn_status lsn_cross_iou(const double q[4], const double q_star[4],
                                   double* out);
/* pred and target hold n_landmarks * 4 values. per_landmark may be NULL,
 * otherwise it receives n_landmarks cross-IoU values. */
LSNET_API lsn_status lsn_cross_iou_loss(const double* pred,
                                        const double* target,
                                        size_t n_landmarks, double* value,
                                        double* per_landmark);
LSNET_API lsn_status lsn_cross_iou_grad(const double q[4],
                                        const double q_star[4],
                                        double grad[4]);
LSNET_API lsn_status lsn_smooth_l1_loss(const double* pred,
                                        const double* target, size_t n,
                                        double beta, double* out);
LSNET_API lsn_status lsn_box_iou(const double a[4], const double b[4],
                                 double* out);
LSNET_API lsn_status lsn_giou(const double a[4], const double b[4],
                              double* out);
/* Converts 4 cross offsets (top, left, bottom, right straight vectors from
 * the anchor) to a box relative to the anchor. Fails with
 * LSN_ERR_UNSUPPORTED when any vector is angled, i.e. when the landmarks do
 * not describe a rectangle. */
LSNET_API lsn_status lsn_rectangle_from_cross(const double offsets[16],
                                              double box[4]);

/* ---- keypoints --------------------------------------------------------- */

LSNET_API lsn_status lsn_oks(const double pred[51], const double gt[51],
                             double gt_scale, double* out);
LSNET_API lsn_status lsn_kps_box(const double keypoints[51], double box[4]);

/* ---- datasets ---------------------------------------------------------- */

typedef struct lsn_dataset lsn_dataset;

LSNET_API lsn_status lsn_dataset_read_file(const char* path,
                                           lsn_dataset** out);
LSNET_API lsn_status lsn_dataset_parse(const char* bytes, size_t len,
                                       lsn_dataset** out);
/* family: "convex", "star" or "multi_part". */
LSNET_API lsn_status lsn_dataset_synth(size_t count, uint64_t seed,
                                       const char* family, lsn_dataset** out);
LSNET_API void lsn_dataset_free(lsn_dataset* dataset);

LSNET_API size_t lsn_dataset_size(const lsn_dataset* dataset);
LSNET_API size_t lsn_dataset_skipped(const lsn_dataset* dataset);
/* Records where some ray from the anchor crosses the boundary >= 3 times. */
LSNET_API size_t lsn_dataset_multi_crossing(const lsn_dataset* dataset);
LSNET_API lsn_status lsn_dataset_record_id(const lsn_dataset* dataset,
                                           size_t index, int64_t* id);
LSNET_API lsn_status lsn_dataset_find(const lsn_dataset* dataset, int64_t id,
                                      size_t* index);
LSNET_API lsn_status lsn_dataset_part_count(const lsn_dataset* dataset,
                                            size_t index, size_t* parts);
/* LSN_ERR_NOT_FOUND when the record carries no keypoints. */
LSNET_API lsn_status lsn_dataset_keypoints(const lsn_dataset* dataset,
                                           size_t index, double out[51],
                                           double* scale);
/* COCO-layout serialization; release *bytes with lsn_free_buffer. */
LSNET_API lsn_status lsn_dataset_write(const lsn_dataset* dataset,
                                       char** bytes, size_t* len);
LSNET_API void lsn_free_buffer(char* bytes);

/* ---- fitting ----------------------------------------------------------- */

typedef enum lsn_loss_kind {
  LSN_LOSS_CROSS_IOU = 0,
  LSN_LOSS_SMOOTH_L1 = 1,
  LSN_LOSS_GIOU = 2
} lsn_loss_kind;

typedef enum lsn_optimizer {
  LSN_OPT_FIXED_STEP = 0,
  LSN_OPT_ADAPTIVE = 1
} lsn_optimizer;

typedef enum lsn_box_style {
  LSN_BOX_EXTREME = 0,
  LSN_BOX_RECTANGLE = 1
} lsn_box_style;

typedef enum lsn_init_mode {
  LSN_INIT_SEEDED = 0,
  LSN_INIT_AT_TARGET = 1
} lsn_init_mode;

typedef enum lsn_role {
  LSN_ROLE_EXTREME = 0,
  LSN_ROLE_CONTOUR = 1,
  LSN_ROLE_KEYPOINTS = 2
} lsn_role;

typedef struct lsn_fit_config {
  lsn_loss_kind loss;
  lsn_optimizer optimizer;
  lsn_box_style box_style;
  lsn_init_mode init;
  double step_size;
  uint64_t max_steps;
  double alpha;
  double beta;
  uint64_t seed;
  double convergence_iou;
} lsn_fit_config;

LSNET_API void lsn_fit_config_default(lsn_fit_config* config);

/* Name <-> enum helpers; names accept '-' or '_' separators. */
LSNET_API const char* lsn_loss_kind_name(lsn_loss_kind kind);
LSNET_API lsn_status lsn_loss_kind_parse(const char* name, lsn_loss_kind* out);
LSNET_API const char* lsn_optimizer_name(lsn_optimizer kind);
LSNET_API lsn_status lsn_optimizer_parse(const char* name, lsn_optimizer* out);
LSNET_API const char* lsn_box_style_name(lsn_box_style style);
LSNET_API lsn_status lsn_box_style_parse(const char* name, lsn_box_style* out);
LSNET_API const char* lsn_init_mode_name(lsn_init_mode mode);
LSNET_API lsn_status lsn_init_mode_parse(const char* name, lsn_init_mode* out);

typedef struct lsn_fit_report lsn_fit_report;

/* landmarks_xy holds n_landmarks (x, y) pairs. */
LSNET_API lsn_status lsn_fit(const lsn_fit_config* config, double anchor_x,
                             double anchor_y, const double* landmarks_xy,
                             size_t n_landmarks, lsn_role role,
                             lsn_fit_report** out);
/* Fits the seeded extreme-point target whose box has longest side scale. */
LSNET_API lsn_status lsn_fit_generated(const lsn_fit_config* config,
                                       uint64_t target_seed, double scale,
                                       lsn_fit_report** out);
LSNET_API void lsn_fit_report_free(lsn_fit_report* report);

LSNET_API size_t lsn_fit_report_steps(const lsn_fit_report* report);
/* Copies up to capacity values; returns the full trajectory length. */
LSNET_API size_t lsn_fit_report_trajectory(const lsn_fit_report* report,
                                           double* out, size_t capacity);
LSNET_API double lsn_fit_report_final_iou(const lsn_fit_report* report);
LSNET_API int lsn_fit_report_converged(const lsn_fit_report* report);
LSNET_API double lsn_fit_report_target_scale(const lsn_fit_report* report);
/* Copies up to capacity (x, y) pairs; returns the landmark count. */
LSNET_API size_t lsn_fit_report_landmarks(const lsn_fit_report* report,
                                          double* xy, size_t capacity);

typedef struct lsn_sweep lsn_sweep;

/* Uses config->loss; the target comes from config->seed. */
LSNET_API lsn_status lsn_scale_sweep(const lsn_fit_config* config,
                                     const double* scales, size_t n_scales,
                                     lsn_sweep** out);
LSNET_API void lsn_sweep_free(lsn_sweep* sweep);
LSNET_API size_t lsn_sweep_size(const lsn_sweep* sweep);
LSNET_API double lsn_sweep_scale(const lsn_sweep* sweep, size_t index);
LSNET_API double lsn_sweep_initial_loss(const lsn_sweep* sweep, size_t index);
/* Borrowed; valid until lsn_sweep_free. */
LSNET_API const lsn_fit_report* lsn_sweep_report(const lsn_sweep* sweep,
                                                 size_t index);

typedef struct lsn_compare_row {
  lsn_loss_kind loss;
  lsn_box_style box_style;
  size_t targets;
  size_t converged;
  double convergence_rate;
  double mean_final_iou;
} lsn_compare_row;

/* rows receives n_configs entries. */
LSNET_API lsn_status lsn_compare_losses(size_t corpus_size, uint64_t seed,
                                        const lsn_fit_config* configs,
                                        size_t n_configs,
                                        lsn_compare_row* rows);

/* ---- quantization study ------------------------------------------------ */

typedef struct lsn_quant_row {
  size_t n;
  double ap;
  double mean_iou;
  size_t instances;
  size_t skipped;
} lsn_quant_row;

/* rows receives n_count entries. Records without polygon parts count as
 * skipped. threads = 0 uses every hardware thread. */
LSNET_API lsn_status lsn_quantize(const lsn_dataset* dataset,
                                  const size_t* n_values, size_t n_count,
                                  int max_dim, unsigned threads,
                                  lsn_quant_row* rows);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* LSNET_LSNET_H_ */
