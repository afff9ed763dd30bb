// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "lsnet/ingest.hpp"
#include "lsnet/metrics.hpp"
#include "support/oracles.hpp"

namespace lsnet {
namespace {

using oracle::TestRng;

KeypointInstance random_person(TestRng& rng, double scale) {
  KeypointInstance k;
  k.scale = scale;
  for (std::size_t i = 0; i < kKeypointCount; ++i) {
    k.points.push_back({rng.uniform(0, 200), rng.uniform(0, 300), rng.integer(0, 2)});
  }
  k.points[0].visibility = 2;
  return k;
}

TEST(Oks, ExactPredictionScoresOne) {
  TestRng rng(1);
  const KeypointInstance gt = random_person(rng, 80);
  EXPECT_EQ(oks(gt, gt), 1.0);
}

TEST(Oks, FarPredictionsScoreZero) {
  TestRng rng(2);
  const KeypointInstance gt = random_person(rng, 10);
  KeypointInstance p = gt;
  for (Keypoint& k : p.points) k.x += 1e6;
  EXPECT_EQ(oks(p, gt), 0.0);
}

TEST(Oks, OneKeypointAtScaleTimesKappa) {
  for (std::size_t i = 0; i < kKeypointCount; ++i) {
    KeypointInstance gt;
    gt.scale = 37.5;
    gt.points.assign(kKeypointCount, Keypoint{0, 0, 0});
    gt.points[i] = {10, 20, 2};
    KeypointInstance p = gt;
    const double d = gt.scale * kOksKappa[i];
    p.points[i].x += d * 0.6;
    p.points[i].y -= d * 0.8;
    EXPECT_NEAR(oks(p, gt), std::exp(-0.5), 1e-9);
  }
}

TEST(Oks, InvisibleGroundTruthIgnored) {
  TestRng rng(3);
  KeypointInstance gt = random_person(rng, 50);
  KeypointInstance p = gt;
  for (std::size_t i = 0; i < kKeypointCount; ++i) {
    if (gt.points[i].visibility == 0) p.points[i].x += 500;
  }
  EXPECT_EQ(oks(p, gt), 1.0);
}

TEST(Oks, TranslationInvariant) {
  TestRng rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const KeypointInstance gt = random_person(rng, rng.uniform(5, 200));
    KeypointInstance p = gt;
    for (Keypoint& k : p.points) {
      k.x += rng.uniform(-10, 10);
      k.y += rng.uniform(-10, 10);
    }
    const double base = oks(p, gt);
    const double tx = rng.uniform(-1e3, 1e3), ty = rng.uniform(-1e3, 1e3);
    KeypointInstance gs = gt, ps = p;
    for (Keypoint& k : gs.points) { k.x += tx; k.y += ty; }
    for (Keypoint& k : ps.points) { k.x += tx; k.y += ty; }
    EXPECT_NEAR(oks(ps, gs), base, 1e-9);
  }
}

TEST(Oks, StrictlyDecreasesWithDistance) {
  TestRng rng(5);
  const KeypointInstance gt = random_person(rng, 60);
  double prev = 1.0;
  for (double d = 0.5; d < 20; d += 0.5) {
    KeypointInstance p = gt;
    p.points[0].x += d;
    const double v = oks(p, gt);
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(Oks, Preconditions) {
  TestRng rng(6);
  KeypointInstance gt = random_person(rng, 60);
  KeypointInstance bad = gt;
  bad.scale = 0;
  EXPECT_THROW(oks(gt, bad), Error);
  for (Keypoint& k : bad.points) k.visibility = 0;
  bad.scale = 5;
  EXPECT_THROW(oks(gt, bad), Error);
  bad.points.pop_back();
  EXPECT_THROW(oks(gt, bad), Error);
}

TEST(Thresholds, FiftyToNinetyFive) {
  const auto t = iou_thresholds();
  EXPECT_EQ(t.front(), 0.5);
  EXPECT_EQ(t.back(), 0.95);
  for (std::size_t k = 1; k < t.size(); ++k) EXPECT_NEAR(t[k] - t[k - 1], 0.05, 1e-15);
}

TEST(ApOverThresholds, Examples) {
  EXPECT_EQ(ap_over_thresholds(std::vector<double>{1.0, 1.0}).ap, 1.0);
  EXPECT_NEAR(ap_over_thresholds(std::vector<double>{1.0, 0.6}).ap, 0.65, 1e-15);
  EXPECT_EQ(ap_over_thresholds(std::vector<double>{0.49, 0.49}).ap, 0.0);
  EXPECT_THROW(ap_over_thresholds(std::vector<double>{}), Error);
}

TEST(ApOverThresholds, ThresholdIsInclusive) {
  const ThresholdSweep s = ap_over_thresholds(std::vector<double>{0.75});
  EXPECT_EQ(s.per_threshold_recall[5], 1.0);
  EXPECT_EQ(s.per_threshold_recall[6], 0.0);
}

TEST(ApOverThresholds, MatchesBruteForceAndIsMonotone) {
  TestRng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> ious(static_cast<std::size_t>(rng.integer(1, 40)));
    for (double& v : ious) v = rng.uniform(0.3, 1.0);
    double brute = 0;
    for (int k = 0; k < 10; ++k) {
      const double t = (50 + 5 * k) / 100.0;
      int hits = 0;
      for (double v : ious) hits += v >= t;
      brute += static_cast<double>(hits) / ious.size();
    }
    const double ap = ap_over_thresholds(ious).ap;
    EXPECT_NEAR(ap, brute / 10, 1e-12);
    auto raised = ious;
    raised[static_cast<std::size_t>(rng.integer(0, static_cast<int>(ious.size()) - 1))] += 0.1;
    EXPECT_GE(ap_over_thresholds(raised).ap, ap);
  }
}

std::vector<PolygonParts> regular_ngons(int sides, int count) {
  std::vector<PolygonParts> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Point> v;
    const double r = 20 + 7 * i;
    for (int k = 0; k < sides; ++k) {
      const double a = -std::numbers::pi / 2 + 2 * std::numbers::pi * k / sides;
      v.push_back({100 + r * std::cos(a), 100 + r * std::sin(a)});
    }
    out.push_back({PolygonContour(v)});
  }
  return out;
}

TEST(QuantizationReport, OwnNgonIsExact) {
  const auto corpus = regular_ngons(6, 8);
  const std::vector<std::size_t> n{6};
  const auto rows = quantization_report(corpus, n, {256, 1});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].ap, 1.0);
  EXPECT_GT(rows[0].mean_iou, 0.999999);
  EXPECT_EQ(rows[0].instances, 8u);
  EXPECT_EQ(rows[0].skipped, 0u);
}

TEST(QuantizationReport, ConvexCorpusImprovesWithN) {
  const Dataset d = synth_shapes(120, 2026, ShapeFamily::kConvex);
  std::vector<PolygonParts> corpus;
  for (const auto& r : d.records) corpus.push_back(r.parts);
  const std::vector<std::size_t> n{3, 9, 18, 36, 72};
  const auto rows = quantization_report(corpus, n);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i].mean_iou, rows[i - 1].mean_iou);
    EXPECT_GE(rows[i].ap, rows[i - 1].ap);
  }
  EXPECT_GE(rows[3].mean_iou, 0.97);
  EXPECT_LT(rows[0].ap, 0.5);
}

TEST(QuantizationReport, ThreadCountDoesNotChangeResults) {
  const Dataset d = synth_shapes(40, 9, ShapeFamily::kStar);
  std::vector<PolygonParts> corpus;
  for (const auto& r : d.records) corpus.push_back(r.parts);
  const std::vector<std::size_t> n{18, 36};
  const auto one = quantization_report(corpus, n, {128, 1});
  const auto four = quantization_report(corpus, n, {128, 4});
  for (std::size_t i = 0; i < n.size(); ++i) {
    EXPECT_EQ(one[i].ap, four[i].ap);
    EXPECT_EQ(one[i].mean_iou, four[i].mean_iou);
  }
}

TEST(QuantizationReport, MeanIouMatchesPerInstanceValues) {
  const auto corpus = regular_ngons(40, 5);
  const std::vector<std::size_t> n{12};
  const auto rows = quantization_report(corpus, n, {200, 2});
  double sum = 0;
  for (const auto& parts : corpus) sum += quantized_mask_iou(parts, 12, 200);
  EXPECT_NEAR(rows[0].mean_iou, sum / corpus.size(), 1e-15);
}

TEST(QuantizationReport, Preconditions) {
  const auto corpus = regular_ngons(5, 2);
  EXPECT_THROW(quantization_report(corpus, std::vector<std::size_t>{2}), Error);
  EXPECT_THROW(quantization_report(corpus, std::vector<std::size_t>{}), Error);
  EXPECT_THROW(quantization_report(std::vector<PolygonParts>{},
                                   std::vector<std::size_t>{4}),
               Error);
}

}  // namespace
}  // namespace lsnet
