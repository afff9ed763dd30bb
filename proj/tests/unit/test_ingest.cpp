// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#include <gtest/gtest.h>

#include <string>

#include "lsnet/ingest.hpp"
#include "support/oracles.hpp"

namespace lsnet {
namespace {

const char* kMinimal = R"({
  "images": [{"id": 1}],
  "annotations": [
    {"id": 10, "image_id": 1, "category_id": 3, "iscrowd": 0,
     "bbox": [1, 2, 4, 3],
     "segmentation": [[1, 2, 5, 2, 5, 5, 1, 5]],
     "future_field": {"anything": true}}
  ]
})";

TEST(ParseCoco, MinimalPolygon) {
  const Dataset d = parse_coco(kMinimal);
  ASSERT_EQ(d.records.size(), 1u);
  EXPECT_EQ(d.skipped, 0u);
  const AnnotationRecord& r = d.records[0];
  EXPECT_EQ(r.instance_id, 10);
  EXPECT_EQ(r.image_id, 1);
  EXPECT_EQ(r.category, 3);
  EXPECT_EQ(r.bbox, (BoundingBox{1, 2, 5, 5}));
  ASSERT_EQ(r.parts.size(), 1u);
  EXPECT_EQ(r.parts[0].size(), 4u);
  EXPECT_EQ(r.parts[0].area(), 12.0);
  EXPECT_FALSE(r.keypoints.has_value());
}

TEST(ParseCoco, RleAndCrowdAreSkipped) {
  const Dataset d = parse_coco(R"({"annotations": [
    {"id": 1, "bbox": [0, 0, 2, 2], "segmentation": {"counts": [1, 2], "size": [4, 4]}},
    {"id": 2, "iscrowd": 1, "bbox": [0, 0, 2, 2], "segmentation": [[0,0,1,0,1,1]]},
    {"id": 3, "bbox": [0, 0, 2, 2], "segmentation": [[0,0,2,0,2,2]]}
  ]})");
  ASSERT_EQ(d.records.size(), 1u);
  EXPECT_EQ(d.records[0].instance_id, 3);
  EXPECT_EQ(d.skipped, 2u);
}

TEST(ParseCoco, MultiPolygonBecomesParts) {
  const Dataset d = parse_coco(R"({"annotations": [
    {"id": 4, "segmentation": [[0,0,2,0,2,2], [5,5,6,5,6,6,5,6], [9,9,9,9,9,9]]}
  ]})");
  ASSERT_EQ(d.records.size(), 1u);
  EXPECT_EQ(d.records[0].parts.size(), 2u);  // collinear part dropped
  EXPECT_EQ(d.records[0].bbox, (BoundingBox{0, 0, 6, 6}));
}

TEST(ParseCoco, KeypointsScaleFromBoxArea) {
  std::string kps = "[";
  for (int i = 0; i < 17; ++i) kps += std::string(i ? "," : "") + "1,2,2";
  kps += "]";
  const Dataset d = parse_coco(R"({"annotations": [{"id": 7, "bbox": [0, 0, 8, 2],
      "keypoints": )" + kps + "}]}");
  ASSERT_TRUE(d.records[0].keypoints.has_value());
  EXPECT_EQ(d.records[0].keypoints->scale, 4.0);
  EXPECT_EQ(d.records[0].keypoints->points[16], (Keypoint{1, 2, 2}));
}

void expect_parse_error(const std::string& text, std::size_t offset) {
  try {
    parse_coco(text);
    FAIL() << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_EQ(e.byte_offset(), offset) << e.what();
  }
}

TEST(ParseCoco, StructuredErrors) {
  expect_parse_error(R"({"annotations": [)", 17);
  expect_parse_error("[1, 2]", 0);
  expect_parse_error(R"({"annotations": [{"bbox": [0,0,1,1]}]})", 0);
  expect_parse_error(R"({"annotations": [{"id": 1, "bbox": [0,0,-1,1]}]})", 0);
  expect_parse_error(R"({"annotations": [{"id": 1, "bbox": [0,0,1]}]})", 0);
  expect_parse_error(R"({"annotations": [{"id": 1, "keypoints": [1,2,2]}]})", 0);
  expect_parse_error(R"({"annotations": [{"id": 1, "bbox": [0,0,1,1]},
                                         {"id": 1, "bbox": [0,0,1,1]}]})", 0);
  expect_parse_error(R"({"annotations": [{"id": 1, "iscrowd": "yes"}]})", 0);
  expect_parse_error(R"({"annotations": [{"id": 1, "bbox": [0,0,1,1]} x]})", 46);
  expect_parse_error(R"({"annotations": [{"id": 1, "bbox": [0,"x",1,1]}]})", 0);
}

TEST(ReadCocoFile, MissingFileIsIoError) {
  try {
    read_coco_file("/nonexistent/annotations.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(WriteDataset, RoundTripPreservesGeometry) {
  for (ShapeFamily f : {ShapeFamily::kConvex, ShapeFamily::kStar, ShapeFamily::kMultiPart}) {
    const Dataset d = synth_shapes(40, 5, f);
    const Dataset back = parse_coco(write_dataset(d));
    ASSERT_EQ(back.records.size(), d.records.size());
    for (std::size_t i = 0; i < d.records.size(); ++i) {
      const auto& a = d.records[i];
      const auto& b = back.records[i];
      EXPECT_EQ(a.instance_id, b.instance_id);
      ASSERT_EQ(a.parts.size(), b.parts.size());
      for (std::size_t k = 0; k < a.parts.size(); ++k) {
        ASSERT_EQ(a.parts[k].size(), b.parts[k].size());
        for (std::size_t v = 0; v < a.parts[k].size(); ++v) {
          EXPECT_NEAR(a.parts[k].vertices()[v].x, b.parts[k].vertices()[v].x, 1e-9);
          EXPECT_NEAR(a.parts[k].vertices()[v].y, b.parts[k].vertices()[v].y, 1e-9);
        }
      }
      EXPECT_NEAR(a.bbox.x_max, b.bbox.x_max, 1e-9);
    }
  }
}

TEST(WriteDataset, KeypointVisibilitiesSurvive) {
  std::string kps = "[";
  for (int i = 0; i < 17; ++i) {
    kps += std::string(i ? "," : "") + std::to_string(i) + ",3," + std::to_string(i % 3);
  }
  kps += "]";
  const Dataset d = parse_coco(R"({"annotations": [{"id": 2, "bbox": [0, 0, 5, 5],
      "keypoints": )" + kps + "}]}");
  const Dataset back = parse_coco(write_dataset(d));
  EXPECT_EQ(back.records[0].keypoints->points, d.records[0].keypoints->points);
}

TEST(WriteDataset, EmptyDatasetIsValid) {
  const Dataset back = parse_coco(write_dataset(Dataset{}));
  EXPECT_TRUE(back.records.empty());
}

TEST(SynthShapes, DeterministicAndValid) {
  const std::string a = write_dataset(synth_shapes(1, 7, ShapeFamily::kConvex));
  const std::string b = write_dataset(synth_shapes(1, 7, ShapeFamily::kConvex));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, write_dataset(synth_shapes(1, 8, ShapeFamily::kConvex)));
  for (ShapeFamily f : {ShapeFamily::kConvex, ShapeFamily::kStar, ShapeFamily::kMultiPart}) {
    const Dataset d = synth_shapes(60, 21, f);
    ASSERT_EQ(d.records.size(), 60u);
    for (const auto& r : d.records) {
      for (const auto& p : r.parts) {
        EXPECT_GE(p.size(), 3u);
        EXPECT_GT(p.area(), 0.0);
        EXPECT_TRUE(is_simple(p.vertices()));
      }
      if (f == ShapeFamily::kMultiPart) EXPECT_GE(r.parts.size(), 2u);
    }
  }
}

TEST(SynthShapes, StarFamilyHasMultiCrossingConvexHasNone) {
  EXPECT_GT(count_multi_crossing(synth_shapes(50, 3, ShapeFamily::kStar)), 0u);
  EXPECT_EQ(count_multi_crossing(synth_shapes(50, 3, ShapeFamily::kConvex)), 0u);
}

TEST(ShapeFamily, Names) {
  EXPECT_EQ(shape_family_from_string("multi-part"), ShapeFamily::kMultiPart);
  EXPECT_EQ(shape_family_from_string(to_string(ShapeFamily::kStar)), ShapeFamily::kStar);
  EXPECT_FALSE(shape_family_from_string("blob").has_value());
}

TEST(RandomUnitConvex, LongestSideOneCentered) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const PolygonContour p = random_unit_convex(s, 10);
    const BoundingBox b = oracle::tight_box(p.vertices());
    EXPECT_NEAR(std::max(b.width(), b.height()), 1.0, 1e-12);
    EXPECT_NEAR(b.center().x, 0.0, 1e-12);
    EXPECT_NEAR(b.center().y, 0.0, 1e-12);
  }
}

}  // namespace
}  // namespace lsnet
