// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#ifndef LSNET_INGEST_HPP_
#define LSNET_INGEST_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsnet/landmarks.hpp"
#include "lsnet/types.hpp"

namespace lsnet {

struct AnnotationRecord {
  std::int64_t instance_id = 0;
  std::int64_t image_id = 0;
  std::int64_t category = 0;
  BoundingBox bbox;
  PolygonParts parts;
  std::optional<KeypointInstance> keypoints;
};

struct Dataset {
  std::vector<AnnotationRecord> records;
  std::string source;
  std::size_t skipped = 0;  // RLE, crowd, or otherwise unsupported entries
};

// Thrown by parse_coco; carries the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(std::size_t byte_offset, const std::string& what);
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Reads the COCO annotation layout. bbox [x, y, w, h] becomes corner form;
// each polygon list becomes one part (degenerate parts dropped); keypoints
// get scale = sqrt(bbox area). RLE and crowd annotations are counted in
// `skipped` and produce no record. Unknown fields are ignored.
Dataset parse_coco(std::string_view bytes, std::string source = "memory");
Dataset read_coco_file(const std::string& path);

// Serializes to the COCO layout with round-trip precision.
std::string write_dataset(const Dataset& d);

enum class ShapeFamily { kConvex, kStar, kMultiPart };

std::string_view to_string(ShapeFamily family);
std::optional<ShapeFamily> shape_family_from_string(std::string_view name);

// Seeded polygon corpora: convex (8-32 vertex convex polygons), star
// (concave radial shapes with leaning arms), multi_part (2-3 disjoint
// convex parts). Deterministic per (count, seed, family).
Dataset synth_shapes(std::size_t count, std::uint64_t seed, ShapeFamily family);

// A single random convex polygon with `vertices` corners whose tight box has
// longest side 1, centered on the origin.
PolygonContour random_unit_convex(std::uint64_t seed, int vertices);

// Records whose parts admit a ray from the anchor crossing the boundary at
// least three times.
std::size_t count_multi_crossing(const Dataset& d);

}  // namespace lsnet

#endif  // LSNET_INGEST_HPP_
