// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#include "lsnet/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "rng.hpp"

namespace lsnet {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string annotation_context(std::size_t index) {
  return "annotations[" + std::to_string(index) + "]: ";
}

double number_at(const json& arr, std::size_t i, std::size_t index,
                 const char* field) {
  const json& v = arr[i];
  if (!v.is_number()) {
    throw ParseError(0, annotation_context(index) + field +
                            " must contain only numbers");
  }
  return v.get<double>();
}

PolygonParts parse_polygons(const json& seg, std::size_t index) {
  PolygonParts parts;
  for (const json& poly : seg) {
    if (!poly.is_array()) {
      throw ParseError(0, annotation_context(index) +
                              "polygon segmentation must be a list of lists");
    }
    std::vector<Point> vertices;
    vertices.reserve(poly.size() / 2);
    for (std::size_t i = 0; i + 1 < poly.size(); i += 2) {
      vertices.push_back({number_at(poly, i, index, "segmentation"),
                          number_at(poly, i + 1, index, "segmentation")});
    }
    try {
      parts.emplace_back(std::move(vertices));
    } catch (const Error&) {
      // Zero-area or too-short rings carry no contour.
    }
  }
  return parts;
}

std::optional<KeypointInstance> parse_keypoints(const json& kps,
                                                const BoundingBox& bbox,
                                                std::size_t index) {
  if (!kps.is_array() || kps.size() != 3 * kKeypointCount) {
    throw ParseError(0, annotation_context(index) +
                            "keypoints must hold 51 numbers");
  }
  KeypointInstance k;
  k.points.reserve(kKeypointCount);
  for (std::size_t i = 0; i < kKeypointCount; ++i) {
    const double v = number_at(kps, 3 * i + 2, index, "keypoints");
    if (v != 0.0 && v != 1.0 && v != 2.0) {
      throw ParseError(0, annotation_context(index) +
                              "keypoint visibility must be 0, 1 or 2");
    }
    k.points.push_back({number_at(kps, 3 * i, index, "keypoints"),
                        number_at(kps, 3 * i + 1, index, "keypoints"),
                        static_cast<int>(v)});
  }
  const double area = bbox.area();
  if (!(area > 0.0)) return std::nullopt;
  k.scale = std::sqrt(area);
  return k;
}

// Valtr's construction: random convex polygon with exactly n vertices.
std::vector<Point> valtr_convex(detail::Rng& rng, int n) {
  std::vector<double> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = rng.uniform();
    ys[i] = rng.uniform();
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());

  auto chain = [&](const std::vector<double>& c) {
    std::vector<double> out;
    out.reserve(n);
    double last_a = c.front();
    double last_b = c.front();
    for (int i = 1; i + 1 < n; ++i) {
      if (rng.uniform() < 0.5) {
        out.push_back(c[i] - last_a);
        last_a = c[i];
      } else {
        out.push_back(last_b - c[i]);
        last_b = c[i];
      }
    }
    out.push_back(c.back() - last_a);
    out.push_back(last_b - c.back());
    return out;
  };
  const std::vector<double> vx = chain(xs);
  std::vector<double> vy = chain(ys);
  for (int i = n - 1; i > 0; --i) {
    std::swap(vy[i], vy[rng.uniform_int(0, i)]);
  }

  std::vector<Point> edges(n);
  for (int i = 0; i < n; ++i) edges[i] = {vx[i], vy[i]};
  std::sort(edges.begin(), edges.end(), [](const Point& a, const Point& b) {
    return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
  });

  std::vector<Point> pts(n);
  Point cursor;
  for (int i = 0; i < n; ++i) {
    pts[i] = cursor;
    cursor.x += edges[i].x;
    cursor.y += edges[i].y;
  }
  return pts;
}

// Rescales so the tight box has longest side `size`, centered on `center`.
std::vector<Point> fit_to(std::vector<Point> pts, double size, Point center) {
  BoundingBox b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const Point& p : pts) {
    b.x_min = std::min(b.x_min, p.x);
    b.y_min = std::min(b.y_min, p.y);
    b.x_max = std::max(b.x_max, p.x);
    b.y_max = std::max(b.y_max, p.y);
  }
  const Point c = b.center();
  const double s = size / std::max(b.width(), b.height());
  for (Point& p : pts) {
    p = {center.x + (p.x - c.x) * s, center.y + (p.y - c.y) * s};
  }
  return pts;
}

std::vector<Point> star_polygon(detail::Rng& rng) {
  const int arms = rng.uniform_int(5, 10);
  const double spacing = 2.0 * std::numbers::pi / arms;
  for (int attempt = 0; attempt < 64; ++attempt) {
    // Later attempts lean less, so a simple polygon is always reached.
    const double max_lean = attempt < 48 ? 0.65 : 0.0;
    std::vector<Point> pts;
    pts.reserve(2 * arms);
    for (int i = 0; i < arms; ++i) {
      const double base = i * spacing;
      const double outer = rng.uniform(0.7, 1.0);
      const double inner = outer * rng.uniform(0.2, 0.45);
      const double lean = rng.uniform(0.0, max_lean);
      pts.push_back({inner * std::cos(base), inner * std::sin(base)});
      const double tip = base + spacing * (0.5 + lean);
      pts.push_back({outer * std::cos(tip), outer * std::sin(tip)});
    }
    if (is_simple(pts)) return pts;
  }
  fail(ErrorCode::kDegenerateGeometry, "star generator failed to converge");
}

}  // namespace

ParseError::ParseError(std::size_t byte_offset, const std::string& what)
    : Error(ErrorCode::kParse,
            "parse error at byte " + std::to_string(byte_offset) + ": " + what),
      byte_offset_(byte_offset) {}

namespace {

Dataset build_dataset(const json& root, std::string source) {
  if (!root.is_object() || !root.contains("annotations") ||
      !root["annotations"].is_array()) {
    throw ParseError(0, "top-level object with an 'annotations' array expected");
  }

  Dataset d;
  d.source = std::move(source);
  std::unordered_set<std::int64_t> ids;
  const json& anns = root["annotations"];
  d.records.reserve(anns.size());
  for (std::size_t index = 0; index < anns.size(); ++index) {
    const json& a = anns[index];
    if (!a.is_object() || !a.contains("id") || !a["id"].is_number_integer()) {
      throw ParseError(0, annotation_context(index) + "integer 'id' required");
    }
    if (a.value("iscrowd", 0) != 0) {
      ++d.skipped;
      continue;
    }
    AnnotationRecord rec;
    rec.instance_id = a["id"].get<std::int64_t>();
    rec.image_id = a.value("image_id", std::int64_t{0});
    rec.category = a.value("category_id", std::int64_t{0});

    if (a.contains("segmentation")) {
      const json& seg = a["segmentation"];
      if (seg.is_object()) {  // run-length encoded
        ++d.skipped;
        continue;
      }
      if (seg.is_array()) rec.parts = parse_polygons(seg, index);
    }

    bool have_box = false;
    if (a.contains("bbox") && !a["bbox"].is_null()) {
      const json& b = a["bbox"];
      if (!b.is_array() || b.size() != 4) {
        throw ParseError(0, annotation_context(index) + "bbox must hold 4 numbers");
      }
      const double x = number_at(b, 0, index, "bbox");
      const double y = number_at(b, 1, index, "bbox");
      const double w = number_at(b, 2, index, "bbox");
      const double h = number_at(b, 3, index, "bbox");
      if (w < 0.0 || h < 0.0) {
        throw ParseError(0, annotation_context(index) + "bbox has negative size");
      }
      rec.bbox = {x, y, x + w, y + h};
      have_box = true;
    } else if (!rec.parts.empty()) {
      rec.bbox = bounds_of(rec.parts);
      have_box = true;
    }

    if (a.contains("keypoints") && !a["keypoints"].is_null()) {
      rec.keypoints = parse_keypoints(a["keypoints"], rec.bbox, index);
    }
    if (!have_box && !rec.keypoints) {
      ++d.skipped;
      continue;
    }
    if (!ids.insert(rec.instance_id).second) {
      throw ParseError(0, annotation_context(index) + "duplicate id " +
                              std::to_string(rec.instance_id));
    }
    d.records.push_back(std::move(rec));
  }
  return d;
}

}  // namespace

Dataset parse_coco(std::string_view bytes, std::string source) {
  json root;
  try {
    root = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    // json counts bytes read; report the 0-based offset of the failure.
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, e.what());
  }
  try {
    return build_dataset(root, std::move(source));
  } catch (const json::exception& e) {
    throw ParseError(0, e.what());
  }
}

Dataset read_coco_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(ErrorCode::kIo, "cannot read " + path);
  return parse_coco(buf.str(), path);
}

std::string write_dataset(const Dataset& d) {
  std::set<std::int64_t> images;
  std::set<std::int64_t> categories;
  ordered_json anns = ordered_json::array();
  for (const AnnotationRecord& r : d.records) {
    images.insert(r.image_id);
    categories.insert(r.category);
    ordered_json a;
    a["id"] = r.instance_id;
    a["image_id"] = r.image_id;
    a["category_id"] = r.category;
    a["bbox"] = {r.bbox.x_min, r.bbox.y_min, r.bbox.width(), r.bbox.height()};
    double area = 0.0;
    ordered_json seg = ordered_json::array();
    for (const PolygonContour& part : r.parts) {
      ordered_json flat = ordered_json::array();
      for (const Point& p : part.vertices()) {
        flat.push_back(p.x);
        flat.push_back(p.y);
      }
      seg.push_back(std::move(flat));
      area += part.area();
    }
    a["area"] = r.parts.empty() ? r.bbox.area() : area;
    a["iscrowd"] = 0;
    a["segmentation"] = std::move(seg);
    if (r.keypoints) {
      ordered_json kps = ordered_json::array();
      int visible = 0;
      for (const Keypoint& k : r.keypoints->points) {
        kps.push_back(k.x);
        kps.push_back(k.y);
        kps.push_back(k.visibility);
        if (k.visibility > 0) ++visible;
      }
      a["keypoints"] = std::move(kps);
      a["num_keypoints"] = visible;
    }
    anns.push_back(std::move(a));
  }

  ordered_json root;
  root["info"] = {{"description", d.source}};
  root["images"] = ordered_json::array();
  for (std::int64_t id : images) root["images"].push_back({{"id", id}});
  root["annotations"] = std::move(anns);
  root["categories"] = ordered_json::array();
  for (std::int64_t id : categories) {
    root["categories"].push_back({{"id", id}, {"name", "shape"}});
  }
  return root.dump(1) + "\n";
}

std::string_view to_string(ShapeFamily family) {
  switch (family) {
    case ShapeFamily::kConvex: return "convex";
    case ShapeFamily::kStar: return "star";
    case ShapeFamily::kMultiPart: return "multi_part";
  }
  return "unknown";
}

std::optional<ShapeFamily> shape_family_from_string(std::string_view name) {
  if (name == "convex") return ShapeFamily::kConvex;
  if (name == "star") return ShapeFamily::kStar;
  if (name == "multi_part" || name == "multi-part") return ShapeFamily::kMultiPart;
  return std::nullopt;
}

PolygonContour random_unit_convex(std::uint64_t seed, int vertices) {
  require(vertices >= 3, "convex polygon needs at least 3 vertices");
  detail::Rng rng(seed);
  return PolygonContour(fit_to(valtr_convex(rng, vertices), 1.0, {0.0, 0.0}));
}

Dataset synth_shapes(std::size_t count, std::uint64_t seed, ShapeFamily family) {
  require(count >= 1, "synth_shapes needs count >= 1");
  Dataset d;
  d.source = "synth:" + std::string(to_string(family)) + ":" + std::to_string(seed);
  d.records.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    detail::Rng rng(detail::derive_seed(seed, i));
    AnnotationRecord rec;
    rec.instance_id = static_cast<std::int64_t>(i) + 1;
    rec.image_id = rec.instance_id;
    rec.category = 1;
    const double size = rng.log_uniform(24.0, 320.0);
    const Point center{rng.uniform(320.0, 640.0), rng.uniform(240.0, 480.0)};
    switch (family) {
      case ShapeFamily::kConvex:
        rec.parts.emplace_back(
            fit_to(valtr_convex(rng, rng.uniform_int(8, 32)), size, center));
        break;
      case ShapeFamily::kStar:
        rec.parts.emplace_back(fit_to(star_polygon(rng), size, center));
        break;
      case ShapeFamily::kMultiPart: {
        const int parts = rng.uniform_int(2, 3);
        // One slot per part along x; parts fill at most 80% of a slot.
        for (int k = 0; k < parts; ++k) {
          const double part_size = size * rng.uniform(0.4, 0.8);
          const Point c{center.x + (k - 0.5 * (parts - 1)) * size,
                        center.y + rng.uniform(-0.25, 0.25) * size};
          rec.parts.emplace_back(
              fit_to(valtr_convex(rng, rng.uniform_int(8, 20)), part_size, c));
        }
        break;
      }
    }
    rec.bbox = bounds_of(rec.parts);
    d.records.push_back(std::move(rec));
  }
  return d;
}

std::size_t count_multi_crossing(const Dataset& d) {
  std::size_t hits = 0;
  for (const AnnotationRecord& r : d.records) {
    if (r.parts.empty()) continue;
    if (max_ray_crossings(r.parts, anchor_from_polygon(r.parts)) >= 3) ++hits;
  }
  return hits;
}

}  // namespace lsnet
