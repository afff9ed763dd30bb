// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lsnet Authors

#ifndef LSNET_TYPES_HPP_
#define LSNET_TYPES_HPP_

#include <cmath>
#include <stdexcept>
#include <string>

namespace lsnet {

// Error categories shared by every module. The C API maps these one-to-one
// onto lsn_status values.
enum class ErrorCode {
  kInvalidArgument = 1,
  kDegenerateGeometry = 2,
  kParse = 3,
  kIo = 4,
  kUnsupported = 5,
  kNotFound = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, const char* what) {
  if (!condition) fail(ErrorCode::kInvalidArgument, what);
}

// Image coordinates: x grows to the right, y grows downward.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline bool is_finite(const Point& p) {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

struct BoundingBox {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  Point center() const {
    return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)};
  }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

inline bool is_valid(const BoundingBox& b) {
  return std::isfinite(b.x_min) && std::isfinite(b.y_min) &&
         std::isfinite(b.x_max) && std::isfinite(b.y_max) &&
         b.x_min <= b.x_max && b.y_min <= b.y_max;
}

}  // namespace lsnet

#endif  // LSNET_TYPES_HPP_
