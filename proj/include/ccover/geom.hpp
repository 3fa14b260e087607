#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <vector>

namespace ccover {

// Exact rational arithmetic everywhere; no floating point in predicates.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

std::string format_rat(const Rat& r);
Rat parse_rat(const std::string& text);  // "p", "-p", or "p/q"

struct Point {
  Rat x, y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const {
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

// Closed axis-aligned rectangle; degenerate (segment or point) is allowed.
struct Rect {
  Rat x_lo, y_lo, x_hi, y_hi;

  static Rect from_corners(const Point& a, const Point& b);
  bool contains(const Point& p) const;
  bool valid() const { return x_lo <= x_hi && y_lo <= y_hi; }
  bool operator==(const Rect& o) const {
    return x_lo == o.x_lo && y_lo == o.y_lo && x_hi == o.x_hi && y_hi == o.y_hi;
  }
};

// Closed rectangle with direction (dx, dy) != (0, 0).  Half-extents u (along
// the direction) and v (across) are measured in the rotated frame produced by
// p -> (p.x*dx + p.y*dy, -p.x*dy + p.y*dx), i.e. scaled by |d|; all
// containment tests stay rational.  With d = (1, 0) this coincides with an
// axis-aligned rectangle of half-width u and half-height v.
struct OrientedRect {
  Point center;
  Rat dx, dy;
  Rat u, v;

  bool contains(const Point& p) const;
};

// True iff q lies on the closed segment [a, b].
bool point_on_segment(const Point& q, const Point& a, const Point& b);

// Bounding box of a non-empty set of points.
Rect bbox(std::span<const Point> pts);

}  // namespace ccover
