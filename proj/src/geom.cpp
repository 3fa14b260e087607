#include "ccover/geom.hpp"

#include "ccover/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ccover {

std::string format_rat(const Rat& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw FormatError("empty rational literal");
  // cpp_rational accepts "p/q" but is lenient about garbage; validate first.
  bool seen_digit = false;
  bool seen_slash = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '-') {
      if (i != 0 && !(seen_slash && text[i - 1] == '/'))
        throw FormatError("bad rational literal: " + text);
    } else if (c == '/') {
      if (seen_slash || !seen_digit) throw FormatError("bad rational literal: " + text);
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else {
      throw FormatError("bad rational literal: " + text);
    }
  }
  if (!seen_digit || text.back() == '/') throw FormatError("bad rational literal: " + text);
  Rat r(text);
  return r;
}

Rect Rect::from_corners(const Point& a, const Point& b) {
  Rect r;
  r.x_lo = std::min(a.x, b.x);
  r.x_hi = std::max(a.x, b.x);
  r.y_lo = std::min(a.y, b.y);
  r.y_hi = std::max(a.y, b.y);
  return r;
}

bool Rect::contains(const Point& p) const {
  return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
}

bool OrientedRect::contains(const Point& p) const {
  // Rotated-frame offsets of p from the center: along = (p-c)·d,
  // across = (p-c)×d-perp; compare against half-extents, all exact.
  Rat px = p.x - center.x;
  Rat py = p.y - center.y;
  Rat along = px * dx + py * dy;
  Rat across = -px * dy + py * dx;
  if (along < -u || along > u) return false;
  if (across < -v || across > v) return false;
  return true;
}

bool point_on_segment(const Point& q, const Point& a, const Point& b) {
  Rat cross = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
  if (cross != 0) return false;
  if (q.x < std::min(a.x, b.x) || q.x > std::max(a.x, b.x)) return false;
  if (q.y < std::min(a.y, b.y) || q.y > std::max(a.y, b.y)) return false;
  return true;
}

Rect bbox(std::span<const Point> pts) {
  if (pts.empty()) throw BuildError("bbox of empty point set");
  Rect r{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const Point& p : pts) {
    r.x_lo = std::min(r.x_lo, p.x);
    r.x_hi = std::max(r.x_hi, p.x);
    r.y_lo = std::min(r.y_lo, p.y);
    r.y_hi = std::max(r.y_hi, p.y);
  }
  return r;
}

}  // namespace ccover
