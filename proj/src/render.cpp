#include "ccover/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ccover {

namespace {

double dbl(const Rat& r) { return r.convert_to<double>(); }

void star(std::ostringstream& os, double cx, double cy, double r) {
  os << "<polygon class=\"red\" points=\"";
  for (int i = 0; i < 10; ++i) {
    double ang = -M_PI / 2 + i * M_PI / 5;
    double rad = (i % 2 == 0) ? r : r * 0.4;
    os << cx + rad * std::cos(ang) << "," << cy + rad * std::sin(ang) << " ";
  }
  os << "\"/>\n";
}

}  // namespace

std::string render_svg(const Instance& inst, const std::optional<Cover>& cover) {
  double lo_x = 0, lo_y = 0, hi_x = 1, hi_y = 1;
  bool first = true;
  auto grow = [&](double x, double y) {
    if (first) {
      lo_x = hi_x = x;
      lo_y = hi_y = y;
      first = false;
    } else {
      lo_x = std::min(lo_x, x);
      hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y);
      hi_y = std::max(hi_y, y);
    }
  };
  for (const Point& p : inst.blue) grow(dbl(p.x), dbl(p.y));
  for (const Point& p : inst.red) grow(dbl(p.x), dbl(p.y));

  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  double margin = 0.05 * span;
  double radius = std::max(span / 200.0, 0.35);
  double view_w = hi_x - lo_x + 2 * margin, view_h = hi_y - lo_y + 2 * margin;

  std::ostringstream os;
  // Flip y so the mathematical y-axis points up.
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
     << 800.0 * view_h / view_w << "\" viewBox=\"" << lo_x - margin << " " << -(hi_y + margin)
     << " " << view_w << " " << view_h << "\">\n";
  os << "<style>.blue{fill:#2060c0;stroke:none}.red{fill:#c02020;stroke:none}"
        ".cover{fill:none;stroke:#208020;stroke-width:" << radius * 0.3
     << ";stroke-opacity:0.8}</style>\n";

  if (cover) {
    double pad = radius * 0.8;
    for (const CoverRect& cr : cover->rects) {
      if (const Rect* r = std::get_if<Rect>(&cr)) {
        os << "<rect class=\"cover\" x=\"" << dbl(r->x_lo) - pad << "\" y=\""
           << -dbl(r->y_hi) - pad << "\" width=\"" << dbl(r->x_hi) - dbl(r->x_lo) + 2 * pad
           << "\" height=\"" << dbl(r->y_hi) - dbl(r->y_lo) + 2 * pad << "\"/>\n";
      } else {
        const OrientedRect& o = std::get<OrientedRect>(cr);
        double dx = dbl(o.dx), dy = dbl(o.dy);
        double len = std::hypot(dx, dy);
        dx /= len;
        dy /= len;
        double cx = dbl(o.center.x), cy = dbl(o.center.y);
        double u = dbl(o.u) / len + pad, v = dbl(o.v) / len + pad;
        os << "<polygon class=\"cover\" points=\"";
        for (auto [su, sv] : {std::pair<int, int>{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}) {
          double px = cx + su * u * dx - sv * v * dy;
          double py = cy + su * u * dy + sv * v * dx;
          os << px << "," << -py << " ";
        }
        os << "\"/>\n";
      }
    }
  }
  for (const Point& p : inst.blue)
    os << "<circle class=\"blue\" cx=\"" << dbl(p.x) << "\" cy=\"" << -dbl(p.y) << "\" r=\""
       << radius << "\"/>\n";
  for (const Point& p : inst.red) star(os, dbl(p.x), -dbl(p.y), radius * 1.3);
  os << "</svg>\n";
  return os.str();
}

}  // namespace ccover
