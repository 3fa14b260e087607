#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccover/errors.hpp"
#include "ccover/geom.hpp"

#include <cmath>
#include <random>

using namespace ccover;

TEST_CASE("rational formatting round-trips") {
  for (const char* s : {"0", "1", "-1", "3/4", "-17/3", "1000000000000000000000/7"}) {
    Rat r = parse_rat(s);
    CHECK(format_rat(r) == s);
    CHECK(parse_rat(format_rat(r)) == r);
  }
}

TEST_CASE("rational parsing rejects junk") {
  for (const char* s : {"", "a", "1.5", "1/", "/2", "1/2/3", "1 2", "0x10"})
    CHECK_THROWS_AS(parse_rat(s), FormatError);
}

TEST_CASE("rect containment is closed and supports degenerate rects") {
  Rect r{Rat(0), Rat(0), Rat(2), Rat(2)};
  CHECK(r.contains({Rat(0), Rat(0)}));
  CHECK(r.contains({Rat(2), Rat(2)}));
  CHECK(r.contains({Rat(1), Rat(2)}));
  CHECK_FALSE(r.contains({Rat(1), parse_rat("2000001/1000000")}));

  Rect d{Rat(1), Rat(0), Rat(1), Rat(3)};  // width zero
  CHECK(d.valid());
  CHECK(d.contains({Rat(1), Rat(2)}));
  CHECK_FALSE(d.contains({parse_rat("9/10"), Rat(2)}));
}

TEST_CASE("from_corners orders coordinates") {
  Rect r = Rect::from_corners({Rat(3), Rat(-1)}, {Rat(0), Rat(5)});
  CHECK(r.x_lo == 0);
  CHECK(r.x_hi == 3);
  CHECK(r.y_lo == -1);
  CHECK(r.y_hi == 5);
}

TEST_CASE("point_on_segment handles endpoints, interior, and misses") {
  Point a{Rat(0), Rat(0)}, b{Rat(4), Rat(2)};
  CHECK(point_on_segment(a, a, b));
  CHECK(point_on_segment(b, a, b));
  CHECK(point_on_segment({Rat(2), Rat(1)}, a, b));
  CHECK(point_on_segment({Rat(1), parse_rat("1/2")}, a, b));
  CHECK_FALSE(point_on_segment({Rat(2), Rat(2)}, a, b));        // off the line
  CHECK_FALSE(point_on_segment({Rat(6), Rat(3)}, a, b));        // collinear, outside
  CHECK_FALSE(point_on_segment({Rat(-2), Rat(-1)}, a, b));      // collinear, outside
}

TEST_CASE("bbox of points and empty input") {
  std::vector<Point> pts = {{Rat(1), Rat(4)}, {Rat(-2), Rat(0)}, {Rat(3), Rat(2)}};
  Rect r = bbox(pts);
  CHECK(r.x_lo == -2);
  CHECK(r.x_hi == 3);
  CHECK(r.y_lo == 0);
  CHECK(r.y_hi == 4);
  std::vector<Point> none;
  CHECK_THROWS_AS(bbox(none), BuildError);
}

TEST_CASE("oriented rect containment agrees with floating-point evaluation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-8, 8);
  std::uniform_int_distribution<int> small(1, 5);
  for (int iter = 0; iter < 2000; ++iter) {
    OrientedRect o;
    o.center = {Rat(coord(rng)), Rat(coord(rng))};
    o.dx = Rat(coord(rng));
    o.dy = Rat(coord(rng));
    if (o.dx == 0 && o.dy == 0) o.dx = 1;
    o.u = Rat(small(rng));
    o.v = Rat(small(rng));
    Point p{Rat(coord(rng)), Rat(coord(rng))};

    double px = p.x.convert_to<double>() - o.center.x.convert_to<double>();
    double py = p.y.convert_to<double>() - o.center.y.convert_to<double>();
    double dx = o.dx.convert_to<double>(), dy = o.dy.convert_to<double>();
    double along = px * dx + py * dy;
    double across = -px * dy + py * dx;
    double u = o.u.convert_to<double>(), v = o.v.convert_to<double>();
    // Skip boundary-tangent cases the float check cannot decide.
    if (std::fabs(std::fabs(along) - u) < 1e-9 || std::fabs(std::fabs(across) - v) < 1e-9)
      continue;
    bool expect = std::fabs(along) <= u && std::fabs(across) <= v;
    CHECK(o.contains(p) == expect);
  }
}

TEST_CASE("axis-aligned oriented rect matches plain rect semantics") {
  OrientedRect o;
  o.center = {Rat(2), Rat(3)};
  o.dx = 1;
  o.dy = 0;
  o.u = 2;
  o.v = 1;
  Rect r{Rat(0), Rat(2), Rat(4), Rat(4)};
  for (int x = -1; x <= 5; ++x)
    for (int y = 0; y <= 6; ++y)
      CHECK(o.contains({Rat(x), Rat(y)}) == r.contains({Rat(x), Rat(y)}));
}
