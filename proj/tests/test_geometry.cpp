#include <orderlab/geometry.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace orderlab;

namespace {

QPoint P(int x, int y) { return {Rat(x), Rat(y)}; }
QPoint Pr(const Rat& x, const Rat& y) { return {x, y}; }

PolylineArc arc(std::initializer_list<QPoint> pts) {
  return PolylineArc(std::vector<QPoint>(pts));
}

}  // namespace

TEST_CASE("segment crossings and antisymmetry") {
  PolylineArc xaxis = arc({P(-1, 0), P(1, 0)});
  PolylineArc yaxis = arc({P(0, -1), P(0, 1)});
  CHECK(intersection_number(xaxis, yaxis) == 1);
  CHECK(intersection_number(yaxis, xaxis) == -1);

  PolylineArc far = arc({P(5, 5), P(6, 5)});
  CHECK(intersection_number(xaxis, far) == 0);

  // up-then-down over a line: the two crossings cancel
  PolylineArc updown = arc({P(0, -1), P(1, 1), P(2, -1)});
  PolylineArc line = arc({P(-5, 0), P(5, 0)});
  CHECK(intersection_number(updown, line) == 0);
  CHECK(intersection_number(line, updown) == 0);

  // collinear overlap is rejected
  PolylineArc overlap = arc({P(0, 0), P(3, 0)});
  CHECK_THROWS_AS(intersection_number(xaxis, overlap), NonTransverse);
}

TEST_CASE("touch points resolve through germs") {
  PolylineArc line = arc({P(-5, 0), P(5, 0)});
  // vertex exactly on the line, genuinely crossing
  PolylineArc vee = arc({P(0, -1), P(1, 0), P(2, 1)});
  CHECK(intersection_number(vee, line) == -1);
  CHECK(intersection_number(line, vee) == 1);
  // vertex on the line, bouncing back (touch without crossing)
  PolylineArc bounce = arc({P(0, -1), P(1, 0), P(2, -1)});
  CHECK(intersection_number(bounce, line) == 0);
  // endpoint lands on the line: excluded by default policy
  PolylineArc toline = arc({P(0, -2), P(1, 0)});
  CHECK(intersection_number(toline, line) == 0);
  // shared endpoints with exclude policy
  PolylineArc a = arc({P(0, 0), P(1, 1)});
  PolylineArc b = arc({P(0, 0), P(1, -1)});
  CHECK(intersection_number(a, b) == 0);
}

TEST_CASE("turning index of model curves") {
  PolylineArc square = arc({P(0, 0), P(1, 0), P(1, 1), P(0, 1), P(0, 0)});
  CHECK(turning_index(square) == 1);
  CHECK(turning_index(square.reversed()) == -1);

  PolylineArc eight = arc({P(0, 0), P(1, 0), P(1, 1), P(0, 1), P(0, 0), P(0, -1),
                           P(-1, -1), P(-1, 0), P(0, 0)});
  CHECK(turning_index(eight) == 0);

  PolylineArc cusp = arc({P(0, 0), P(1, 0), P(0, 0)});
  CHECK_THROWS_AS(turning_index(cusp), DegenerateCorner);

  // invariance under refinement and under a rational rotation (3-4-5)
  PolylineArc refined = arc({P(0, 0), Pr(Rat(1, 2), Rat(0)), P(1, 0), P(1, 1),
                             Pr(Rat(1, 3), Rat(1)), P(0, 1), P(0, 0)});
  CHECK(turning_index(refined) == 1);
  auto rot = [](const QPoint& p) {
    return QPoint{Rat(3, 5) * p.x - Rat(4, 5) * p.y, Rat(4, 5) * p.x + Rat(3, 5) * p.y};
  };
  std::vector<QPoint> rotated;
  for (auto& v : square.vertices) rotated.push_back(rot(v));
  CHECK(turning_index(PolylineArc(rotated)) == 1);
}

TEST_CASE("relative writhe and the figure-eight generator") {
  PolylineArc straight = arc({P(0, 0), P(4, 0), P(10, 0)});
  CHECK(relative_writhe(straight, straight) == 0);

  PolylineArc plus = connect_sum_figure8(straight, 1);
  PolylineArc minus = connect_sum_figure8(straight, -1);
  CHECK(relative_writhe(plus, straight) == 1);
  CHECK(relative_writhe(minus, straight) == -1);
  CHECK(relative_writhe(plus, minus) == 2);

  // additivity across three arcs
  PolylineArc twice = connect_sum_figure8(plus, 1, 0);
  long long ac = relative_writhe(twice, minus);
  long long ab = relative_writhe(twice, plus);
  long long bc = relative_writhe(plus, minus);
  CHECK(ac == ab + bc);

  // mismatched endpoints are rejected
  PolylineArc other = arc({P(0, 0), P(10, 1)});
  CHECK_THROWS_AS(relative_writhe(straight, other), TangentMismatch);
}
