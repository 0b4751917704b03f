#pragma once

#include <orderlab/errors.hpp>
#include <orderlab/rational.hpp>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace orderlab {

struct QPoint {
  Rat x{0}, y{0};

  friend QPoint operator+(const QPoint& a, const QPoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend QPoint operator-(const QPoint& a, const QPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend QPoint operator*(const Rat& s, const QPoint& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const QPoint& a, const QPoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const QPoint& a, const QPoint& b) { return !(a == b); }
};

inline Rat cross(const QPoint& a, const QPoint& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const QPoint& a, const QPoint& b) { return a.x * b.x + a.y * b.y; }
inline Rat norm_inf(const QPoint& a) { return std::max(abs(a.x), abs(a.y)); }

inline int orient2d(const QPoint& a, const QPoint& b, const QPoint& c) {
  return sign(cross(b - a, c - a));
}

// Oriented piecewise-linear arc; may be immersed.
struct PolylineArc {
  std::vector<QPoint> vertices;

  PolylineArc() = default;
  explicit PolylineArc(std::vector<QPoint> vs) : vertices(std::move(vs)) {
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
      if (vertices[i] == vertices[i + 1])
        throw UsageError("PolylineArc: consecutive vertices must differ");
  }

  std::size_t segments() const { return vertices.empty() ? 0 : vertices.size() - 1; }

  const QPoint& front() const { return vertices.front(); }
  const QPoint& back() const { return vertices.back(); }

  QPoint dir(std::size_t seg) const { return vertices[seg + 1] - vertices[seg]; }

  PolylineArc reversed() const {
    PolylineArc out;
    out.vertices.assign(vertices.rbegin(), vertices.rend());
    return out;
  }

  bool closed() const { return vertices.size() >= 2 && front() == back(); }

  friend PolylineArc operator*(const PolylineArc&, const PolylineArc&) = delete;

  PolylineArc then(const PolylineArc& next) const {  // concatenation, endpoints must meet
    if (back() != next.front()) throw UsageError("PolylineArc: concatenation gap");
    PolylineArc out = *this;
    for (std::size_t i = 1; i < next.vertices.size(); ++i) {
      if (out.vertices.back() == next.vertices[i]) continue;
      out.vertices.push_back(next.vertices[i]);
    }
    return out;
  }
};

enum class EndpointPolicy { exclude_endpoints, include_with_sign };

namespace geom_detail {

// Does the open segment (p,q) contain point v?
inline bool strictly_inside(const QPoint& p, const QPoint& q, const QPoint& v) {
  if (orient2d(p, q, v) != 0) return false;
  Rat t = dot(v - p, q - p);
  return t > 0 && t < dot(q - p, q - p);
}

struct Germ {
  // Directions around a point: "in" arrives, "out" departs; зero vectors mark arc ends.
  QPoint in{Rat(0), Rat(0)}, out{Rat(0), Rat(0)};
  bool has_in() const { return !(in.x == 0 && in.y == 0); }
  bool has_out() const { return !(out.x == 0 && out.y == 0); }
};

// Is direction w strictly on the left of the curve germ (arriving along "in",
// leaving along "out")?
inline bool left_of_germ(const Germ& g, const QPoint& w) {
  Rat turn = cross(g.in, g.out);
  if (turn == 0) return cross(g.out, w) > 0;  // straight germ
  if (turn > 0)  // left corner
    return cross(g.in, w) > 0 && cross(g.out, w) > 0;
  return cross(g.in, w) > 0 || cross(g.out, w) > 0;  // right corner
}

// Local crossing sign of curve b over curve a at a shared point: +1 when b
// passes from the right of a to its left, -1 the other way, 0 for touches.
inline int local_cross_sign(const Germ& a, const Germ& b) {
  if (!a.has_in() || !a.has_out() || !b.has_in() || !b.has_out()) return 0;
  bool from_left = left_of_germ(a, QPoint{-b.in.x, -b.in.y});
  bool to_left = left_of_germ(a, b.out);
  if (from_left == to_left) return 0;
  return to_left ? 1 : -1;
}

}  // namespace geom_detail

// Signed intersection number a . b of two polyline arcs. All touches are
// resolved exactly through germ orientation tests; collinear overlaps are
// rejected. Proper interior crossings contribute sign(cross(da, db)); crossings
// at arc endpoints follow the policy.
inline long long intersection_number(const PolylineArc& a, const PolylineArc& b,
                                     EndpointPolicy policy = EndpointPolicy::exclude_endpoints) {
  using geom_detail::Germ;
  // collect candidate intersection points: proper crossings handled directly,
  // touch points collected for germ analysis
  std::vector<QPoint> touch_points;
  long long total = 0;

  for (std::size_t i = 0; i + 1 < a.vertices.size(); ++i) {
    QPoint p1 = a.vertices[i], p2 = a.vertices[i + 1];
    for (std::size_t j = 0; j + 1 < b.vertices.size(); ++j) {
      QPoint q1 = b.vertices[j], q2 = b.vertices[j + 1];
      int o1 = orient2d(p1, p2, q1), o2 = orient2d(p1, p2, q2);
      int o3 = orient2d(q1, q2, p1), o4 = orient2d(q1, q2, p2);
      if (o1 == 0 && o2 == 0) {
        // collinear: overlap is fatal, point touches are handled as germs
        Rat len2 = dot(p2 - p1, p2 - p1);
        Rat t1 = dot(q1 - p1, p2 - p1), t2 = dot(q2 - p1, p2 - p1);
        Rat lo = std::min(t1, t2), hi = std::max(t1, t2);
        if (hi > 0 && lo < len2)
          throw NonTransverse("collinear overlapping segments");
        continue;
      }
      if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        // proper interior crossing
        total += sign(cross(p2 - p1, q2 - q1));
        continue;
      }
      // a touch: some endpoint lies on the other segment
      for (const QPoint& v : {q1, q2})
        if (geom_detail::strictly_inside(p1, p2, v) || v == p1 || v == p2)
          touch_points.push_back(v);
      for (const QPoint& v : {p1, p2})
        if (geom_detail::strictly_inside(q1, q2, v)) touch_points.push_back(v);
    }
  }

  std::sort(touch_points.begin(), touch_points.end(), [](const QPoint& u, const QPoint& v) {
    return std::pair(u.x, u.y) < std::pair(v.x, v.y);
  });
  touch_points.erase(std::unique(touch_points.begin(), touch_points.end()), touch_points.end());

  auto germ_at = [](const PolylineArc& arc, const QPoint& v) -> std::optional<Germ> {
    Germ g;
    bool found = false;
    for (std::size_t i = 0; i + 1 < arc.vertices.size(); ++i) {
      if (geom_detail::strictly_inside(arc.vertices[i], arc.vertices[i + 1], v)) {
        g.in = g.out = arc.dir(i);
        return g;
      }
      if (arc.vertices[i] == v) {
        found = true;
        g.out = arc.dir(i);
        if (i > 0) g.in = arc.dir(i - 1);
      }
      if (arc.vertices[i + 1] == v && i + 2 == arc.vertices.size()) {
        found = true;
        g.in = arc.dir(i);
      }
    }
    if (!found) return std::nullopt;
    return g;
  };

  for (const QPoint& v : touch_points) {
    auto ga = germ_at(a, v), gb = germ_at(b, v);
    if (!ga || !gb) continue;
    bool a_end = !ga->has_in() || !ga->has_out();
    bool b_end = !gb->has_in() || !gb->has_out();
    if ((a_end || b_end) && policy == EndpointPolicy::exclude_endpoints) continue;
    total += geom_detail::local_cross_sign(*ga, *gb);
  }
  return total;
}

namespace geom_detail {

// Signed count of the direction loop's passages over the reference direction r,
// walking the short arc from u to w. The reference must not be parallel to
// either endpoint direction. Throws on exact reversals.
inline int direction_arc_crossings(const QPoint& u, const QPoint& w, const QPoint& r) {
  Rat c = cross(u, w);
  if (c == 0) {
    if (dot(u, w) > 0) return 0;  // no turn
    throw DegenerateCorner("exact pi corner");
  }
  if (c > 0) return (cross(u, r) > 0 && cross(r, w) > 0) ? 1 : 0;
  return (cross(w, r) > 0 && cross(r, u) > 0) ? -1 : 0;
}

// A direction not parallel (in the same sense) to any of the given ones.
inline QPoint generic_reference(const std::vector<QPoint>& dirs) {
  for (int k = 0;; ++k) {
    QPoint cand = k % 2 == 0 ? QPoint{Rat(1), Rat(k / 2)} : QPoint{Rat(k / 2), Rat(1)};
    if (k == 0) cand = QPoint{Rat(1), Rat(0)};
    bool ok = true;
    for (const QPoint& d : dirs)
      if (cross(d, cand) == 0 && dot(d, cand) > 0) { ok = false; break; }
    if (ok) return cand;
  }
}

}  // namespace geom_detail

// Turning number of a closed polyline: winding of the tangent direction,
// computed exactly as signed passages over a reference direction.
inline long long turning_index(const PolylineArc& arc) {
  if (!arc.closed()) throw UsageError("turning_index: arc must be closed");
  std::vector<QPoint> dirs;
  for (std::size_t i = 0; i + 1 < arc.vertices.size(); ++i) dirs.push_back(arc.dir(i));
  const QPoint ref = geom_detail::generic_reference(dirs);
  long long total = 0;
  for (std::size_t i = 0; i < dirs.size(); ++i)
    total += geom_detail::direction_arc_crossings(dirs[i], dirs[(i + 1) % dirs.size()], ref);
  return total;
}

// Difference of total turning between two arcs with shared endpoints and
// matched endpoint tangent directions, in full turns.
inline long long relative_writhe(const PolylineArc& t1, const PolylineArc& t2) {
  if (t1.front() != t2.front() || t1.back() != t2.back())
    throw TangentMismatch("relative_writhe: endpoints differ");
  auto parallel_same = [](const QPoint& u, const QPoint& v) {
    return cross(u, v) == 0 && dot(u, v) > 0;
  };
  if (!parallel_same(t1.dir(0), t2.dir(0)) ||
      !parallel_same(t1.dir(t1.segments() - 1), t2.dir(t2.segments() - 1)))
    throw TangentMismatch("relative_writhe: endpoint tangents differ");

  // direction loop: t1 forward, then t2 backward; total winding = difference
  std::vector<QPoint> dirs;
  for (std::size_t i = 0; i + 1 < t1.vertices.size(); ++i) dirs.push_back(t1.dir(i));
  for (std::size_t i = t2.segments(); i-- > 0;) dirs.push_back(t2.dir(i));
  const QPoint ref = geom_detail::generic_reference(dirs);
  long long total = 0;
  for (std::size_t i = 0; i < dirs.size(); ++i)
    total += geom_detail::direction_arc_crossings(dirs[i], dirs[(i + 1) % dirs.size()], ref);
  return total;
}

// Inserts a writhe generator into the middle of segment `seg`: a small square
// detour whose tangent winds one extra full turn (side +1: loop on the left /
// positive side, adds +1).
inline PolylineArc connect_sum_figure8(const PolylineArc& arc, int side,
                                       std::size_t seg = SIZE_MAX) {
  if (side != 1 && side != -1) throw UsageError("connect_sum_figure8: side must be +-1");
  if (seg == SIZE_MAX) seg = arc.segments() / 2;
  if (seg >= arc.segments()) throw UsageError("connect_sum_figure8: bad segment");
  QPoint p = arc.vertices[seg], q = arc.vertices[seg + 1];
  QPoint d = q - p;
  QPoint n{-d.y * side, d.x * side};  // left normal for side = +1
  // detour along p -> A -> ... -> B -> q with one extra full turn of sign `side`
  QPoint A = p + Rat(2, 5) * d;
  QPoint B = p + Rat(3, 5) * d;
  Rat s(1, 10);
  QPoint v1 = A + s * d;
  QPoint v2 = v1 + s * d + s * n;
  QPoint v3 = v2 - s * d + s * n;
  QPoint v4 = v3 - s * d - s * n;
  QPoint v5 = v4 + s * d - s * n;  // back on the line, behind v1
  PolylineArc out;
  out.vertices.assign(arc.vertices.begin(), arc.vertices.begin() + (long)seg + 1);
  for (const QPoint& w : {A, v1, v2, v3, v4, v5, B}) {
    if (out.vertices.back() != w) out.vertices.push_back(w);
  }
  for (std::size_t i = seg + 1; i < arc.vertices.size(); ++i)
    if (out.vertices.back() != arc.vertices[i]) out.vertices.push_back(arc.vertices[i]);
  return out;
}

}  // namespace orderlab
