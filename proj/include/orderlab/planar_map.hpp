#pragma once

#include <orderlab/geometry.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace orderlab {

// Monotone PL profile of a twist: pairs (t, psi(t)) from t=0 to t=1. The
// default bump rises 0 -> 1 with eight breakpoints; profiles may also descend
// (inverse twists) or carry partial angles (perturbation rotations).
struct TwistProfile {
  std::vector<std::pair<Rat, Rat>> pts;

  static const TwistProfile& standard() {
    static const TwistProfile p = [] {
      TwistProfile q;
      q.pts = {{Rat(0), Rat(0)},        {Rat(1, 8), Rat(1, 50)},  {Rat(1, 4), Rat(1, 10)},
               {Rat(3, 8), Rat(3, 10)}, {Rat(1, 2), Rat(1, 2)},   {Rat(5, 8), Rat(7, 10)},
               {Rat(3, 4), Rat(9, 10)}, {Rat(7, 8), Rat(49, 50)}, {Rat(1), Rat(1)}};
      return q;
    }();
    return p;
  }

  static TwistProfile linear(const Rat& from, const Rat& to) {
    TwistProfile p;
    p.pts = {{Rat(0), from}, {Rat(1), to}};
    return p;
  }

  Rat eval(const Rat& t) const {
    if (t <= pts.front().first) return pts.front().second;
    if (t >= pts.back().first) return pts.back().second;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (t <= pts[i + 1].first) {
        auto [t0, v0] = pts[i];
        auto [t1, v1] = pts[i + 1];
        return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
      }
    }
    return pts.back().second;
  }

  TwistProfile negated() const {
    TwistProfile p = *this;
    for (auto& [t, v] : p.pts) v = -v;
    return p;
  }

  TwistProfile scaled(int k) const {
    TwistProfile p = *this;
    for (auto& [t, v] : p.pts) v *= k;
    return p;
  }

  Rat max_slope() const {
    Rat m(0);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      Rat s = abs((pts[i + 1].second - pts[i].second) / (pts[i + 1].first - pts[i].first));
      m = std::max(m, s);
    }
    return m;
  }
};

// Exact minimum of the sup-norm over the segment [p, q]: attained at an
// endpoint, a coordinate zero, or a diagonal crossing.
inline Rat seg_min_supnorm(const QPoint& p, const QPoint& q) {
  QPoint d = q - p;
  std::vector<Rat> ts{Rat(0), Rat(1)};
  if (d.x != 0) {
    Rat t = -p.x / d.x;
    if (t > 0 && t < 1) ts.push_back(t);
  }
  if (d.y != 0) {
    Rat t = -p.y / d.y;
    if (t > 0 && t < 1) ts.push_back(t);
  }
  for (int sgn : {1, -1}) {
    Rat denom = d.x - Rat(sgn) * d.y;
    if (denom != 0) {
      Rat t = (Rat(sgn) * p.y - p.x) / denom;
      if (t > 0 && t < 1) ts.push_back(t);
    }
  }
  std::optional<Rat> best;
  for (const Rat& t : ts) {
    QPoint v = p + t * d;
    Rat s = norm_inf(v);
    if (!best || s < *best) best = s;
  }
  return *best;
}

struct SquareTwist {
  QPoint center;
  Rat r0, r1;  // inner and outer sup-norm radii, 0 <= r0 < r1
  TwistProfile profile;
};

// Exact plane homeomorphisms built from dilations, translations and sup-norm
// (square-annulus) Dehn twists. Rational points have rational images; infinite
// twist families materialize only the members meeting a query box.
class PlanarMap {
 public:
  // members of a twist family relevant to the segment [p, q] (p == q queries a point)
  using MembersOnSegment =
      std::function<std::vector<SquareTwist>(const QPoint& p, const QPoint& q)>;

  static PlanarMap identity() { return PlanarMap(); }

  static PlanarMap dilation(const Rat& factor) {
    if (factor <= 0) throw UsageError("PlanarMap: dilation factor must be positive");
    PlanarMap m;
    m.kind_ = Kind::dilation;
    m.scale_ = factor;
    return m;
  }

  static PlanarMap translation(const QPoint& v) {
    PlanarMap m;
    m.kind_ = Kind::translation;
    m.shift_ = v;
    return m;
  }

  static PlanarMap square_twist(SquareTwist tw) {
    if (!(tw.r0 >= 0 && tw.r0 < tw.r1)) throw UsageError("PlanarMap: bad twist radii");
    PlanarMap m;
    m.kind_ = Kind::family;
    auto tw_ptr = std::make_shared<SquareTwist>(std::move(tw));
    m.members_ = std::make_shared<MembersOnSegment>(
        [tw_ptr](const QPoint& p, const QPoint& q) -> std::vector<SquareTwist> {
          QPoint lo{std::min(p.x, q.x), std::min(p.y, q.y)};
          QPoint hi{std::max(p.x, q.x), std::max(p.y, q.y)};
          QPoint c = tw_ptr->center;
          if (c.x + tw_ptr->r1 < lo.x || c.x - tw_ptr->r1 > hi.x ||
              c.y + tw_ptr->r1 < lo.y || c.y - tw_ptr->r1 > hi.y)
            return {};
          return {*tw_ptr};
        });
    return m;
  }

  // Disjointly supported twist family; members are produced per query box.
  static PlanarMap twist_family(MembersOnSegment members) {
    PlanarMap m;
    m.kind_ = Kind::family;
    m.members_ = std::make_shared<MembersOnSegment>(std::move(members));
    return m;
  }

  static PlanarMap compose(std::vector<PlanarMap> maps) {  // maps[0] applied last
    PlanarMap m;
    m.kind_ = Kind::composite;
    for (auto& part : maps) {
      if (part.kind_ == Kind::composite)
        m.parts_.insert(m.parts_.end(), part.parts_.begin(), part.parts_.end());
      else if (part.kind_ != Kind::identity_k)
        m.parts_.push_back(std::move(part));
    }
    if (m.parts_.empty()) return identity();
    if (m.parts_.size() == 1) return m.parts_.front();
    return m;
  }

  PlanarMap after(const PlanarMap& inner) const { return compose({*this, inner}); }

  PlanarMap inverse() const {
    switch (kind_) {
      case Kind::identity_k:
        return *this;
      case Kind::dilation:
        return dilation(1 / scale_);
      case Kind::translation:
        return translation(QPoint{-shift_.x, -shift_.y});
      case Kind::family: {
        auto base = members_;
        PlanarMap out;
        out.kind_ = Kind::family;
        out.members_ = std::make_shared<MembersOnSegment>(
            [base](const QPoint& p, const QPoint& q) {
              auto ms = (*base)(p, q);
              for (auto& t : ms) t.profile = t.profile.negated();
              return ms;
            });
        return out;
      }
      case Kind::composite: {
        std::vector<PlanarMap> inv;
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
          inv.push_back(it->inverse());
        return compose(std::move(inv));
      }
    }
    throw Error("PlanarMap: bad kind");
  }

  PlanarMap power(int k) const {
    if (k == 0) return identity();
    if (kind_ == Kind::family) {
      // members of one family commute and share supports: scale the profile
      auto base = members_;
      PlanarMap out;
      out.kind_ = Kind::family;
      out.members_ = std::make_shared<MembersOnSegment>(
          [base, k](const QPoint& p, const QPoint& q) {
            auto ms = (*base)(p, q);
            for (auto& t : ms) t.profile = t.profile.scaled(k);
            return ms;
          });
      return out;
    }
    PlanarMap base = k > 0 ? *this : inverse();
    std::vector<PlanarMap> parts((std::size_t)std::abs(k), base);
    return compose(std::move(parts));
  }

  QPoint apply(const QPoint& p) const {
    switch (kind_) {
      case Kind::identity_k:
        return p;
      case Kind::dilation:
        return scale_ * p;
      case Kind::translation:
        return p + shift_;
      case Kind::family: {
        QPoint q = p;
        for (const auto& t : (*members_)(p, p)) q = apply_twist(t, q);
        return q;
      }
      case Kind::composite: {
        QPoint q = p;
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) q = it->apply(q);
        return q;
      }
    }
    throw Error("PlanarMap: bad kind");
  }

  bool is_composite() const { return kind_ == Kind::composite; }
  const std::vector<PlanarMap>& parts() const { return parts_; }

  static Rat twist_lipschitz(const SquareTwist& t) {
    // gradient bound: radial motion + tangential shift variation, doubled.
    Rat m = t.profile.max_slope();
    return 2 * (Rat(10) + Rat(12) * t.r1 * m / (t.r1 - t.r0));
  }

  // Bound on the deviation of the image of segment [p,q] from the straight
  // chord between the images. Valid once the segment crosses no feature line
  // (so shell radii vary monotonically along it). Affine maps deviate zero;
  // a twist contributes through the rotation bend plus the profile variation
  // across the radial span. Halving the piece at least halves the bound.
  Rat deviation_bound(const QPoint& p, const QPoint& q) const {
    switch (kind_) {
      case Kind::identity_k:
      case Kind::translation:
      case Kind::dilation:
        return Rat(0);
      case Kind::family: {
        Rat dev(0);
        Rat len = 2 * norm_inf(q - p);
        for (const auto& t : (*members_)(p, q)) {
          auto [sp, up] = shell_coords(t.center, p);
          auto [sq, uq] = shell_coords(t.center, q);
          (void)up;
          (void)uq;
          bool outside = (sp <= t.r0 && sq <= t.r0) || (sp >= t.r1 && sq >= t.r1);
          if (outside) continue;
          Rat smax = std::max(sp, sq);
          Rat ds = abs(sp - sq);
          // between feature and image-kink cuts the image is near straight;
          // the residual bend is controlled by the profile shear across the
          // radial span plus a small fraction of the length
          dev += len / 4 + 8 * smax * t.profile.max_slope() * ds / (t.r1 - t.r0);
        }
        return dev;
      }
      case Kind::composite:
        throw Error("PlanarMap: deviation_bound on composite (push stages instead)");
    }
    throw Error("PlanarMap: bad kind");
  }

  // Sup-norm shell coordinates around a center: radius s and perimeter
  // parameter u in [0,1), u = 0 at the middle of the right edge, anticlockwise.
  static std::pair<Rat, Rat> shell_coords(const QPoint& center, const QPoint& p) {
    QPoint d = p - center;
    Rat s = norm_inf(d);
    if (s == 0) return {s, Rat(0)};
    Rat u;
    if (d.x == s && abs(d.y) != s) u = d.y / (8 * s);        // right edge
    else if (d.y == s) u = Rat(1, 8) + (s - d.x) / (8 * s);  // top
    else if (d.x == -s) u = Rat(3, 8) + (s - d.y) / (8 * s); // left
    else if (d.y == -s) u = Rat(5, 8) + (d.x + s) / (8 * s); // bottom
    else u = d.y / (8 * s);
    return {s, frac(u)};
  }

  static QPoint shell_point(const QPoint& center, const Rat& s, const Rat& u_in) {
    Rat u = frac(u_in);
    QPoint d;
    if (u < Rat(1, 8)) d = QPoint{s, 8 * s * u};
    else if (u < Rat(3, 8)) d = QPoint{s - 8 * s * (u - Rat(1, 8)), s};
    else if (u < Rat(5, 8)) d = QPoint{-s, s - 8 * s * (u - Rat(3, 8))};
    else if (u < Rat(7, 8)) d = QPoint{-s + 8 * s * (u - Rat(5, 8)), -s};
    else d = QPoint{s, -(8 * s) * (Rat(1) - u)};
    return center + d;
  }

  static QPoint apply_twist(const SquareTwist& t, const QPoint& p) {
    auto [s, u] = shell_coords(t.center, p);
    if (s == 0) return p;
    Rat f;
    if (s <= t.r0) f = t.profile.pts.front().second;
    else if (s >= t.r1) f = t.profile.pts.back().second;
    else f = t.profile.eval((s - t.r0) / (t.r1 - t.r0));
    Rat fr = frac(f);
    if (fr == 0) return p;
    // the positive twist shears clockwise (the handedness that makes the
    // nested-circles action carry Euler number +1)
    return shell_point(t.center, s, u - fr);
  }

  // Exact parameters in (0,1) where the segment a->b crosses a twist's feature
  // lines: the shell radii of the profile breakpoints, the corner diagonals,
  // and the edge midlines.
  static void twist_feature_cuts(const SquareTwist& t, const QPoint& a, const QPoint& b,
                                 std::vector<Rat>& cuts) {
    QPoint d = b - a;
    QPoint rel = a - t.center;
    auto cut_coord = [&](const Rat& ax, const Rat& dx, const Rat& R) {
      if (dx == 0) return;
      for (const Rat& target : {R, -R}) {
        Rat tt = (target - ax) / dx;
        if (tt > 0 && tt < 1) cuts.push_back(tt);
      }
    };
    std::vector<Rat> radii{t.r0, t.r1};
    for (auto& [tp, v] : t.profile.pts) radii.push_back(t.r0 + tp * (t.r1 - t.r0));
    for (const Rat& R : radii) {
      cut_coord(rel.x, d.x, R);
      cut_coord(rel.y, d.y, R);
    }
    for (int sgn : {1, -1}) {  // corner diagonals |x| == |y|
      Rat denom = d.x - Rat(sgn) * d.y;
      if (denom != 0) {
        Rat tt = (Rat(sgn) * rel.y - rel.x) / denom;
        if (tt > 0 && tt < 1) cuts.push_back(tt);
      }
    }
    if (d.y != 0) {  // edge midlines
      Rat tt = -rel.y / d.y;
      if (tt > 0 && tt < 1) cuts.push_back(tt);
    }
    if (d.x != 0) {
      Rat tt = -rel.x / d.x;
      if (tt > 0 && tt < 1) cuts.push_back(tt);
    }
  }

  // Image-side kinks: the twisted angle u + f crosses an eighth of a turn
  // (an image corner or edge midline). Located by exact-sign bisection between
  // the source cuts; the cut parameters are rational approximations.
  static void twist_target_cuts(const SquareTwist& t, const QPoint& a, const QPoint& b,
                                const std::vector<Rat>& source_cuts,
                                std::vector<Rat>& cuts) {
    auto theta = [&](const Rat& tt) -> std::optional<Rat> {
      QPoint pt = a + tt * (b - a);
      auto [s, u] = shell_coords(t.center, pt);
      if (s <= t.r0 || s >= t.r1) return std::nullopt;
      return u + t.profile.eval((s - t.r0) / (t.r1 - t.r0));
    };
    for (std::size_t c = 0; c + 1 < source_cuts.size(); ++c) {
      Rat lo = source_cuts[c], hi = source_cuts[c + 1];
      Rat mid = (lo + hi) / 2;
      if (!theta(mid)) continue;  // piece outside the annulus
      auto th_lo = theta(lo + (hi - lo) / 1024), th_hi = theta(hi - (hi - lo) / 1024);
      if (!th_lo || !th_hi) continue;
      Int klo = floor_rat(*th_lo * 8), khi = floor_rat(*th_hi * 8);
      Int kmin = std::min(klo, khi), kmax = std::max(klo, khi);
      if (kmax - kmin > 512) continue;  // absurdly twisted piece: uniform refinement
      for (Int k = kmin; k <= kmax + 1; ++k) {
        Rat level = Rat(k, 8);
        // bisect for theta == level inside [lo, hi]
        Rat x0 = lo, x1 = hi;
        auto side = [&](const Rat& x) {
          auto v = theta(x);
          return v ? sign(*v - level) : 0;
        };
        int s0 = side(x0 + (x1 - x0) / 1024), s1 = side(x1 - (x1 - x0) / 1024);
        if (s0 == 0 || s1 == 0 || s0 == s1) continue;
        for (int it = 0; it < 40; ++it) {
          Rat xm = (x0 + x1) / 2;
          int sm = side(xm);
          if (sm == 0) { x0 = x1 = xm; break; }
          (sm == s0 ? x0 : x1) = xm;
        }
        Rat cut = (x0 + x1) / 2;
        // snap the cut to a small-denominator rational inside the bracket
        Int g = Int(1) << 48;
        cut = Rat(floor_rat(cut * Rat(g)), g);
        if (cut > lo && cut < hi) cuts.push_back(cut);
      }
    }
  }

  void feature_cuts(const QPoint& a, const QPoint& b, std::vector<Rat>& cuts) const {
    switch (kind_) {
      case Kind::family: {
        auto ms = (*members_)(a, b);
        for (const auto& t : ms) twist_feature_cuts(t, a, b, cuts);
        std::vector<Rat> source = cuts;
        source.push_back(Rat(0));
        source.push_back(Rat(1));
        std::sort(source.begin(), source.end());
        source.erase(std::unique(source.begin(), source.end()), source.end());
        for (const auto& t : ms) twist_target_cuts(t, a, b, source, cuts);
        return;
      }
      case Kind::composite:
        if (!parts_.empty()) parts_.back().feature_cuts(a, b, cuts);
        return;
      default:
        return;
    }
  }

 public:
  PlanarMap() = default;  // the identity map

 private:
  enum class Kind { identity_k, dilation, translation, family, composite };

  Kind kind_ = Kind::identity_k;
  Rat scale_{1};
  QPoint shift_{Rat(0), Rat(0)};
  std::shared_ptr<MembersOnSegment> members_;
  std::vector<PlanarMap> parts_;
};

// Image of an arc with certified refinement: each segment is subdivided at the
// exact feature lines of the map, then uniformly until the piece-local
// Lipschitz bound certifies the image polyline is within tol of the true image.
inline PolylineArc push_arc(const PlanarMap& m, const PolylineArc& arc, const Rat& tol) {
  if (!(tol > 0)) throw UsageError("push_arc: tol must be positive");
  if (m.is_composite()) {
    PolylineArc cur = arc;
    Rat stage_tol = tol / Rat((long)std::max<std::size_t>(m.parts().size(), 1));
    for (auto it = m.parts().rbegin(); it != m.parts().rend(); ++it)
      cur = push_arc(*it, cur, stage_tol);
    return cur;
  }
  std::vector<QPoint> out;
  out.push_back(m.apply(arc.vertices.front()));
  const long long kMaxPieces = 1 << 16;
  for (std::size_t i = 0; i + 1 < arc.vertices.size(); ++i) {
    QPoint a = arc.vertices[i], b = arc.vertices[i + 1];
    std::vector<Rat> cuts{Rat(0), Rat(1)};
    m.feature_cuts(a, b, cuts);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      QPoint p = a + cuts[c] * (b - a);
      QPoint q = a + cuts[c + 1] * (b - a);
      Rat dev = m.deviation_bound(p, q);
      long long n = 1;
      if (dev > 0) {
        Rat pieces = dev / tol;
        while (Rat(n) < pieces && n < kMaxPieces) n *= 2;
        if (Rat(n) < pieces) throw RefinementLimit("push_arc");
      }
      for (long long k = 1; k <= n; ++k) {
        QPoint s = p + Rat((long long)k, n) * (q - p);
        QPoint img = m.apply(s);
        if (out.back() != img) out.push_back(img);
      }
    }
  }
  if (out.size() < 2) out.push_back(m.apply(arc.vertices.back()));
  // snap oversized interior coordinates to a fine grid: keeps the polyline
  // within tol while stopping denominator growth across composite stages;
  // small exact coordinates stay exact
  Int denom = 1024 * ceil_rat(1 / tol);
  Int grid = 1;
  while (grid < denom) grid <<= 1;
  const Int size_cap = Int(1) << 28;
  for (std::size_t i = 1; i + 1 < out.size(); ++i) {
    for (Rat* c : {&out[i].x, &out[i].y}) {
      if (den(*c) > size_cap || abs(num(*c)) > size_cap * size_cap)
        *c = Rat(floor_rat(*c * Rat(grid) + Rat(1, 2)), grid);
    }
  }
  std::vector<QPoint> dedup;
  for (auto& v : out)
    if (dedup.empty() || !(dedup.back() == v)) dedup.push_back(v);
  if (dedup.size() < 2) dedup.push_back(out.back());
  return PolylineArc(std::move(dedup));
}

}  // namespace orderlab
