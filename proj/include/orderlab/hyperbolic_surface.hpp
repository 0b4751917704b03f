#pragma once

#include <orderlab/algebraic.hpp>
#include <orderlab/cocycle.hpp>
#include <orderlab/errors.hpp>

#include <array>
#include <utility>
#include <vector>

namespace orderlab {

// Hyperboloid-model isometries: 3x3 matrices over an exact ordered field,
// preserving the form x^2 + y^2 - t^2 and the forward cone. The boundary circle
// is the projectivized forward light cone, carrying an exact circular order.
template <class F>
struct ConeIsometry {
  std::array<std::array<F, 3>, 3> m;

  static ConeIsometry identity() {
    ConeIsometry g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g.m[(std::size_t)i][(std::size_t)j] = F(i == j ? 1 : 0);
    return g;
  }

  friend ConeIsometry operator*(const ConeIsometry& a, const ConeIsometry& b) {
    ConeIsometry out;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        F acc(0);
        for (int k = 0; k < 3; ++k)
          acc = acc + a.m[(std::size_t)i][(std::size_t)k] * b.m[(std::size_t)k][(std::size_t)j];
        out.m[(std::size_t)i][(std::size_t)j] = acc;
      }
    return out;
  }

  // J-orthogonality gives the inverse by a transpose: M^{-1} = J M^T J with
  // J = diag(1, 1, -1).
  ConeIsometry inverse() const {
    ConeIsometry out;
    auto jsign = [](int i) { return i == 2 ? -1 : 1; };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        F v = m[(std::size_t)j][(std::size_t)i];
        if (jsign(i) * jsign(j) < 0) v = -v;
        out.m[(std::size_t)i][(std::size_t)j] = v;
      }
    return out;
  }

  friend bool operator==(const ConeIsometry& a, const ConeIsometry& b) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (sign(a.m[(std::size_t)i][(std::size_t)j] - b.m[(std::size_t)i][(std::size_t)j]) != 0)
          return false;
    return true;
  }
};

template <class F>
struct ConePoint {
  F x, y, t;  // on the forward cone x^2 + y^2 = t^2, t > 0
};

// Group-on-ordered-circle system over the projectivized forward light cone.
// The basepoint must avoid axis endpoints of the group in play; callers pick a
// generic rational direction when the default is stabilized.
template <class F>
struct ConeSystem {
  using Elem = ConeIsometry<F>;
  using Point = ConePoint<F>;

  Point base{F(1), F(0), F(1)};

  Elem identity() const { return Elem::identity(); }
  Elem mult(const Elem& a, const Elem& b) const { return a * b; }
  Elem inverse(const Elem& a) const { return a.inverse(); }
  bool elem_eq(const Elem& a, const Elem& b) const { return a == b; }

  Point basepoint() const { return base; }

  Point apply(const Elem& g, const Point& p) const {
    auto row = [&](int i) {
      return g.m[(std::size_t)i][0] * p.x + g.m[(std::size_t)i][1] * p.y +
             g.m[(std::size_t)i][2] * p.t;
    };
    Point out{row(0), row(1), row(2)};
    if (sign(out.t) <= 0) throw Error("ConeSystem: image left the forward cone");
    return out;
  }

  bool point_eq(const Point& p, const Point& q) const {
    return sign(p.x * q.t - q.x * p.t) == 0 && sign(p.y * q.t - q.y * p.t) == 0;
  }

  // Anticlockwise orientation of three cone directions: determinant sign. Three
  // distinct points of a nondegenerate conic are never collinear, so 0 occurs
  // exactly on coincidences.
  int orient(const Point& a, const Point& b, const Point& c) const {
    F det = a.x * (b.y * c.t - c.y * b.t) - a.y * (b.x * c.t - c.x * b.t) +
            a.t * (b.x * c.y - c.x * b.y);
    return sign(det);
  }
};

// The genus-two surface group of the regular hyperbolic octagon, realized over
// Q(sqrt(2))(sqrt(56 + 40 sqrt(2))). The four side-pairing translations have
// translation length 2*acosh(1 + sqrt(2)) along axes spaced by pi/4.
struct OctagonSurfaceGroup {
  using Elem = ConeIsometry<Tower>;

  std::vector<Elem> gens;                      // gamma_0 .. gamma_3
  std::vector<std::pair<Elem, int>> relator;   // the octagon side-pairing relator
  ConeSystem<Tower> sys;

  OctagonSurfaceGroup() {
    // a Pythagorean direction off the generators' axes, so the basepoint orbit
    // is free for every element entering the computations
    sys.base = ConePoint<Tower>{Tower(Quad(Rat(3, 5))), Tower(Quad(Rat(4, 5))),
                                Tower(Quad(Rat(1)))};
    Quad rt2_over_2(Rat(0), Rat(1, 2), Rat(2));  // sqrt(2)/2
    Quad one(Rat(1)), zero(Rat(0));

    Quad ch(Rat(5), Rat(4), Rat(2));   // cosh l = 5 + 4 sqrt(2)
    Quad sh2 = ch * ch - one;          // 56 + 40 sqrt(2)
    Tower ch_t{ch};
    Tower sh{Quad(Rat(0)), Quad(Rat(1)), sh2};  // sqrt(cosh^2 - 1)

    auto lift = [](const Quad& v) { return Tower{v}; };

    // rotation by k*pi/4 about the origin of the hyperbolic plane
    auto rotation = [&](int k) {
      static const int cos_table_num[8] = {2, 1, 0, -1, -2, -1, 0, 1};
      // cos(k pi/4) in halves of sqrt(2): 1, r/2, 0, -r/2, -1, ...
      auto cosv = [&](int kk) -> Quad {
        kk = ((kk % 8) + 8) % 8;
        switch (kk) {
          case 0: return one;
          case 1: return rt2_over_2;
          case 2: return zero;
          case 3: return -rt2_over_2;
          case 4: return -one;
          case 5: return -rt2_over_2;
          case 6: return zero;
          default: return rt2_over_2;
        }
      };
      (void)cos_table_num;
      Quad c = cosv(k), s = cosv(k - 2);  // sin x = cos(x - pi/2)
      Elem r = Elem::identity();
      r.m[0][0] = lift(c);
      r.m[0][1] = lift(-s);
      r.m[1][0] = lift(s);
      r.m[1][1] = lift(c);
      return r;
    };

    Elem boost = Elem::identity();
    boost.m[0][0] = ch_t;
    boost.m[0][2] = sh;
    boost.m[2][0] = sh;
    boost.m[2][2] = ch_t;

    for (int k = 0; k < 4; ++k) {
      Elem g = rotation(k) * boost * rotation(-k);
      gens.push_back(g);
    }

    // octagon side pairing relator: g0 g1^{-1} g2 g3^{-1} g0^{-1} g1 g2^{-1} g3
    const int idx[8] = {0, 1, 2, 3, 0, 1, 2, 3};
    const int sgn[8] = {1, -1, 1, -1, -1, 1, -1, 1};
    Elem prod = Elem::identity();
    for (int k = 0; k < 8; ++k) {
      Elem letter = sgn[k] > 0 ? gens[(std::size_t)idx[k]] : gens[(std::size_t)idx[k]].inverse();
      prod = prod * letter;
      relator.emplace_back(gens[(std::size_t)idx[k]], sgn[k]);
    }
    if (!(prod == Elem::identity()))
      throw Error("OctagonSurfaceGroup: side-pairing relator failed");
  }

  // Fundamental 2-cycle of the octagon relator (boundary verified).
  BarChain2<Elem> fundamental_chain() const {
    std::vector<Elem> letters;
    std::vector<bool> is_inv;
    for (auto& [g, s] : relator) {
      letters.push_back(s > 0 ? g : g.inverse());
      is_inv.push_back(s < 0);
    }
    auto z = relator_telescope(sys, letters, is_inv);
    auto b = boundary2(sys, z);
    if (!b.terms.empty()) throw Error("OctagonSurfaceGroup: telescope boundary nonzero");
    return z;
  }

  long long euler_pairing() const {
    auto z = fundamental_chain();
    auto e = [&](const Elem& g, const Elem& h) { return ghys_e(sys, g, h); };
    return pair_cochain(sys, e, z);
  }

  // Independent route: compose the canonical-section lifts along the relator.
  long long lift_translation() const { return lift_word_translation(sys, relator); }
};

}  // namespace orderlab
