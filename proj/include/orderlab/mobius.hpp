#pragma once

#include <orderlab/algebraic.hpp>
#include <orderlab/errors.hpp>
#include <orderlab/rational.hpp>
#include <orderlab/words.hpp>

#include <utility>
#include <vector>

namespace orderlab {

// Exact 2x2 matrix of determinant 1 acting on the boundary circle RP^1.
struct Mobius {
  Rat a{0}, b{0}, c{0}, d{0};

  Mobius() : a(1), d(1) {}
  Mobius(Rat a_, Rat b_, Rat c_, Rat d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c != 1) throw UsageError("Mobius: determinant must be 1");
  }

  Rat trace() const { return a + d; }

  bool hyperbolic() const { return abs(trace()) > 2; }

  Mobius inverse() const { return Mobius(d, -b, -c, a); }

  friend Mobius operator*(const Mobius& m, const Mobius& n) {
    return Mobius(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                  m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
  }

  friend bool operator==(const Mobius& m, const Mobius& n) {
    return (m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d) ||
           (m.a == -n.a && m.b == -n.b && m.c == -n.c && m.d == -n.d);
  }
};

// Boundary point of the hyperbolic plane in projective coordinates (p : q),
// p a quadratic irrational, q rational and nonnegative; infinity is (1 : 0).
struct BoundaryPoint {
  Quad p;
  Rat q;

  static BoundaryPoint infinity() { return {Quad(Rat(1)), Rat(0)}; }
  static BoundaryPoint rational(const Rat& x) { return {Quad(x), Rat(1)}; }

  bool is_infinity() const { return q == 0; }
};

inline bool operator==(const BoundaryPoint& x, const BoundaryPoint& y) {
  // p1 q2 == p2 q1 within the shared or mixed quadratic fields
  Quad lhs = x.p * Quad(y.q);
  Quad rhs = y.p * Quad(x.q);
  if (x.is_infinity() && y.is_infinity()) return true;
  return sign_two_radicals(lhs.a - rhs.a, lhs.b, lhs.m, -rhs.b, rhs.m) == 0;
}

// sign of the projective 2x2 minor p1 q2 - p2 q1
inline int boundary_minor_sign(const BoundaryPoint& x, const BoundaryPoint& y) {
  Quad lhs = x.p * Quad(y.q);
  Quad rhs = y.p * Quad(x.q);
  return sign_two_radicals(lhs.a - rhs.a, lhs.b, lhs.m, -rhs.b, rhs.m);
}

// Anticlockwise orientation of three boundary points (0 when two coincide):
// the product of the three pairwise minors.
inline int boundary_orient(const BoundaryPoint& x, const BoundaryPoint& y,
                           const BoundaryPoint& z) {
  int m12 = boundary_minor_sign(x, y);
  int m23 = boundary_minor_sign(y, z);
  int m31 = boundary_minor_sign(z, x);
  return m12 * m23 * m31;
}

inline BoundaryPoint mobius_apply(const Mobius& m, const BoundaryPoint& x) {
  Quad p = Quad(m.a) * x.p + Quad(m.b * x.q);
  Quad qq = Quad(m.c) * x.p + Quad(m.d * x.q);
  // the new q must be rational for our stored points; this holds when x.q is
  // rational and x.p has no radical part, or the caller stays on one axis field
  // where q-parts cancel; in general renormalize by the sign only.
  // We keep full generality by multiplying through the conjugate when needed.
  if (sign(qq.b) != 0) {
    // multiply numerator and denominator by the conjugate of qq
    Quad conj(qq.a, -qq.b, qq.m);
    Quad num = p * conj;
    Quad den = qq * conj;  // rational: a^2 - b^2 m
    if (sign(den.b) != 0) throw Error("mobius_apply: conjugate failed");
    BoundaryPoint out{num, den.a};
    if (out.q < 0) {
      out.p = -out.p;
      out.q = -out.q;
    }
    if (out.q == 0) {
      int s = sign(out.p);
      if (s < 0) out.p = -out.p;
    }
    return out;
  }
  BoundaryPoint out{p, qq.a};
  if (out.q < 0) {
    out.p = -out.p;
    out.q = -out.q;
  }
  if (out.q == 0) {
    int s = sign(out.p);
    if (s < 0) out.p = -out.p;
  }
  return out;
}

struct AxisEndpoints {
  BoundaryPoint repelling;
  BoundaryPoint attracting;
};

// Exact fixed points of a hyperbolic matrix on the boundary, tagged by the
// eigenvalue magnitudes.
inline AxisEndpoints axis_endpoints(const Mobius& m) {
  Rat tr = m.trace();
  if (!(abs(tr) > 2)) throw NotHyperbolic();
  Rat disc = tr * tr - 4;
  if (m.c != 0) {
    // x = ((a-d) +- sqrt(disc)) / (2c); eigenvalue (tr +- sqrt(disc))/2, the
    // + branch is attracting exactly when tr > 2
    int s_att = tr > 0 ? 1 : -1;
    auto point = [&](int s) {
      Quad p(m.a - m.d, Rat(s), disc);
      Rat q = 2 * m.c;
      if (q < 0) {
        p = -p;
        q = -q;
      }
      return BoundaryPoint{p, q};
    };
    return {point(-s_att), point(s_att)};
  }
  // c == 0: fixed points are infinity and b/(d-a)
  BoundaryPoint inf = BoundaryPoint::infinity();
  Rat denom = m.d - m.a;
  BoundaryPoint fin = BoundaryPoint::rational(m.b / denom);
  bool inf_attracting = abs(m.a) > abs(m.d);
  if (inf_attracting) return {fin, inf};
  return {inf, fin};
}

// Evaluates a free-group word through a representation gen index -> Mobius.
inline Mobius evaluate_word(const std::vector<Mobius>& rep, const Word& w) {
  Mobius m;
  for (Sym s : w.syms) {
    const Mobius& g = rep.at((std::size_t)sym_gen(s));
    m = m * (sym_sign(s) > 0 ? g : g.inverse());
  }
  return m;
}

}  // namespace orderlab
