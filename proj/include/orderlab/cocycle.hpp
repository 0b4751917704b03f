#pragma once

#include <orderlab/circle.hpp>
#include <orderlab/errors.hpp>
#include <orderlab/rational.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace orderlab {

// Cocycle machinery is generic over an "ordered circle system": a group acting on
// an exactly ordered circle model.
//
//   struct Sys {
//     using Elem  = ...;  using Point = ...;
//     Elem identity() const;  Elem mult(Elem,Elem) const;  Elem inverse(Elem) const;
//     bool elem_eq(Elem,Elem) const;
//     Point basepoint() const;  Point apply(Elem, Point) const;
//     bool point_eq(Point,Point) const;
//     int orient(Point,Point,Point) const;   // {-1,0,+1}, 0 iff two points coincide
//   };

// x strictly before y in the cut linear order at the basepoint (basepoint minimal).
template <class Sys>
bool cut_less(const Sys& sys, const typename Sys::Point& x, const typename Sys::Point& y) {
  auto p0 = sys.basepoint();
  if (sys.point_eq(x, y)) return false;
  if (sys.point_eq(x, p0)) return true;
  if (sys.point_eq(y, p0)) return false;
  return sys.orient(p0, x, y) == 1;
}

// Ghys cocycle from the canonical section s(g)(0) in [0,1): evaluates the
// defining composite through the order of basepoint images.
template <class Sys>
int ghys_e(const Sys& sys, const typename Sys::Elem& g0, const typename Sys::Elem& g1) {
  auto p0 = sys.basepoint();
  auto x = sys.apply(sys.mult(g0, g1), p0);
  auto y = sys.apply(g0, p0);
  return cut_less(sys, x, y) ? 1 : 0;
}

// Thurston homogeneous cocycle at the basepoint. Zero when two orbit points agree.
template <class Sys>
int thurston_c_hom(const Sys& sys, const typename Sys::Elem& g0,
                   const typename Sys::Elem& g1, const typename Sys::Elem& g2) {
  auto p0 = sys.basepoint();
  return sys.orient(sys.apply(g0, p0), sys.apply(g1, p0), sys.apply(g2, p0));
}

// Inhomogeneous coordinates: c(g,h) = c_hom(Id, g, gh).
template <class Sys>
int thurston_c(const Sys& sys, const typename Sys::Elem& g, const typename Sys::Elem& h) {
  return thurston_c_hom(sys, sys.identity(), g, sys.mult(g, h));
}

template <class Elem>
struct BarChain1 {
  std::vector<std::pair<long long, Elem>> terms;
};

template <class Elem>
struct BarChain2 {
  std::vector<std::tuple<long long, Elem, Elem>> terms;

  void add(long long coef, Elem g, Elem h) {
    if (coef != 0) terms.emplace_back(coef, std::move(g), std::move(h));
  }

  long long one_norm() const {
    long long n = 0;
    for (const auto& [c, g, h] : terms) n += std::abs(c);
    return n;
  }
};

template <class Sys>
BarChain1<typename Sys::Elem> combine(const Sys& sys,
                                      BarChain1<typename Sys::Elem> chain) {
  BarChain1<typename Sys::Elem> out;
  for (auto& [c, g] : chain.terms) {
    bool merged = false;
    for (auto& [oc, og] : out.terms)
      if (sys.elem_eq(g, og)) {
        oc += c;
        merged = true;
        break;
      }
    if (!merged) out.terms.emplace_back(c, g);
  }
  std::erase_if(out.terms, [](const auto& t) { return t.first == 0; });
  return out;
}

// d(g,h) = (h) - (gh) + (g), coefficients combined; degenerate terms kept.
template <class Sys>
BarChain1<typename Sys::Elem> boundary2(const Sys& sys,
                                        const BarChain2<typename Sys::Elem>& chain) {
  BarChain1<typename Sys::Elem> out;
  for (const auto& [c, g, h] : chain.terms) {
    out.terms.emplace_back(c, h);
    out.terms.emplace_back(-c, sys.mult(g, h));
    out.terms.emplace_back(c, g);
  }
  return combine(sys, std::move(out));
}

template <class Elem>
struct FundamentalCycle {
  int genus = 0;
  BarChain2<Elem> chain;
};

// Signed letters of the standard surface relator [a1,b1]...[ag,bg].
template <class Elem, class Inv>
std::vector<Elem> surface_relator_letters(const std::vector<Elem>& gens, Inv inv) {
  std::vector<Elem> w;
  for (std::size_t i = 0; i + 1 < gens.size(); i += 2) {
    const Elem& a = gens[i];
    const Elem& b = gens[i + 1];
    w.push_back(a);
    w.push_back(b);
    w.push_back(inv(a));
    w.push_back(inv(b));
  }
  return w;
}

// Telescope 2-cycle of a relator word w = x1...xm (a product equal to Id in which
// every generator occurs once with each sign):
//   z = sum_k (x1..x_{k-1}, x_k) - sum_{inverse letters} (x, x^{-1}) - (#inv)(Id, Id)
template <class Sys>
BarChain2<typename Sys::Elem> relator_telescope(
    const Sys& sys, const std::vector<typename Sys::Elem>& letters,
    const std::vector<bool>& letter_is_inverse) {
  using Elem = typename Sys::Elem;
  BarChain2<Elem> z;
  Elem prefix = sys.identity();
  for (std::size_t k = 0; k < letters.size(); ++k) {
    z.add(1, prefix, letters[k]);
    prefix = sys.mult(prefix, letters[k]);
  }
  if (!sys.elem_eq(prefix, sys.identity())) throw RelationNotSatisfied();
  long long inv_count = 0;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (!letter_is_inverse[k]) continue;
    ++inv_count;
    z.add(-1, sys.inverse(letters[k]), letters[k]);
  }
  z.add(-inv_count, sys.identity(), sys.identity());
  return z;
}

// Standard fundamental 2-cycle: (a,b) - (b,a) in genus one, the verified telescope
// over the surface relator in higher genus.
template <class Sys>
FundamentalCycle<typename Sys::Elem> fundamental_cycle(
    const Sys& sys, int genus, const std::vector<typename Sys::Elem>& gens) {
  using Elem = typename Sys::Elem;
  if (genus < 1) throw UsageError("fundamental_cycle: genus must be >= 1");
  if ((int)gens.size() != 2 * genus)
    throw UsageError("fundamental_cycle: need 2*genus elements");
  FundamentalCycle<Elem> out;
  out.genus = genus;
  if (genus == 1) {
    const Elem& a = gens[0];
    const Elem& b = gens[1];
    if (!sys.elem_eq(sys.mult(a, b), sys.mult(b, a))) throw RelationNotSatisfied();
    out.chain.add(1, a, b);
    out.chain.add(-1, b, a);
    return out;
  }
  std::vector<Elem> letters;
  std::vector<bool> is_inv;
  for (int i = 0; i < genus; ++i) {
    const Elem& a = gens[(std::size_t)(2 * i)];
    const Elem& b = gens[(std::size_t)(2 * i + 1)];
    letters.insert(letters.end(), {a, b, sys.inverse(a), sys.inverse(b)});
    is_inv.insert(is_inv.end(), {false, false, true, true});
  }
  out.chain = relator_telescope(sys, letters, is_inv);
  // the boundary must be identically zero after combination
  auto b = boundary2(sys, out.chain);
  if (!b.terms.empty()) throw RelationNotSatisfied("telescope boundary nonzero");
  return out;
}

template <class Sys, class Cochain>
long long pair_cochain(const Sys& sys, Cochain&& f,
                       const BarChain2<typename Sys::Elem>& z) {
  (void)sys;
  long long total = 0;
  for (const auto& [c, g, h] : z.terms) total += c * (long long)f(g, h);
  return total;
}

// <e - 1/2, z> as an exact rational (the Milnor-Wood representative pairing).
template <class Sys>
Rat milnor_wood_pairing(const Sys& sys, const BarChain2<typename Sys::Elem>& z) {
  Rat total(0);
  for (const auto& [c, g, h] : z.terms)
    total += Rat(c) * (Rat(ghys_e(sys, g, h)) - Rat(1, 2));
  return total;
}

// Inhomogeneous coboundary of a 2-cochain, for cocycle-condition checks.
template <class Sys, class Cochain>
long long coboundary3(const Sys& sys, Cochain&& f, const typename Sys::Elem& g,
                      const typename Sys::Elem& h, const typename Sys::Elem& k) {
  return (long long)f(h, k) - (long long)f(sys.mult(g, h), k) +
         (long long)f(g, sys.mult(h, k)) - (long long)f(g, h);
}

// ---------------------------------------------------------------------------
// Independent lift bookkeeping: composing canonical-section lifts along a word
// and reading off the final integer translation.

template <class Sys>
struct LiftPoint {
  typename Sys::Point pt;
  long long level = 0;
};

// Value of the canonical section s(g) (or its inverse) at a lifted point.
template <class Sys>
LiftPoint<Sys> section_apply(const Sys& sys, const typename Sys::Elem& g,
                             const LiftPoint<Sys>& x, bool inverse_map = false) {
  auto p0 = sys.basepoint();
  auto gp0 = sys.apply(g, p0);
  if (!inverse_map) {
    auto img = sys.apply(g, x.pt);
    long long bump = cut_less(sys, img, gp0) ? 1 : 0;
    return {img, x.level + bump};
  }
  auto pre = sys.apply(sys.inverse(g), x.pt);
  long long bump = cut_less(sys, x.pt, gp0) ? 1 : 0;
  return {pre, x.level - bump};
}

// Composes s(g_1)^{s_1} ... s(g_m)^{s_m} as honest maps, evaluated at the lift of
// the basepoint. When the underlying product is Id the result is the integer
// translation amount of the composed lift.
template <class Sys>
long long lift_word_translation(
    const Sys& sys,
    const std::vector<std::pair<typename Sys::Elem, int>>& word) {
  LiftPoint<Sys> x{sys.basepoint(), 0};
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    x = section_apply(sys, it->first, x, it->second < 0);
  if (!sys.point_eq(x.pt, sys.basepoint()))
    throw RelationNotSatisfied("lift_word_translation: word is not a relator");
  return x.level;
}

// ---------------------------------------------------------------------------
// Piecewise-linear model system: elements are PL lifts, equality is equality of
// the underlying circle maps.

struct PLSystem {
  using Elem = PLLift;
  using Point = Rat;

  Elem identity() const { return PLLift::identity(); }
  Elem mult(const Elem& a, const Elem& b) const { return a.compose(b); }
  Elem inverse(const Elem& a) const { return a.inverse(); }
  bool elem_eq(const Elem& a, const Elem& b) const { return same_circle_map(a, b); }

  Point basepoint() const { return Rat(0); }
  Point apply(const Elem& g, const Point& p) const { return g.act(p); }
  bool point_eq(const Point& a, const Point& b) const { return a == b; }

  int orient(const Point& x, const Point& y, const Point& z) const {
    if (x == y || y == z || x == z) return 0;
    Rat ay = frac(y - x), az = frac(z - x);
    return ay < az ? 1 : -1;
  }
};

// Literal evaluation of the Ghys composite s(g0 g1)^{-1} s(g0) s(g1) (0) through
// exact PL lifts; used as the oracle route against the order formula.
inline int ghys_e_literal(const PLSystem& sys, const PLLift& g0, const PLLift& g1) {
  PLLift s0 = ghys_section(g0);
  PLLift s1 = ghys_section(g1);
  PLLift s01 = ghys_section(sys.mult(g0, g1));
  Rat v = s01.inverse().eval(s0.eval(s1.eval(Rat(0))));
  if (den(v) != 1) throw NonExactLift("ghys_e_literal: non-integer translation");
  long long e = (long long)num(v);
  return (int)e;
}

}  // namespace orderlab
