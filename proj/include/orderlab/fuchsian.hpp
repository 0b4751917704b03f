#pragma once

#include <orderlab/free_auto.hpp>
#include <orderlab/mobius.hpp>

#include <algorithm>
#include <deque>
#include <vector>

namespace orderlab {

// Schottky-style representation of a free group: generator k is the hyperbolic
// element with axis at chain position rank-1-k, conjugated from
// diag(lambda, 1/lambda). The reversed layout makes the product x_1 x_2 ... x_r
// the outer boundary class of the quotient surface, matching the peripheral
// structure of the punctured disk that the braid automorphisms preserve.
inline std::vector<Mobius> schottky_rep(int rank, int spacing = 3,
                                        const Rat& lambda = Rat(5)) {
  std::vector<Mobius> rep;
  for (int k = 0; k < rank; ++k) {
    int pos = rank - 1 - k;
    Rat x = Rat(spacing) * pos;      // repelling
    Rat y = Rat(spacing) * pos + 1;  // attracting
    Rat il = 1 / lambda;
    Rat det = y - x;
    // C = [[y, x], [1, 1]] maps (0, infinity) to (x, y); M = C diag(l, 1/l) C^{-1}
    Rat a = (y * lambda - x * il) / det;
    Rat b = (-x * y * lambda + x * y * il) / det;
    Rat c = (lambda - il) / det;
    Rat d = (-x * lambda + y * il) / det;
    rep.emplace_back(a, b, c, d);
  }
  return rep;
}

// strict membership of a boundary point in the open anticlockwise arc (a, b)
inline bool in_arc(const BoundaryPoint& x, const BoundaryPoint& a, const BoundaryPoint& b) {
  return boundary_orient(a, x, b) == 1;
}

// arc [p,q] inside arc (a,b): endpoints inside, traversed compatibly
inline bool arc_inside(const BoundaryPoint& p, const BoundaryPoint& q,
                       const BoundaryPoint& a, const BoundaryPoint& b) {
  if (!in_arc(p, a, b) || !in_arc(q, a, b)) return false;
  // q must come after p when walking a -> b
  return boundary_orient(a, p, q) == 1 || p == q;
}

// Ping-pong certificate: generator k maps the exterior of its repelling
// interval into its attracting interval, and inversely; all intervals pairwise
// disjoint. A passing certificate proves the group is free and discrete.
inline bool schottky_certificate(const std::vector<Mobius>& rep, int spacing = 3,
                                 const Rat& radius = Rat(2, 5)) {
  const int rank = (int)rep.size();
  std::vector<std::pair<BoundaryPoint, BoundaryPoint>> intervals;  // (lo, hi)
  auto rat = [](const Rat& v) { return BoundaryPoint::rational(v); };
  for (int k = 0; k < rank; ++k) {
    int pos = rank - 1 - k;
    Rat x = Rat(spacing) * pos, y = Rat(spacing) * pos + 1;
    intervals.emplace_back(rat(x - radius), rat(x + radius));  // repelling side
    intervals.emplace_back(rat(y - radius), rat(y + radius));  // attracting side
  }
  // pairwise disjoint: check endpoints in chain order along the line
  {
    auto sorted = intervals;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) {
                return boundary_minor_sign(a.first, b.first) < 0;
              });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      if (!(boundary_minor_sign(sorted[i].second, sorted[i + 1].first) < 0))
        return false;
  }
  for (int k = 0; k < rank; ++k) {
    const auto& rminus = intervals[(std::size_t)(2 * k)];
    const auto& rplus = intervals[(std::size_t)(2 * k + 1)];
    // exterior of (lo,hi) is the arc (hi, lo); its image is the arc between the
    // endpoint images, which must land inside the target interval
    auto check = [&](const Mobius& m, const std::pair<BoundaryPoint, BoundaryPoint>& src,
                     const std::pair<BoundaryPoint, BoundaryPoint>& dst) {
      BoundaryPoint p = mobius_apply(m, src.second);
      BoundaryPoint q = mobius_apply(m, src.first);
      return arc_inside(p, q, dst.first, dst.second);
    };
    if (!check(rep[(std::size_t)k], rminus, rplus)) return false;
    if (!check(rep[(std::size_t)k].inverse(), rplus, rminus)) return false;
  }
  return true;
}

// Circular comparison of three free-group automorphisms through their action on
// axis endpoints: enumerate group elements by shortlex, take the first whose
// three attracting-endpoint images are pairwise distinct, and return their
// boundary orientation.
inline int mcg_circular_compare(const FreeAuto& phi1, const FreeAuto& phi2,
                                const FreeAuto& phi3, const std::vector<Mobius>& rep,
                                int search_cap = 4000) {
  if (phi1 == phi2 || phi2 == phi3 || phi1 == phi3) throw DegenerateTriple();
  const int rank = (int)rep.size();
  if (phi1.rank() != rank || phi2.rank() != rank || phi3.rank() != rank)
    throw UsageError("mcg_circular_compare: rank mismatch");

  // shortlex enumeration of freely reduced words
  std::deque<Word> queue;
  queue.emplace_back();
  int seen = 0;
  while (!queue.empty() && seen < search_cap) {
    Word gamma = queue.front();
    queue.pop_front();
    for (Sym s = 0; s < (Sym)(2 * rank); ++s) {
      if (!gamma.syms.empty() && gamma.syms.back() == sym_inverse(s)) continue;
      Word next = gamma;
      next.syms.push_back(s);
      queue.push_back(next);
    }
    if (gamma.empty()) continue;  // identity never separates
    ++seen;

    Mobius m1 = evaluate_word(rep, phi1.apply(gamma));
    Mobius m2 = evaluate_word(rep, phi2.apply(gamma));
    Mobius m3 = evaluate_word(rep, phi3.apply(gamma));
    if (!m1.hyperbolic() || !m2.hyperbolic() || !m3.hyperbolic()) continue;
    BoundaryPoint e1 = axis_endpoints(m1).attracting;
    BoundaryPoint e2 = axis_endpoints(m2).attracting;
    BoundaryPoint e3 = axis_endpoints(m3).attracting;
    if (e1 == e2 || e2 == e3 || e1 == e3) continue;
    return boundary_orient(e1, e2, e3);
  }
  throw CapExceeded("mcg_circular_compare");
}

// Chords {a1,a2} and {b1,b2} on the boundary circle cross iff b1 and b2 lie on
// opposite sides of the chord a1 a2.
inline bool axes_cross(const BoundaryPoint& a1, const BoundaryPoint& a2,
                       const BoundaryPoint& b1, const BoundaryPoint& b2) {
  int s1 = boundary_orient(a1, a2, b1);
  int s2 = boundary_orient(a1, a2, b2);
  if (s1 == 0 || s2 == 0) throw DegenerateTriple("axes_cross: shared endpoint");
  return s1 != s2;
}

}  // namespace orderlab
