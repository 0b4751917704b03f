#pragma once

#include <orderlab/laurent.hpp>
#include <orderlab/planar_map.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace orderlab {

// ---------------------------------------------------------------------------
// Euler class via the developing polygon.

struct PolygonLayout {
  // the relator letters: (generator index, sign) over the word whose telescope
  // bounds the surface, e.g. a b a^-1 b^-1 (genus one)
  std::vector<std::pair<int, int>> letters;
  std::vector<PlanarMap> generators;           // per generator index
  std::vector<std::optional<PolylineArc>> base_arcs;  // p -> g(p); nullopt = degenerate
  QPoint basepoint;
  // which side of the base arc each degenerate generator's perturbed edge
  // takes (+1 above, -1 below); defaults to +1
  std::vector<int> perturb_side;
};

namespace planar_detail {

inline PlanarMap prefix_map(const PolygonLayout& lay, std::size_t k) {
  std::vector<PlanarMap> parts;
  for (std::size_t i = 0; i < k; ++i) {
    auto [g, s] = lay.letters[i];
    parts.push_back(s > 0 ? lay.generators[(std::size_t)g]
                          : lay.generators[(std::size_t)g].inverse());
  }
  if (parts.empty()) return PlanarMap::identity();
  return PlanarMap::compose(std::move(parts));
}

}  // namespace planar_detail

// Winding index of the developing image of the polygon boundary. Degenerate
// edges (letters fixing the basepoint) are realized as short near-vertical
// edges; their corner offsets propagate through the edge-pairing maps, and the
// neighbouring arcs are dragged to the perturbed corners. Retries with smaller
// perturbations on exact-pi corners.
inline long long polygon_boundary_index(const PolygonLayout& lay, const Rat& tol,
                                        Rat eps = Rat(1, 64)) {
  using planar_detail::prefix_map;
  const std::size_t m = lay.letters.size();
  for (int attempt = 0; attempt < 6; ++attempt, eps /= 7) {
    // per-generator perturbation vectors: paired edges of one generator must
    // match exactly, edges of different generators must not fold onto each other
    auto ebase = [&](int g) {
      int side = g < (int)lay.perturb_side.size() ? lay.perturb_side[(std::size_t)g] : 1;
      return QPoint{eps * Rat(g + 1, 97 + 5 * g), Rat(side) * eps};
    };
    try {
      // Perturbed corner positions. The polygon has a single vertex; its link
      // visits the corner wedges in the cycle sigma(k) = pair(k) + 1. Corners
      // developing to one plane point are separated on a small circle there,
      // in the induced cyclic order, so the perturbed developing boundary is
      // embedded near every developed vertex image.
      std::vector<std::size_t> pair(m, m);
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          if (l != k && lay.letters[l].first == lay.letters[k].first &&
              lay.letters[l].second == -lay.letters[k].second)
            pair[k] = l;
      for (std::size_t k = 0; k < m; ++k)
        if (pair[k] == m) throw InconsistentEdgePairing("unpaired relator letter");
      std::vector<std::size_t> cycle;
      {
        std::vector<bool> seen(m, false);
        std::size_t cur = 0;
        for (std::size_t step = 0; step < m; ++step) {
          if (seen[cur])
            throw InconsistentEdgePairing("vertex cycle is not a single orbit");
          seen[cur] = true;
          cycle.push_back(cur);
          cur = (pair[cur] + 1) % m;
        }
      }
      // developed corner images and clusters of coincident corners
      std::vector<QPoint> corner(m);
      for (std::size_t k = 0; k < m; ++k)
        corner[k] = prefix_map(lay, k).apply(lay.basepoint);
      std::vector<QPoint> w(m);
      std::vector<bool> placed(m, false);
      for (std::size_t k = 0; k < m; ++k) {
        if (placed[k]) continue;
        // cluster members in vertex-cycle order
        std::vector<std::size_t> cluster;
        for (std::size_t j = 0; j < m; ++j)
          if (corner[cycle[j]] == corner[k]) cluster.push_back(cycle[j]);
        std::size_t n = cluster.size();
        for (std::size_t j = 0; j < n; ++j) {
          // rational point near angle 2*pi*(j + 1/3)/n, anticlockwise
          Rat tt = Rat((long long)(3 * j + 1), (long long)(3 * n));
          Rat h = 2 * tt - 1;
          Rat denom = 1 + h * h;
          QPoint dir{-(1 - h * h) / denom, -2 * h / denom};
          w[cluster[j]] = QPoint{eps * dir.x, eps * dir.y};
          placed[cluster[j]] = true;
        }
      }
      (void)ebase;
      auto off = [&](std::size_t k) { return w[k % m]; };

      std::vector<QPoint> loop;
      auto append = [&](const QPoint& pt) {
        if (loop.empty() || !(loop.back() == pt)) loop.push_back(pt);
      };
      Rat attempt_tol = tol / (1 + attempt);  // varies the sampling per retry
      for (std::size_t k = 0; k < m; ++k) {
        auto [g, sgn] = lay.letters[k];
        PlanarMap pre = prefix_map(lay, k);
        PlanarMap pre_next = prefix_map(lay, k + 1);
        if (!lay.base_arcs[(std::size_t)g]) {
          QPoint from = pre.apply(lay.basepoint) + off(k);
          QPoint to = pre.apply(lay.basepoint) + off(k + 1);
          if (sgn < 0) {
            from = pre_next.apply(lay.basepoint) + off(k);
            to = pre_next.apply(lay.basepoint) + off(k + 1);
          }
          append(from);
          append(to);
          continue;
        }
        const PolylineArc& sigma = *lay.base_arcs[(std::size_t)g];
        PolylineArc edge = sgn > 0 ? push_arc(pre, sigma, attempt_tol)
                                   : push_arc(pre_next, sigma, attempt_tol).reversed();
        // drag the arc linearly from off(k) at its start to off(k+1) at its end
        QPoint w0 = off(k), w1 = off(k + 1);
        std::size_t n = edge.vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
          Rat t = n > 1 ? Rat((long long)i, (long long)(n - 1)) : Rat(0);
          append(edge.vertices[i] + w0 + t * (w1 - w0));
        }
      }
      append(loop.front());
      return turning_index(PolylineArc(std::move(loop)));
    } catch (const DegenerateCorner&) {
      continue;
    }
  }
  throw DegenerateCorner("polygon_boundary_index: could not perturb away pi corners");
}

// rho*([e])([S]) = index(boundary) + 1 - 2g
inline long long euler_via_polygon(const PolygonLayout& lay, const Rat& tol = Rat(1, 16)) {
  if (lay.letters.size() % 4 != 0)
    throw UsageError("euler_via_polygon: relator length must be 4g");
  long long genus = (long long)lay.letters.size() / 4;
  return polygon_boundary_index(lay, tol) + 1 - 2 * genus;
}

// Euler class from the ray formula: delta . tau_plus - delta . tau_minus.
// The rays are truncated; their far endpoints must escape the bounding box of
// delta for the truncation to be certified.
inline long long euler_via_rays(const PolylineArc& delta, const PolylineArc& tau_plus,
                                const PolylineArc& tau_minus) {
  Rat lox = delta.vertices[0].x, hix = lox, loy = delta.vertices[0].y, hiy = loy;
  for (const auto& v : delta.vertices) {
    lox = std::min(lox, v.x);
    hix = std::max(hix, v.x);
    loy = std::min(loy, v.y);
    hiy = std::max(hiy, v.y);
  }
  auto escapes = [&](const QPoint& p) {
    return p.x < lox || p.x > hix || p.y < loy || p.y > hiy;
  };
  if (!escapes(tau_plus.back()) || !escapes(tau_minus.back()))
    throw NotProper("euler_via_rays: truncated rays do not escape");
  return intersection_number(delta, tau_plus) - intersection_number(delta, tau_minus);
}

// ---------------------------------------------------------------------------
// Alexander and self-intersection series.

struct AlexanderOptions {
  Rat tol = Rat(1, 32);
  bool allow_perturbation = true;
  Rat rotation_turns = Rat(1, 4);           // angle of the germ perturbation
  std::optional<Rat> support_radius;        // default: half the orbit gap
};

struct AlexanderSeries {
  LaurentPoly A, B;
  int window = 0;
  bool proper = true;
};

namespace planar_detail {

inline void check_orbit_proper(const PlanarMap& beta, const QPoint& p, int window) {
  std::vector<QPoint> orbit;
  for (int i = -window - 1; i <= window + 1; ++i) orbit.push_back(beta.power(i).apply(p));
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (std::size_t j = i + 1; j < orbit.size(); ++j)
      if (orbit[i] == orbit[j]) throw OrbitNotProper("repeated orbit point");
  // geometric shrinking of consecutive steps marks accumulation
  for (std::size_t i = 0; i + 2 < orbit.size(); ++i) {
    Rat step1 = norm_inf(orbit[i + 1] - orbit[i]);
    Rat step2 = norm_inf(orbit[i + 2] - orbit[i + 1]);
    if (2 * step2 < step1 || 2 * step1 < step2) {
      // one-sided growth is fine; require the shrinking side to keep shrinking
      // toward an accumulation point inside a fixed box
      throw OrbitNotProper("orbit steps shrink geometrically");
    }
  }
}

}  // namespace planar_detail

// Series of signed crossings a_i = delta . beta^i(tau), b_i = tau . beta^i(tau),
// with the constant term of A computed after the germ perturbation when the
// basepoint derivative of alpha is trivial.
inline AlexanderSeries alexander_series(const PlanarMap& alpha, const PlanarMap& beta,
                                        const QPoint& p, const PolylineArc& tau,
                                        int window, AlexanderOptions opt = {}) {
  if (!(alpha.apply(p) == p)) throw UsageError("alexander_series: alpha must fix p");
  if (!(tau.front() == p)) throw UsageError("alexander_series: tau must start at p");
  if (!(tau.back() == beta.apply(p)))
    throw UsageError("alexander_series: tau must end at beta(p)");
  planar_detail::check_orbit_proper(beta, p, window);

  AlexanderSeries out;
  out.window = window;

  PolylineArc delta = push_arc(alpha, tau, opt.tol);

  for (int i = -window; i <= window; ++i) {
    PolylineArc bi_tau = push_arc(beta.power(i), tau, opt.tol);
    if (i != 0) {
      long long ai = intersection_number(delta, bi_tau, EndpointPolicy::exclude_endpoints);
      long long bi = intersection_number(tau, bi_tau, EndpointPolicy::exclude_endpoints);
      if (ai != 0) out.A.add(i, ai);
      if (bi != 0) out.B.add(i, bi);
    }
  }

  // constant term of A
  QPoint dtau = tau.dir(0);
  QPoint ddelta = delta.dir(0);
  long long a0 = 0;
  if (cross(dtau, ddelta) != 0) {
    a0 = intersection_number(delta, tau, EndpointPolicy::exclude_endpoints) +
         sign(cross(ddelta, dtau));
  } else {
    if (!opt.allow_perturbation) throw TangencyAtZero();
    // small-support rotation phi at p; delta' = beta phi beta^{-1} phi (delta)
    Rat gap = norm_inf(beta.apply(p) - p);
    Rat support = opt.support_radius ? *opt.support_radius : gap / 2;
    SquareTwist phi_tw{p, Rat(0), support,
                       TwistProfile::linear(opt.rotation_turns, Rat(0))};
    PlanarMap phi = PlanarMap::square_twist(phi_tw);
    PlanarMap combo = PlanarMap::compose(
        {beta, phi, beta.inverse(), phi});
    PolylineArc delta_p = push_arc(combo, delta, opt.tol);
    QPoint dp = delta_p.dir(0);
    if (cross(dp, dtau) == 0) throw TangencyAtZero("perturbation failed");
    a0 = intersection_number(delta_p, tau, EndpointPolicy::exclude_endpoints) +
         sign(cross(dp, dtau));
  }
  if (a0 != 0) out.A.add(0, a0);
  return out;
}

// e_rho = sum_{i>0}(a_i - b_i) - sum_{i<0}(a_i - b_i)
inline long long euler_from_series(const LaurentPoly& A, const LaurentPoly& B) {
  LaurentPoly D = A - B;
  long long e = 0;
  for (auto& [i, c] : D.c) {
    if (i > 0) e += c;
    if (i < 0) e -= c;
  }
  return e;
}

// sum min(i, 2n+1) a_i - sum min(-i, 2n+1) a_i with coefficients a_i - b_i
inline long long rescaled_euler(const LaurentPoly& A, const LaurentPoly& B, int n) {
  if (n < 0) throw UsageError("rescaled_euler: n must be >= 0");
  LaurentPoly D = A - B;
  long long cap = 2 * (long long)n + 1;
  long long e = 0;
  for (auto& [i, c] : D.c) {
    if (i > 0) e += std::min(i, cap) * c;
    if (i < 0) e -= std::min(-i, cap) * c;
  }
  return e;
}

// ---------------------------------------------------------------------------
// The paper's explicit actions (square-twist models).

struct ActionBundle {
  std::vector<PlanarMap> generators;  // relator generators, in letter order
  PolygonLayout layout;               // ready for euler_via_polygon
  QPoint basepoint;
  PolylineArc tau;                    // p -> beta(p) when a Z^2 pair is distinguished
  PlanarMap alpha, beta;              // the distinguished commuting pair
};

namespace planar_detail {

// Arc from p to q with axis-parallel end stubs and a generic off-axis interior,
// so pushed images never ride the twist feature lines.
inline PolylineArc bent_arc(const QPoint& p, const QPoint& q, const Rat& height) {
  QPoint d = q - p;
  Rat stub(1, 8);
  QPoint a = p + QPoint{stub * d.x, stub * d.y};
  QPoint b = q - QPoint{stub * d.x, stub * d.y};
  QPoint mid = p + Rat(1, 2) * d + QPoint{Rat(0), height};
  return PolylineArc({p, a, mid, b, q});
}

inline Rat pow2(int j) {
  if (j >= 0) return Rat(Int(1) << j);
  return Rat(1, Int(1) << (-j));
}

// twists in the square shells of radius 2^j, j in [jmin, jmax] (whole range
// when unbounded); supports [0.99, 1.01] * 2^j
inline PlanarMap concentric_twists(std::optional<int> jmin, std::optional<int> jmax) {
  auto members = [jmin, jmax](const QPoint& p, const QPoint& q) {
    std::vector<SquareTwist> out;
    Rat smin = seg_min_supnorm(p, q);
    Rat smax = std::max(norm_inf(p), norm_inf(q));
    if (smax == 0) return out;
    if (smin == 0 && !jmin)
      throw RefinementLimit("segment meets the center of an unbounded shell family");
    // shells with [99/100 2^j, 101/100 2^j] meeting [smin, smax]
    int j = 0;
    while (pow2(j) * Rat(99, 100) > smin && pow2(j) * Rat(99, 100) > Rat(0) &&
           (!jmin || j - 1 >= *jmin)) {
      --j;
      if (smin == 0 && jmin && j <= *jmin) break;
      if (j < -4096) throw RefinementLimit("shell enumeration underflow");
    }
    for (; pow2(j) * Rat(99, 100) <= smax; ++j) {
      if (jmin && j < *jmin) continue;
      if (jmax && j > *jmax) break;
      if (pow2(j) * Rat(101, 100) < smin) continue;
      out.push_back(SquareTwist{QPoint{Rat(0), Rat(0)}, pow2(j) * Rat(99, 100),
                                pow2(j) * Rat(101, 100), TwistProfile::standard()});
    }
    return out;
  };
  return PlanarMap::twist_family(members);
}

// twists in unit squares centered (3j, 0), j in [jmin, jmax]
inline PlanarMap row_twists(std::optional<int> jmin, std::optional<int> jmax) {
  auto members = [jmin, jmax](const QPoint& p, const QPoint& q) {
    std::vector<SquareTwist> out;
    QPoint lo{std::min(p.x, q.x), std::min(p.y, q.y)};
    QPoint hi{std::max(p.x, q.x), std::max(p.y, q.y)};
    if (lo.y > Rat(101, 100) || hi.y < Rat(-101, 100)) return out;
    Int jlo = floor_rat((lo.x - Rat(101, 100)) / 3) - 1;
    Int jhi = ceil_rat((hi.x + Rat(101, 100)) / 3) + 1;
    for (Int j = jlo; j <= jhi; ++j) {
      int ji = (int)j.convert_to<long long>();
      if (jmin && ji < *jmin) continue;
      if (jmax && ji > *jmax) continue;
      QPoint c{Rat(3) * ji, Rat(0)};
      if (c.x + Rat(101, 100) < lo.x || c.x - Rat(101, 100) > hi.x) continue;
      out.push_back(SquareTwist{c, Rat(99, 100), Rat(101, 100), TwistProfile::standard()});
    }
    return out;
  };
  return PlanarMap::twist_family(members);
}

}  // namespace planar_detail

// The nested-circles action: twists in all shells C_j plus the doubling map.
// index-k sublattices use (alpha, beta^k).
inline ActionBundle make_bestvina(int index = 1) {
  if (index < 1) throw UsageError("make_bestvina: index must be >= 1");
  ActionBundle b;
  b.alpha = planar_detail::concentric_twists(std::nullopt, std::nullopt);
  b.beta = PlanarMap::dilation(Rat(2)).power(index);
  b.basepoint = QPoint{Rat(3, 2), Rat(0)};
  b.tau = planar_detail::bent_arc(b.basepoint, b.beta.apply(b.basepoint), Rat(1, 7));
  b.generators = {b.alpha, b.beta};
  // boundary word beta alpha beta^-1 alpha^-1: the tau-edge comes first, the
  // perturbed verticals sit on the positive side of tau, and the polygon is
  // traversed anticlockwise
  b.layout.letters = {{1, 1}, {0, 1}, {1, -1}, {0, -1}};
  b.layout.generators = b.generators;
  b.layout.base_arcs = {std::nullopt, b.tau};  // alpha fixes the basepoint
  b.layout.basepoint = b.basepoint;
  return b;
}

// The genus-two action with parameter i: [alpha^i, beta] = [gamma^i, delta],
// realized over the relator [alpha^i, beta] [delta, gamma^i].
inline ActionBundle make_genus2(int i) {
  ActionBundle b;
  PlanarMap alpha = planar_detail::concentric_twists(0, std::nullopt);
  PlanarMap beta = PlanarMap::dilation(Rat(2));
  PlanarMap gamma = planar_detail::row_twists(0, std::nullopt);
  PlanarMap delta = PlanarMap::translation(QPoint{Rat(3), Rat(0)});
  b.alpha = alpha.power(i);
  b.beta = beta;
  b.basepoint = QPoint{Rat(3, 2), Rat(0)};
  PolylineArc sigma_beta =
      planar_detail::bent_arc(b.basepoint, beta.apply(b.basepoint), Rat(1, 7));
  PolylineArc sigma_delta =
      planar_detail::bent_arc(b.basepoint, delta.apply(b.basepoint), Rat(2, 11));
  b.tau = sigma_beta;
  b.generators = {b.alpha, beta, delta, gamma.power(i)};
  b.layout.letters = {{1, 1}, {0, 1}, {1, -1}, {0, -1},
                      {3, 1}, {2, 1}, {3, -1}, {2, -1}};
  b.layout.perturb_side = {1, 1, 1, -1};  // the second handle develops below tau
  b.layout.generators = b.generators;
  b.layout.base_arcs = {std::nullopt, sigma_beta, sigma_delta, std::nullopt};
  b.layout.basepoint = b.basepoint;
  return b;
}

// The proper row action: twists in all squares D_j plus the translation by 3.
inline ActionBundle make_twist_row() {
  ActionBundle b;
  b.alpha = planar_detail::row_twists(std::nullopt, std::nullopt);
  b.beta = PlanarMap::translation(QPoint{Rat(3), Rat(0)});
  b.basepoint = QPoint{Rat(3, 2), Rat(0)};
  b.tau = planar_detail::bent_arc(b.basepoint, b.beta.apply(b.basepoint), Rat(1, 7));
  b.generators = {b.alpha, b.beta};
  b.layout.letters = {{1, 1}, {0, 1}, {1, -1}, {0, -1}};
  b.layout.generators = b.generators;
  b.layout.base_arcs = {std::nullopt, b.tau};
  b.layout.basepoint = b.basepoint;
  return b;
}

}  // namespace orderlab
