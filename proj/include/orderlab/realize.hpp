#pragma once

#include <orderlab/circle.hpp>
#include <orderlab/order_core.hpp>

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace orderlab {

// Injective placement of a circularly ordered carrier on exact circle angles.
struct Embedding {
  std::map<Id, Rat> angle;  // id -> dyadic rational in [0,1)

  int orient(Id x, Id y, Id z) const {
    Rat ax = angle.at(x), ay = frac(angle.at(y) - angle.at(x)),
        az = frac(angle.at(z) - angle.at(x));
    if (ay == 0 || az == 0 || ay == az) throw NonDistinct();
    return ay < az ? 1 : -1;
  }
};

// Midpoint realization: g1 at 0, g2 at 1/2, every later element at the midpoint
// of the unique compatible complementary arc. All outputs are dyadic.
inline Embedding dynamical_realization(const CircularOrder& co,
                                       const std::vector<Id>& enumeration) {
  if (co.carrier().size() < 3)
    throw UsageError("dynamical_realization: carrier must have >= 3 elements");
  if (enumeration.size() != co.carrier().size())
    throw UsageError("dynamical_realization: enumeration must cover the carrier");
  for (Id g : enumeration)
    if (!co.contains(g)) throw UnknownId();

  Embedding e;
  std::vector<Id> placed;
  auto try_place = [&](Id g, const Rat& cand) {
    for (Id x : placed)
      for (Id y : placed) {
        if (x == y) continue;
        Rat ax = frac(e.angle.at(x) - cand), ay = frac(e.angle.at(y) - cand);
        int geo = ax < ay ? 1 : -1;
        if (geo != co.orient(g, x, y)) return false;
      }
    return true;
  };

  for (std::size_t n = 0; n < enumeration.size(); ++n) {
    Id g = enumeration[n];
    if (n == 0) {
      e.angle[g] = Rat(0);
    } else if (n == 1) {
      e.angle[g] = Rat(1, 2);
    } else {
      std::vector<Rat> angles;
      for (Id x : placed) angles.push_back(e.angle.at(x));
      std::sort(angles.begin(), angles.end());
      std::optional<Rat> chosen;
      for (std::size_t i = 0; i < angles.size(); ++i) {
        Rat lo = angles[i];
        Rat hi = (i + 1 < angles.size()) ? angles[i + 1] : angles.front() + 1;
        Rat mid = frac((lo + hi) / 2);
        if (try_place(g, mid)) {
          if (chosen) throw Error("dynamical_realization: ambiguous arc (invalid order?)");
          chosen = mid;
        }
      }
      if (!chosen) throw Error("dynamical_realization: no compatible arc");
      e.angle[g] = *chosen;
    }
    placed.push_back(g);
  }
  return e;
}

struct BlowUpData {
  std::vector<Rat> orbit;    // orbit points in [0,1), sorted
  std::vector<Rat> weights;  // positive, rescaled to keep total circle length 1
  PLLift collapse;           // monotone degree-one projection onto the old circle
};

// Denjoy blow-up of a finite orbit: replaces each orbit point by an interval of
// the prescribed weight, extending each map affinely over the inserted intervals,
// and returns the collapse map realizing the semi-conjugacy.
inline std::pair<std::vector<PLLift>, BlowUpData> blow_up(
    const std::vector<PLLift>& action, const std::vector<Rat>& orbit_in,
    const std::vector<Rat>& weights_in) {
  if (orbit_in.empty() || weights_in.size() != orbit_in.size())
    throw UsageError("blow_up: weights must match the orbit");
  std::vector<std::pair<Rat, Rat>> pw;
  for (std::size_t i = 0; i < orbit_in.size(); ++i) {
    if (!(weights_in[i] > 0)) throw UsageError("blow_up: weights must be positive");
    pw.emplace_back(frac(orbit_in[i]), weights_in[i]);
  }
  std::sort(pw.begin(), pw.end());
  for (std::size_t i = 0; i + 1 < pw.size(); ++i)
    if (pw[i].first == pw[i + 1].first) throw UsageError("blow_up: repeated orbit point");

  std::vector<Rat> orbit, weights;
  Rat total(0);
  for (auto& [o, w] : pw) {
    orbit.push_back(o);
    weights.push_back(w);
    total += w;
  }

  // each generator must permute the orbit
  auto orbit_index = [&](const Rat& x) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < orbit.size(); ++i)
      if (orbit[i] == x) return i;
    return std::nullopt;
  };
  for (const PLLift& g : action)
    for (const Rat& o : orbit)
      if (!orbit_index(g.act(o))) throw OrbitNotClosed();

  const Rat scale = Rat(1) + total;  // new circle length before renormalization

  // nu maps an old coordinate to the start of its blown image; points of the
  // orbit open up to intervals [nu(o), nu(o) + w/scale].
  auto nu = [&](const Rat& x_real) -> Rat {
    Rat x = frac(x_real);
    Rat shift(0);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      if (orbit[i] < x) shift += weights[i];
    return (x + shift) / scale + Rat(floor_rat(x_real));
  };
  auto interval_of = [&](std::size_t i) {
    Rat lo = nu(orbit[i]);
    return std::pair{lo, lo + weights[i] / scale};
  };

  // collapse map: inverse of nu, constant on inserted intervals
  std::vector<std::pair<Rat, Rat>> cpts;
  cpts.emplace_back(Rat(0), Rat(0));
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    auto [lo, hi] = interval_of(i);
    cpts.emplace_back(frac(lo), orbit[i] + Rat(floor_rat(lo)));
    cpts.emplace_back(frac(hi), orbit[i] + Rat(floor_rat(hi)));
  }
  std::sort(cpts.begin(), cpts.end());
  cpts.erase(std::unique(cpts.begin(), cpts.end()), cpts.end());
  // drop duplicated abscissae (0 may coincide with an interval edge)
  for (std::size_t i = 0; i + 1 < cpts.size();) {
    if (cpts[i].first == cpts[i + 1].first) cpts.erase(cpts.begin() + (long)i);
    else ++i;
  }
  PLLift collapse(cpts);

  std::vector<PLLift> blown;
  for (const PLLift& g : action) {
    std::vector<std::pair<Rat, Rat>> pts;
    auto add = [&](const Rat& x, const Rat& y) { pts.emplace_back(frac(x), y - Rat(floor_rat(x))); };
    // breakpoints of g transported by nu
    for (const auto& [x, v] : g.breakpoints()) add(nu(x), nu(v));
    // inserted intervals map affinely onto their images
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      Rat img = g.eval(orbit[i]);
      std::size_t j = *orbit_index(frac(img));
      auto [lo, hi] = interval_of(i);
      auto [jlo, jhi] = interval_of(j);
      Rat lift_shift = Rat(floor_rat(img));  // carries the winding of g
      add(lo, jlo + lift_shift);
      add(hi, jhi + lift_shift);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (std::size_t i = 0; i + 1 < pts.size();) {
      if (pts[i].first == pts[i + 1].first) pts.erase(pts.begin() + (long)i);
      else ++i;
    }
    blown.emplace_back(pts);
  }

  BlowUpData data{std::move(orbit), {}, collapse};
  for (const Rat& w : weights) data.weights.push_back(w / scale);
  return {std::move(blown), std::move(data)};
}

// Circular order on a ball of group elements from an action on a circularly
// ordered finite set. Triples are oriented at the first basepoint separating
// them; persistent ties fall back to the kernel order through the short-exact-
// sequence rules.
inline CircularOrder order_from_action(
    const std::vector<Id>& acting_ball,
    const std::function<Id(Id, Id)>& act,  // (element, point) -> point
    const CircularOrder& point_order, const std::vector<Id>& basepoints,
    const std::function<std::optional<Id>(Id, Id)>& kernel_diff = nullptr,
    const TotalOrder* kernel_order = nullptr, Id kernel_identity = 0) {
  if (basepoints.empty()) throw UsageError("order_from_action: need basepoints");

  auto same_orbit_tuple = [act, basepoints](Id g, Id h) {
    for (Id p : basepoints)
      if (act(g, p) != act(h, p)) return false;
    return true;
  };
  TotalOrder kernel_copy = kernel_order ? *kernel_order : TotalOrder{};
  bool have_kernel = kernel_order != nullptr && kernel_diff != nullptr;
  auto kless = [kernel_diff, kernel_copy, have_kernel, kernel_identity](Id g1, Id g2) {
    // g1 < g2 through the kernel
    if (!have_kernel) throw IndistinguishableElements();
    auto k = kernel_diff(g2, g1);
    if (!k) throw UnresolvedKernelElement();
    return kernel_copy.less(kernel_identity, *k);
  };

  auto orient = [=](Id g1, Id g2, Id g3) -> int {
    // first basepoint with three pairwise-distinct images decides
    for (Id p : basepoints) {
      Id x = act(g1, p), y = act(g2, p), z = act(g3, p);
      if (x != y && y != z && x != z) return point_order.orient(x, y, z);
    }
    // no basepoint separates the triple; ties must be full orbit-tuple ties,
    // resolved through the kernel by the short-exact-sequence rules
    bool e12 = same_orbit_tuple(g1, g2), e23 = same_orbit_tuple(g2, g3),
         e13 = same_orbit_tuple(g1, g3);
    if (e12 && e23) {
      // one kernel coset: ascending kernel triples are positive
      bool lt12 = kless(g1, g2), lt23 = kless(g2, g3), lt13 = kless(g1, g3);
      int inversions = (!lt12) + (!lt23) + (!lt13);
      return (inversions % 2 == 0) ? 1 : -1;
    }
    if (e12) return kless(g1, g2) ? 1 : -1;
    if (e23) return kless(g2, g3) ? 1 : -1;
    if (e13) return kless(g3, g1) ? 1 : -1;
    throw Error(
        "order_from_action: basepoints separate every pair but never the whole "
        "triple; supply a finer basepoint sequence");
  };

  return CircularOrder(acting_ball, orient);
}

}  // namespace orderlab
