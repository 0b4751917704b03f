#pragma once

#include <orderlab/errors.hpp>
#include <orderlab/rational.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace orderlab {

// Piecewise-linear lift of a circle map: monotone PL f with f(x+1) = f(x)+1,
// stored by its breakpoints (x, f(x)) with x in [0,1). Rigid rotations have a
// single breakpoint. Strictly increasing lifts represent circle homeomorphisms;
// non-strict ones appear as collapse maps of blow-ups.
class PLLift {
 public:
  PLLift() : pts_{{Rat(0), Rat(0)}} {}
  explicit PLLift(std::vector<std::pair<Rat, Rat>> pts) : pts_(std::move(pts)) {
    if (pts_.empty()) throw UsageError("PLLift: needs at least one breakpoint");
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i) {
      if (pts_[i].first == pts_[i + 1].first)
        throw UsageError("PLLift: duplicate breakpoint abscissa");
      if (pts_[i + 1].second < pts_[i].second)
        throw UsageError("PLLift: lift not monotone");
    }
    if (pts_.size() >= 2 && pts_.front().second + 1 < pts_.back().second)
      throw UsageError("PLLift: lift not monotone across the period");
    if (pts_.front().first < 0 || pts_.front().first >= 1 ||
        pts_.back().first >= 1)
      throw UsageError("PLLift: breakpoints must lie in [0,1)");
  }

  static PLLift identity() { return PLLift(); }

  static PLLift rotation(const Rat& theta) {
    return PLLift({{Rat(0), theta}});
  }

  const std::vector<std::pair<Rat, Rat>>& breakpoints() const { return pts_; }

  bool strictly_increasing() const {
    if (pts_.size() == 1) return true;
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i)
      if (!(pts_[i].second < pts_[i + 1].second)) return false;
    return pts_.back().second < pts_.front().second + 1;
  }

  Rat eval(const Rat& x) const {
    Int m = floor_rat(x - pts_.front().first);
    Rat xr = x - Rat(m);  // in [x_0, x_0 + 1)
    // find segment
    std::size_t i = 0;
    while (i + 1 < pts_.size() && pts_[i + 1].first <= xr) ++i;
    Rat x0 = pts_[i].first, y0 = pts_[i].second;
    Rat x1, y1;
    if (i + 1 < pts_.size()) {
      x1 = pts_[i + 1].first;
      y1 = pts_[i + 1].second;
    } else {
      x1 = pts_.front().first + 1;
      y1 = pts_.front().second + 1;
    }
    Rat y = (x1 == x0) ? y0 : y0 + (y1 - y0) * (xr - x0) / (x1 - x0);
    return y + Rat(m);
  }

  // Circle-level action: image of a point of [0,1).
  Rat act(const Rat& x) const { return frac(eval(x)); }

  PLLift compose(const PLLift& g) const {  // (*this) after g
    if (!g.strictly_increasing())
      throw NonExactLift("PLLift: structural compose needs a strict inner lift");
    std::vector<Rat> xs;
    for (const auto& p : g.pts_) xs.push_back(p.first);
    PLLift ginv = g.inverse();
    for (const auto& p : pts_) xs.push_back(frac(ginv.eval(p.first)));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<std::pair<Rat, Rat>> pts;
    for (const Rat& x : xs) pts.emplace_back(x, eval(g.eval(x)));
    return PLLift(std::move(pts));
  }

  PLLift inverse() const {
    if (!strictly_increasing()) throw NonExactLift("PLLift: inverse of non-strict lift");
    std::vector<std::pair<Rat, Rat>> pts;
    for (const auto& [x, v] : pts_) {
      Int k = floor_rat(v);
      pts.emplace_back(v - Rat(k), x - Rat(k));
    }
    return PLLift(std::move(pts));
  }

  PLLift shift(const Int& n) const {  // f + n
    auto pts = pts_;
    for (auto& p : pts) p.second += Rat(n);
    return PLLift(std::move(pts));
  }

  friend bool operator==(const PLLift& f, const PLLift& g) {
    std::vector<Rat> xs;
    for (const auto& p : f.pts_) xs.push_back(p.first);
    for (const auto& p : g.pts_) xs.push_back(p.first);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (const Rat& x : xs)
      if (f.eval(x) != g.eval(x)) return false;
    return true;
  }

  // Same underlying circle map (lifts differing by an integer translation).
  friend bool same_circle_map(const PLLift& f, const PLLift& g) {
    Rat d = f.eval(Rat(0)) - g.eval(Rat(0));
    if (den(d) != 1) return false;
    return f == g.shift(num(d));
  }

 private:
  std::vector<std::pair<Rat, Rat>> pts_;
};

// The canonical section: the lift with s(g)(0) in [0,1).
inline PLLift ghys_section(const PLLift& lift) {
  return lift.shift(-floor_rat(lift.eval(Rat(0))));
}

}  // namespace orderlab
