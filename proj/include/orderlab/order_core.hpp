#pragma once

#include <orderlab/errors.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace orderlab {

using Id = std::int64_t;

struct TotalOrder {
  std::vector<Id> carrier;  // listed in increasing order
  std::unordered_map<Id, int> rank;

  static TotalOrder from_sorted(std::vector<Id> sorted) {
    TotalOrder t;
    t.carrier = std::move(sorted);
    for (int i = 0; i < (int)t.carrier.size(); ++i) t.rank[t.carrier[i]] = i;
    return t;
  }

  bool contains(Id x) const { return rank.count(x) != 0; }

  int rank_of(Id x) const {
    auto it = rank.find(x);
    if (it == rank.end()) throw UnknownId();
    return it->second;
  }

  bool less(Id x, Id y) const { return rank_of(x) < rank_of(y); }
};

// Orientation function on distinct triples of a finite carrier, values in {-1,+1}.
// Alternating and cyclically invariant; queries are memoized on the sorted triple.
class CircularOrder {
 public:
  CircularOrder() = default;
  CircularOrder(std::vector<Id> carrier, std::function<int(Id, Id, Id)> orient)
      : carrier_(std::move(carrier)), orient_(std::move(orient)) {
    for (Id x : carrier_) index_.emplace(x, (int)index_.size());
  }

  const std::vector<Id>& carrier() const { return carrier_; }
  bool contains(Id x) const { return index_.count(x) != 0; }

  int orient(Id x, Id y, Id z) const {
    if (x == y || y == z || x == z) throw NonDistinct();
    if (!contains(x) || !contains(y) || !contains(z)) throw UnknownId();
    Id a = x, b = y, c = z;
    int s = 1;
    if (a > b) { std::swap(a, b); s = -s; }
    if (b > c) { std::swap(b, c); s = -s; }
    if (a > b) { std::swap(a, b); s = -s; }
    auto key = std::array<Id, 3>{a, b, c};
    auto it = memo_.find(key);
    int base;
    if (it != memo_.end()) {
      base = it->second;
    } else {
      base = orient_(a, b, c);
      memo_.emplace(key, base);
    }
    return s * base;
  }

 private:
  std::vector<Id> carrier_;
  std::function<int(Id, Id, Id)> orient_;
  std::unordered_map<Id, int> index_;
  mutable std::map<std::array<Id, 3>, int> memo_;
};

struct OrderReport {
  bool pass = false;
  std::vector<Id> counterexample;  // nonempty iff !pass
  std::string detail;
};

inline int orient_triple(const CircularOrder& co, Id x, Id y, Id z) {
  return co.orient(x, y, z);
}

struct Incompatibility {
  std::vector<Id> subset;  // offending 4-subset (3-subset for |carrier|==3)
  std::vector<Id> chain;   // failed transitivity chain (p, x, y, z): x <_p y <_p z but not x <_p z
  std::string reason;
};

// Validates a triple-orientation function per the quadruple-compatibility criterion:
// for each p the relation x <_p y iff orient(p,x,y)=+1 must be transitive. Also checks
// that the function is alternating, cyclic and valued in {-1,+1}. The returned
// counterexample is the lexicographically least offending subset.
inline std::variant<CircularOrder, Incompatibility> circular_from_triples(
    std::vector<Id> carrier, std::function<int(Id, Id, Id)> orient) {
  std::vector<Id> ids = carrier;
  std::sort(ids.begin(), ids.end());
  const int n = (int)ids.size();
  if (n < 3) throw UnknownId("circular_from_triples: carrier must have >= 3 elements");

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Id x = ids[i], y = ids[j], z = ids[k];
        int v = orient(x, y, z);
        if (v != 1 && v != -1)
          return Incompatibility{{x, y, z}, {}, "orientation value outside {-1,+1}"};
        if (orient(y, z, x) != v || orient(z, x, y) != v)
          return Incompatibility{{x, y, z}, {}, "orientation not cyclically invariant"};
        if (orient(y, x, z) != -v || orient(x, z, y) != -v || orient(z, y, x) != -v)
          return Incompatibility{{x, y, z}, {}, "orientation not alternating"};
      }

  if (n == 3) {
    // y <_x z iff z <_y x, i.e. orient(x,y,z) == orient(y,z,x); already checked above.
    return CircularOrder(std::move(carrier), std::move(orient));
  }

  // Quadruple compatibility, scanned in lexicographic order of the 4-subset.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          std::array<Id, 4> q{ids[i], ids[j], ids[k], ids[l]};
          for (int p = 0; p < 4; ++p) {
            std::array<Id, 3> rest;
            int r = 0;
            for (int t = 0; t < 4; ++t)
              if (t != p) rest[r++] = q[t];
            // transitivity of <_{q[p]} on the three remaining elements
            std::array<Id, 3> perm = rest;
            std::sort(perm.begin(), perm.end());
            do {
              Id x = perm[0], y = perm[1], z = perm[2];
              if (orient(q[p], x, y) == 1 && orient(q[p], y, z) == 1 &&
                  orient(q[p], x, z) != 1) {
                return Incompatibility{{q[0], q[1], q[2], q[3]},
                                       {q[p], x, y, z},
                                       "transitivity of cut order fails"};
              }
            } while (std::next_permutation(perm.begin(), perm.end()));
          }
        }

  return CircularOrder(std::move(carrier), std::move(orient));
}

// Total order on carrier minus p: x < y iff orient(p,x,y) = +1.
inline TotalOrder cut_at(const CircularOrder& co, Id p) {
  if (!co.contains(p)) throw UnknownId();
  std::vector<Id> rest;
  for (Id x : co.carrier())
    if (x != p) rest.push_back(x);
  std::sort(rest.begin(), rest.end(),
            [&](Id x, Id y) { return co.orient(p, x, y) == 1; });
  return TotalOrder::from_sorted(std::move(rest));
}

// Order extension along a short exact sequence 0 -> K -> G -> H -> 0:
// compare by image in H first, then by g2^{-1} g1 against Id inside K.
// kernel_diff(g1, g2) resolves g2^{-1} g1 to a K-id whenever the images agree.
inline TotalOrder ses_extend_lo(
    const std::vector<Id>& subset, const std::function<Id(Id)>& phi,
    const TotalOrder& quotient_order,
    const std::function<std::optional<Id>(Id, Id)>& kernel_diff,
    const TotalOrder& kernel_order, Id kernel_identity) {
  auto less = [&](Id g1, Id g2) {
    Id h1 = phi(g1), h2 = phi(g2);
    if (h1 != h2) return quotient_order.less(h1, h2);
    auto k = kernel_diff(g2, g1);  // g1^{-1} g2: g1 < g2 iff g1^{-1} g2 > Id
    if (!k) throw UnresolvedKernelElement();
    return kernel_order.less(kernel_identity, *k);
  };
  std::vector<Id> sorted = subset;
  std::sort(sorted.begin(), sorted.end(), less);
  return TotalOrder::from_sorted(std::move(sorted));
}

namespace detail {
// phi(g1) == phi(g2) != phi(g3): positively-ordered iff g2^{-1} g1 < Id, which in
// the left-invariant order is g1 < g2.
template <class KLess>
int orient_equal_pair_first(Id g1, Id g2, const KLess& kless) {
  return kless(g1, g2) ? 1 : -1;
}
}  // namespace detail

// Circular sibling: K left-ordered, H circularly-ordered. Implements the three
// displayed cases of the circular extension lemma.
inline CircularOrder ses_extend_co(
    const std::vector<Id>& subset, const std::function<Id(Id)>& phi,
    const CircularOrder& quotient_order,
    const std::function<std::optional<Id>(Id, Id)>& kernel_diff,
    const TotalOrder& kernel_order, Id kernel_identity) {
  auto kless = [kernel_diff, kernel_order, kernel_identity](Id g1, Id g2) {
    // g1 < g2 through K
    auto k = kernel_diff(g2, g1);
    if (!k) throw UnresolvedKernelElement();
    return kernel_order.less(kernel_identity, *k);
  };
  auto orient = [=](Id g1, Id g2, Id g3) -> int {
    Id h1 = phi(g1), h2 = phi(g2), h3 = phi(g3);
    if (h1 != h2 && h2 != h3 && h1 != h3) return quotient_order.orient(h1, h2, h3);
    if (h1 == h2 && h2 == h3) {
      // g3^{-1}g1, g3^{-1}g2, Id acquire the K-order. With the convention that the
      // inclusion of the kernel's line into the cut circle is order-preserving,
      // ascending triples are positively-ordered (this is also the unique sign
      // compatible with the equal-pair case on quadruples).
      bool lt12 = kless(g1, g2), lt23 = kless(g2, g3), lt13 = kless(g1, g3);
      int inversions = (!lt12) + (!lt23) + (!lt13);
      return (inversions % 2 == 0) ? 1 : -1;
    }
    // exactly one pair of equal images: rotate it to the front
    if (h2 == h3) return detail::orient_equal_pair_first(g2, g3, kless);
    if (h1 == h3) return detail::orient_equal_pair_first(g3, g1, kless);
    return detail::orient_equal_pair_first(g1, g2, kless);
  };
  return CircularOrder(subset, orient);
}

}  // namespace orderlab
