#pragma once

#include <orderlab/rational.hpp>

#include <map>
#include <string>
#include <utility>

namespace orderlab {

// Sparse integer Laurent polynomial in one variable; no zero coefficients stored.
struct LaurentPoly {
  std::map<long long, long long> c;

  static LaurentPoly term(long long exp, long long coef) {
    LaurentPoly p;
    if (coef != 0) p.c[exp] = coef;
    return p;
  }

  long long coef(long long exp) const {
    auto it = c.find(exp);
    return it == c.end() ? 0 : it->second;
  }

  void add(long long exp, long long coef) {
    if (coef == 0) return;
    auto [it, fresh] = c.emplace(exp, coef);
    if (!fresh && (it->second += coef) == 0) c.erase(it);
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (auto& [e, v] : b.c) out.add(e, v);
    return out;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (auto& [e, v] : b.c) out.add(e, -v);
    return out;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c == b.c; }

  long long eval_at_one() const {
    long long s = 0;
    for (auto& [e, v] : c) s += v;
    return s;
  }
};

// Sparse bivariate Laurent polynomial over Int, exponents (a, b) for q^a t^b.
struct Laurent2 {
  std::map<std::pair<int, int>, Int> c;

  static Laurent2 zero() { return {}; }
  static Laurent2 mono(int qa, int tb, Int coef = Int(1)) {
    Laurent2 p;
    if (coef != 0) p.c[{qa, tb}] = std::move(coef);
    return p;
  }
  static Laurent2 one() { return mono(0, 0); }

  bool is_zero() const { return c.empty(); }

  void add_term(int qa, int tb, const Int& v) {
    if (v == 0) return;
    auto key = std::pair{qa, tb};
    auto [it, fresh] = c.emplace(key, v);
    if (!fresh && (it->second += v) == 0) c.erase(it);
  }

  friend Laurent2 operator+(const Laurent2& a, const Laurent2& b) {
    Laurent2 out = a;
    for (auto& [k, v] : b.c) out.add_term(k.first, k.second, v);
    return out;
  }
  friend Laurent2 operator-(const Laurent2& a, const Laurent2& b) {
    Laurent2 out = a;
    for (auto& [k, v] : b.c) out.add_term(k.first, k.second, -v);
    return out;
  }
  friend Laurent2 operator-(const Laurent2& a) { return zero() - a; }
  friend Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
    Laurent2 out;
    for (auto& [ka, va] : a.c)
      for (auto& [kb, vb] : b.c)
        out.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return out;
  }
  friend bool operator==(const Laurent2& a, const Laurent2& b) { return a.c == b.c; }

  bool is_monomial() const { return c.size() == 1; }

  Laurent2 monomial_inverse() const {
    if (!is_monomial()) throw std::domain_error("Laurent2: not a unit monomial");
    auto& [k, v] = *c.begin();
    if (v != 1 && v != -1) throw std::domain_error("Laurent2: non-unit coefficient");
    return mono(-k.first, -k.second, v);
  }
};

}  // namespace orderlab
