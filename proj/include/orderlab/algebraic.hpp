#pragma once

#include <orderlab/rational.hpp>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace orderlab {

// Quadratic extension F(sqrt(m)) of an exact ordered field F, as values a + b*sqrt(m).
// Towers compose: Ext<Ext<Rat>> is a degree-4 field over Rat. Values entering one
// arithmetic expression must share the radicand (a pure-base value, b == 0, mixes freely).
// Exact square root of a rational if it exists.
inline std::optional<Rat> exact_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  Int n = num(x), d = den(x);
  Int s = boost::multiprecision::sqrt(n * d);
  if (s * s != n * d) return std::nullopt;
  return Rat(s, d);
}

template <class F>
struct Ext {
  F a{}, b{}, m{};

  Ext() = default;
  explicit Ext(int v) : a(F(v)), b(F(0)), m(F(0)) {}
  explicit Ext(const F& base) : a(base), b(F(0)), m(F(0)) {}
  Ext(F a_, F b_, F m_) : a(std::move(a_)), b(std::move(b_)), m(std::move(m_)) {
    if (sign(m) < 0) throw std::invalid_argument("Ext: negative radicand");
    if (sign(m) == 0 || sign(b) == 0) { b = F(0); m = F(0); }
    if constexpr (std::is_same_v<F, Rat>) {
      // fold perfect-square radicands so conjugate tricks never degenerate
      if (sign(b) != 0) {
        if (auto r = exact_sqrt(m)) {
          a += b * *r;
          b = F(0);
          m = F(0);
        }
      }
    }
  }

  bool is_base() const { return sign(b) == 0; }

  static F merged_radicand(const Ext& x, const Ext& y) {
    if (x.is_base()) return y.m;
    if (y.is_base()) return x.m;
    if (sign(x.m - y.m) != 0) throw std::invalid_argument("Ext: mixed radicands");
    return x.m;
  }

  friend Ext operator+(const Ext& x, const Ext& y) {
    return Ext(x.a + y.a, x.b + y.b, merged_radicand(x, y));
  }
  friend Ext operator-(const Ext& x, const Ext& y) {
    return Ext(x.a - y.a, x.b - y.b, merged_radicand(x, y));
  }
  friend Ext operator-(const Ext& x) { return Ext(-x.a, -x.b, x.m); }
  friend Ext operator*(const Ext& x, const Ext& y) {
    F m = merged_radicand(x, y);
    return Ext(x.a * y.a + x.b * y.b * m, x.a * y.b + x.b * y.a, m);
  }
  Ext inverse() const {
    F n = a * a - b * b * m;
    if (sign(n) == 0) throw std::domain_error("Ext: inverse of zero (or square radicand)");
    return Ext(a / n, -b / n, m);
  }
  friend Ext operator/(const Ext& x, const Ext& y) { return x * y.inverse(); }

  Ext& operator+=(const Ext& y) { return *this = *this + y; }
  Ext& operator-=(const Ext& y) { return *this = *this - y; }
  Ext& operator*=(const Ext& y) { return *this = *this * y; }
};

// sign(a + b*sqrt(m)), exact. Valid even when m is a square in F.
template <class F>
int sign(const Ext<F>& x) {
  int sa = sign(x.a), sb = sign(x.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  return sa * sign(x.a * x.a - x.b * x.b * x.m);
}

template <class F>
bool operator==(const Ext<F>& x, const Ext<F>& y) { return sign(x - y) == 0; }
template <class F>
bool operator<(const Ext<F>& x, const Ext<F>& y) { return sign(x - y) < 0; }

template <class F>
Ext<F> ext_sqrt(const F& x) {
  if (sign(x) < 0) throw std::domain_error("ext_sqrt: negative");
  return Ext<F>(F(0), F(1), x);
}

// sign(u + v*sqrt(d1) + w*sqrt(d2)) with independent radicands, by sign-split and squaring.
template <class F>
int sign_two_radicals(const F& u, const F& v, const F& d1, const F& w, const F& d2) {
  if (sign(v) == 0 || sign(d1) == 0) return sign(Ext<F>(u, w, d2));
  if (sign(w) == 0 || sign(d2) == 0) return sign(Ext<F>(u, v, d1));
  Ext<F> s(u, v, d1);
  int ss = sign(s), st = sign(w);
  if (ss == 0) return st;
  if (ss == st) return ss;
  // compare s^2 with w^2*d2 inside F(sqrt(d1))
  Ext<F> diff(u * u + v * v * d1 - w * w * d2, F(2) * u * v, d1);
  int sd = sign(diff);
  return ss * sd;
}

template <class F>
double to_double(const Ext<F>& x) {
  return to_double(x.a) + to_double(x.b) * std::sqrt(to_double(x.m));
}

template <class F>
std::string format_ext(const Ext<F>& x);

inline std::string format_ext(const Rat& x) { return format_rat(x); }

template <class F>
std::string format_ext(const Ext<F>& x) {
  if (x.is_base()) return format_ext(x.a);
  return "(" + format_ext(x.a) + "+" + format_ext(x.b) + "*sqrt(" + format_ext(x.m) + "))";
}

using Quad = Ext<Rat>;        // a + b*sqrt(m), rational a, b, m
using Tower = Ext<Ext<Rat>>;  // second-level extension

}  // namespace orderlab
