#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace orderlab {

// Expression templates are off: every arithmetic result is a plain value, so
// auto/CTAD never captures a dangling expression node.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Int& n) { return n.sign(); }
inline int sign(const Rat& q) { return q.sign(); }

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(num(q), den(q)); }
inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

// Fractional part in [0,1).
inline Rat frac(const Rat& q) { return q - Rat(floor_rat(q)); }

inline Rat abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Parses "p/q" or "p" (optional sign, arbitrary precision).
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int p(s.substr(0, slash)), q(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
  return Rat(p, q);
}

inline std::string format_rat(const Rat& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

}  // namespace orderlab
