// Exact integer and rational arithmetic used throughout the engine.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace twistlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Int ipow(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

// floor(a/b) for integers, correct for negative values.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int rat_floor(const Rat& x) { return floor_div(x.numerator(), x.denominator()); }

inline Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

// ceil(a/b) for plain machine integers, a,b > 0.
inline long long ceil_div_ll(long long a, long long b) { return (a + b - 1) / b; }

inline std::string rat_str(const Rat& x) {
  std::ostringstream os;
  os << x.numerator();
  if (x.denominator() != 1) os << '/' << x.denominator();
  return os.str();
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s), 1);
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::runtime_error("cannot parse rational: " + s);
  }
}

}  // namespace twistlab
