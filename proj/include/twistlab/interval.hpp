// Self-contained interval arithmetic over float types of increasing
// precision (double and boost cpp_bin_float). Directed rounding is obtained
// by ulp-widening; conversions from rationals are verified by exact rational
// comparison, so every enclosure is sound. Provides the few transcendental
// enclosures the signature certification needs: sqrt of a rational and
// cos/sin of rational multiples of pi (Taylor with alternating-series
// remainder against embedded pi digits).
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <type_traits>

#include "twistlab/rational.hpp"

namespace twistlab {

using F50 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>>;
using F100 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;
using F200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
using F400 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<400>>;

template <class F>
inline F f_from_int(const Int& v) {
  if constexpr (std::is_same_v<F, double>)
    return v.convert_to<double>();
  else
    return F(v);
}

// Exact dyadic value of a float as a rational.
template <class F>
inline Rat to_rat_exact(F x) {
  if (x == 0) return Rat(0);
  int e = 0;
  F m;
  if constexpr (std::is_same_v<F, double>) {
    m = std::frexp(x, &e);
  } else {
    m = frexp(x, &e);
  }
  const int d = std::numeric_limits<F>::digits;
  F scaled;
  Int mi;
  if constexpr (std::is_same_v<F, double>) {
    scaled = std::ldexp(m, d);
    mi = Int(static_cast<long long>(scaled));
  } else {
    scaled = ldexp(m, d);
    mi = scaled.template convert_to<Int>();
  }
  int shift = e - d;
  if (shift >= 0) return Rat(mi * ipow(Int(2), shift), 1);
  return Rat(mi, ipow(Int(2), -shift));
}

template <class F>
inline F f_ldexp(F x, int e) {
  if constexpr (std::is_same_v<F, double>)
    return std::ldexp(x, e);
  else
    return ldexp(x, e);
}

template <class F>
inline F ulp_up(F x) {
  if constexpr (std::is_same_v<F, double>) return std::nextafter(x, std::numeric_limits<double>::infinity());
  else {
    const int d = std::numeric_limits<F>::digits;
    if (x == 0) return f_ldexp(F(1), -4 * d);
    int e = 0;
    frexp(x, &e);
    return x + f_ldexp(F(1), e - d + 1);
  }
}

template <class F>
inline F ulp_down(F x) {
  if constexpr (std::is_same_v<F, double>) return std::nextafter(x, -std::numeric_limits<double>::infinity());
  else {
    const int d = std::numeric_limits<F>::digits;
    if (x == 0) return -f_ldexp(F(1), -4 * d);
    int e = 0;
    frexp(x, &e);
    return x - f_ldexp(F(1), e - d + 1);
  }
}

template <class F>
struct Iv {
  F lo{}, hi{};

  Iv() = default;
  Iv(F l, F h) : lo(l), hi(h) {
    if (lo > hi) throw std::logic_error("inverted interval");
  }
  static Iv exact(F v) { return Iv(v, v); }
  static Iv zero() { return Iv(F(0), F(0)); }

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  F mag() const { return std::max<F>(lo < 0 ? -lo : lo, hi < 0 ? -hi : hi); }
  F mid() const { return (lo + hi) / 2; }
};

template <class F>
inline Iv<F> widen(F lo, F hi) {
  return Iv<F>(ulp_down(lo), ulp_up(hi));
}

template <class F>
inline Iv<F> operator+(const Iv<F>& a, const Iv<F>& b) {
  return widen<F>(a.lo + b.lo, a.hi + b.hi);
}
template <class F>
inline Iv<F> operator-(const Iv<F>& a, const Iv<F>& b) {
  return widen<F>(a.lo - b.hi, a.hi - b.lo);
}
template <class F>
inline Iv<F> operator-(const Iv<F>& a) {
  return Iv<F>(-a.hi, -a.lo);
}
template <class F>
inline Iv<F> operator*(const Iv<F>& a, const Iv<F>& b) {
  F c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
  F lo = std::min(std::min(c1, c2), std::min(c3, c4));
  F hi = std::max(std::max(c1, c2), std::max(c3, c4));
  return widen<F>(lo, hi);
}
template <class F>
inline Iv<F> operator*(const Iv<F>& a, int s) {
  return a * Iv<F>::exact(F(s));
}

// Sound enclosure of a rational value.
template <class F>
inline Iv<F> iv_from_rat(const Rat& r) {
  F approx = f_from_int<F>(r.numerator()) / f_from_int<F>(r.denominator());
  F lo = ulp_down(approx), hi = ulp_up(approx);
  while (to_rat_exact(lo) > r) lo = ulp_down(lo);
  while (to_rat_exact(hi) < r) hi = ulp_up(hi);
  return Iv<F>(lo, hi);
}

// Enclosure of sqrt(v) for rational v >= 0, verified by exact squaring.
template <class F>
inline Iv<F> sqrt_enclosure(const Rat& v) {
  if (v < Rat(0)) throw std::domain_error("sqrt of negative rational");
  if (v == Rat(0)) return Iv<F>::zero();
  F approx;
  if constexpr (std::is_same_v<F, double>)
    approx = std::sqrt(v.numerator().convert_to<double>() / v.denominator().convert_to<double>());
  else
    approx = sqrt(f_from_int<F>(v.numerator()) / f_from_int<F>(v.denominator()));
  F lo = ulp_down(ulp_down(approx)), hi = ulp_up(ulp_up(approx));
  if (lo < 0) lo = 0;
  auto sq = [](const Rat& x) { return x * x; };
  while (sq(to_rat_exact(lo)) > v) lo = ulp_down(lo);
  while (sq(to_rat_exact(hi)) < v) hi = ulp_up(hi);
  return Iv<F>(lo, hi);
}

// 500 decimal digits of pi as exact rational bounds.
inline const Rat& pi_rat_lo() {
  static const Rat v = [] {
    const char* digits =
        "3"
        "14159265358979323846264338327950288419716939937510"
        "58209749445923078164062862089986280348253421170679"
        "82148086513282306647093844609550582231725359408128"
        "48111745028410270193852110555964462294895493038196"
        "44288109756659334461284756482337867831652712019091"
        "45648566923460348610454326648213393607260249141273"
        "72458700660631558817488152092096282925409171536436"
        "78925903600113305305488204665213841469519415116094"
        "33057270365759591953092186117381932611793105118548"
        "07446237996274956735188575272489122793818301194912";
    return Rat(Int(digits), ipow(Int(10), 500));
  }();
  return v;
}

template <class F>
inline Iv<F> pi_enclosure() {
  const Rat& lo = pi_rat_lo();
  Rat hi = lo + Rat(1, ipow(Int(10), 500));
  Iv<F> l = iv_from_rat<F>(lo), h = iv_from_rat<F>(hi);
  return Iv<F>(l.lo, h.hi);
}

namespace detail {

// cos(x) / sin(x) on an interval x in [0, pi/2 + eps] via alternating Taylor
// series; remainder bounded by the first omitted term.
template <class F>
inline Iv<F> cos_series(const Iv<F>& x) {
  Iv<F> x2 = x * x;
  Iv<F> sum = Iv<F>::exact(F(1));
  Iv<F> term = Iv<F>::exact(F(1));
  const F tol = f_ldexp(F(1), -(std::numeric_limits<F>::digits + 6));
  int k = 0;
  while (true) {
    ++k;
    term = term * x2;
    term = widen<F>(term.lo / F(2 * k - 1), term.hi / F(2 * k - 1));
    term = widen<F>(term.lo / F(2 * k), term.hi / F(2 * k));
    if (term.lo < 0) term.lo = 0;
    if (k % 2 == 1)
      sum = sum - term;
    else
      sum = sum + term;
    if (k >= 2 && term.hi < tol) break;
    if (k > 300) break;
  }
  // next term bounds the remainder (series is alternating and decreasing here)
  Iv<F> next = term * x2;
  F rem = ulp_up(ulp_up(next.hi / F((2 * k + 1) * (2 * k + 2))));
  return Iv<F>(sum.lo - rem, sum.hi + rem);
}

template <class F>
inline Iv<F> sin_series(const Iv<F>& x) {
  Iv<F> x2 = x * x;
  Iv<F> sum = x;
  Iv<F> term = x;
  const F tol = f_ldexp(F(1), -(std::numeric_limits<F>::digits + 6));
  int k = 0;
  while (true) {
    ++k;
    term = term * x2;
    term = widen<F>(term.lo / F(2 * k), term.hi / F(2 * k));
    term = widen<F>(term.lo / F(2 * k + 1), term.hi / F(2 * k + 1));
    if (term.lo < 0) term.lo = 0;
    if (k % 2 == 1)
      sum = sum - term;
    else
      sum = sum + term;
    if (k >= 2 && term.hi < tol) break;
    if (k > 300) break;
  }
  Iv<F> next = term * x2;
  F rem = ulp_up(ulp_up(next.hi / F((2 * k + 2) * (2 * k + 3))));
  return Iv<F>(sum.lo - rem, sum.hi + rem);
}

}  // namespace detail

// cos(pi * u) for rational u, sound enclosure. Folds u into [0, 1/2] first.
template <class F>
inline Iv<F> cos_pi(Rat u) {
  // reduce mod 2
  Int fl = rat_floor(u / 2);
  u -= Rat(2) * fl;
  int sign = 1;
  if (u > Rat(1)) u = Rat(2) - u;            // cos(2pi - x) = cos(x)
  if (u > Rat(1, 2)) {                        // cos(pi - x) = -cos(x)
    u = Rat(1) - u;
    sign = -1;
  }
  Iv<F> x = pi_enclosure<F>() * iv_from_rat<F>(u);
  Iv<F> c = detail::cos_series(x);
  return sign > 0 ? c : -c;
}

// sin(pi * u) for rational u, sound enclosure.
template <class F>
inline Iv<F> sin_pi(Rat u) {
  Int fl = rat_floor(u / 2);
  u -= Rat(2) * fl;
  int sign = 1;
  if (u > Rat(1)) {  // sin(2pi - x) = -sin(x)
    u = Rat(2) - u;
    sign = -1;
  }
  if (u > Rat(1, 2)) u = Rat(1) - u;  // sin(pi - x) = sin(x)
  Iv<F> x = pi_enclosure<F>() * iv_from_rat<F>(u);
  Iv<F> s = detail::sin_series(x);
  return sign > 0 ? s : -s;
}

}  // namespace twistlab
