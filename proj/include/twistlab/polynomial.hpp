// Integer and rational univariate polynomials: exact determinant support,
// Sturm-sequence real root isolation, cyclotomic polynomials, and the
// symmetric-Laurent form used for Alexander polynomials.
#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twistlab/rational.hpp"

namespace twistlab {

// Dense polynomial over Int, coefficient of x^i at c[i]. Invariant: no
// trailing zeros (zero polynomial has empty c).
struct IntPoly {
  std::vector<Int> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { norm(); }
  static IntPoly constant(Int v) { return IntPoly(std::vector<Int>{std::move(v)}); }
  static IntPoly x_power(int k, Int v = 1) {
    std::vector<Int> cc(k + 1, Int(0));
    cc[k] = std::move(v);
    return IntPoly(std::move(cc));
  }

  void norm() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const Int& lead() const { return c.back(); }
  Int at(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : Int(0); }

  bool operator==(const IntPoly& o) const { return c == o.c; }
};

inline IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return IntPoly(std::move(r));
}

inline IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return IntPoly(std::move(r));
}

inline IntPoly operator-(const IntPoly& a) {
  IntPoly r = a;
  for (auto& v : r.c) v = -v;
  return r;
}

inline IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return IntPoly(std::move(r));
}

inline IntPoly operator*(const IntPoly& a, const Int& s) {
  IntPoly r = a;
  for (auto& v : r.c) v *= s;
  r.norm();
  return r;
}

// Exact division; throws if the division leaves a remainder.
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::runtime_error("polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  std::vector<Int> rem = a.c, q(std::max<int>(a.deg() - b.deg() + 1, 0), Int(0));
  for (int k = a.deg() - b.deg(); k >= 0; --k) {
    Int num = rem[k + b.deg()];
    if (num == 0) continue;
    if (num % b.lead() != 0) throw std::runtime_error("non-exact polynomial division");
    Int t = num / b.lead();
    q[k] = t;
    for (int i = 0; i <= b.deg(); ++i) rem[k + i] -= t * b.c[i];
  }
  for (auto& v : rem)
    if (v != 0) throw std::runtime_error("non-exact polynomial division");
  return IntPoly(std::move(q));
}

inline IntPoly derivative(const IntPoly& a) {
  if (a.deg() < 1) return IntPoly();
  std::vector<Int> r(a.deg(), Int(0));
  for (int i = 1; i <= a.deg(); ++i) r[i - 1] = a.c[i] * i;
  return IntPoly(std::move(r));
}

inline Int poly_content(const IntPoly& a) {
  Int g = 0;
  for (const auto& v : a.c) g = boost::multiprecision::gcd(g, v);
  return g;
}

inline Int eval_int(const IntPoly& a, const Int& x) {
  Int r = 0;
  for (int i = a.deg(); i >= 0; --i) r = r * x + a.c[i];
  return r;
}

// Sign of a at rational p/q (q > 0): evaluates sum a_i p^i q^(d-i).
inline int sign_at(const IntPoly& a, const Rat& x) {
  if (a.is_zero()) return 0;
  const Int &p = x.numerator(), &q = x.denominator();
  Int acc = 0, pk = 1;
  std::vector<Int> qk(a.deg() + 1);
  qk[a.deg()] = 1;
  for (int i = a.deg() - 1; i >= 0; --i) qk[i] = qk[i + 1] * q;
  for (int i = 0; i <= a.deg(); ++i) {
    acc += a.c[i] * pk * qk[i];
    pk *= p;
  }
  return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

// ---- rational polynomials (Sturm chains) ----

struct RatPoly {
  std::vector<Rat> c;
  explicit RatPoly(std::vector<Rat> cc = {}) : c(std::move(cc)) { norm(); }
  explicit RatPoly(const IntPoly& p) {
    c.reserve(p.c.size());
    for (const auto& v : p.c) c.emplace_back(v, Int(1));
  }
  void norm() {
    while (!c.empty() && c.back() == Rat(0)) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
};

inline RatPoly rp_rem(RatPoly a, const RatPoly& b) {
  while (!a.is_zero() && a.deg() >= b.deg()) {
    Rat t = a.c.back() / b.c.back();
    int shift = a.deg() - b.deg();
    for (int i = 0; i <= b.deg(); ++i) a.c[i + shift] -= t * b.c[i];
    a.norm();
  }
  return a;
}

inline int rp_sign_at(const RatPoly& a, const Rat& x) {
  Rat r(0);
  for (int i = a.deg(); i >= 0; --i) r = r * x + a.c[i];
  return r == Rat(0) ? 0 : (r > Rat(0) ? 1 : -1);
}

// Sturm chain of a square-free integer polynomial.
struct SturmChain {
  std::vector<RatPoly> seq;
  explicit SturmChain(const IntPoly& p) {
    seq.emplace_back(p);
    seq.emplace_back(derivative(p));
    while (!seq.back().is_zero() && seq.back().deg() >= 0) {
      RatPoly r = rp_rem(seq[seq.size() - 2], seq.back());
      if (r.is_zero()) break;
      for (auto& v : r.c) v = -v;
      seq.push_back(std::move(r));
      if (seq.back().deg() == 0) break;
    }
  }
  int variations(const Rat& x) const {
    int v = 0, prev = 0;
    for (const auto& p : seq) {
      int s = rp_sign_at(p, x);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }
  // number of roots in (a, b]
  int count(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }
};

// Square-free part p / gcd(p, p'), computed over the rationals and scaled
// back to a primitive integer polynomial.
inline IntPoly square_free_part(const IntPoly& p) {
  if (p.deg() <= 1) return p;
  RatPoly a(p), b(derivative(p));
  // euclidean gcd
  while (!b.is_zero()) {
    RatPoly r = rp_rem(a, b);
    a = b;
    b = std::move(r);
  }
  if (a.deg() <= 0) return p;
  // scale gcd to primitive integer poly
  Int den = 1;
  for (const auto& v : a.c) den = den / boost::multiprecision::gcd(den, v.denominator()) * v.denominator();
  std::vector<Int> gi(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) gi[i] = a.c[i].numerator() * (den / a.c[i].denominator());
  IntPoly g{std::move(gi)};
  Int cont = poly_content(g);
  if (cont != 0 && cont != 1) {
    for (auto& v : g.c) v /= cont;
  }
  IntPoly q = [&] {
    // p may not be divisible by g over Z if contents differ; clear content first.
    IntPoly pp = p;
    Int pc = poly_content(pp);
    if (pc > 1)
      for (auto& v : pp.c) v /= pc;
    IntPoly r = exact_div(pp * ipow(g.lead(), pp.deg() - g.deg() + 1), g);
    Int rc = poly_content(r);
    if (rc > 1)
      for (auto& v : r.c) v /= rc;
    return r;
  }();
  return q;
}

// Isolating intervals (lo, hi) with exactly one root of the square-free p in
// each, restricted to the open interval (lo_bound, hi_bound). Interval
// endpoints are never roots. Intervals are returned sorted and disjoint.
inline std::vector<std::pair<Rat, Rat>> isolate_roots(const IntPoly& p_in, Rat lo_bound, Rat hi_bound) {
  IntPoly p = square_free_part(p_in);
  if (p.deg() <= 0) return {};
  SturmChain chain(p);
  // nudge bounds off roots
  auto off_root = [&](Rat x, bool up) {
    while (sign_at(p, x) == 0) x += up ? Rat(1, 1000000) : Rat(-1, 1000000);
    return x;
  };
  Rat lo = off_root(lo_bound, true), hi = off_root(hi_bound, false);
  if (lo >= hi) return {};
  std::vector<std::pair<Rat, Rat>> out;
  struct Seg {
    Rat a, b;
    int n;
  };
  std::vector<Seg> work{{lo, hi, chain.count(lo, hi)}};
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.n == 0) continue;
    if (s.n == 1) {
      out.push_back({s.a, s.b});
      continue;
    }
    Rat m = (s.a + s.b) / 2;
    while (sign_at(p, m) == 0) m += (s.b - s.a) / 64;  // avoid hitting a root
    int left = chain.count(s.a, m);
    work.push_back({s.a, m, left});
    work.push_back({m, s.b, s.n - left});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  // refine until pairwise disjoint
  auto refine = [&](std::pair<Rat, Rat>& iv) {
    Rat m = (iv.first + iv.second) / 2;
    while (sign_at(p, m) == 0) m += (iv.second - iv.first) / 64;
    if (chain.count(iv.first, m) == 1)
      iv.second = m;
    else
      iv.first = m;
  };
  for (size_t i = 0; i + 1 < out.size(); ++i) {
    while (out[i].second >= out[i + 1].first) {
      refine(out[i]);
      refine(out[i + 1]);
    }
  }
  return out;
}

// ---- cyclotomic polynomials ----

inline const IntPoly& cyclotomic(unsigned d) {
  static std::map<unsigned, IntPoly> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  IntPoly xd1 = IntPoly::x_power(d) - IntPoly::constant(1);
  IntPoly q = xd1;
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) q = exact_div(q, cyclotomic(e));
  return cache.emplace(d, std::move(q)).first->second;
}

// ---- symmetric Laurent polynomials (Alexander form) ----

// l(t) = sum_{i} c[i] t^(low+i); normalized Alexander polynomials satisfy
// c == reverse(c) and positive leading coefficient.
struct Laurent {
  int low = 0;
  IntPoly p;

  bool is_zero() const { return p.is_zero(); }
  int hi() const { return low + p.deg(); }
  Int at(int k) const { return p.at(k - low); }
  bool operator==(const Laurent& o) const {
    return (is_zero() && o.is_zero()) || (low == o.low && p == o.p);
  }
};

// Strip t-units and center so that l(t) = l(1/t); flips sign so the leading
// coefficient is positive. Throws if the polynomial is not palindromic.
inline Laurent normalize_alexander(IntPoly d) {
  if (d.is_zero()) return {};
  int shift = 0;
  while (d.c.front() == 0) {
    d.c.erase(d.c.begin());
    ++shift;
  }
  int n = d.deg();
  bool pal = true, antipal = true;
  for (int i = 0; i <= n; ++i) {
    if (d.c[i] != d.c[n - i]) pal = false;
    if (d.c[i] != -d.c[n - i]) antipal = false;
  }
  if (!pal && antipal) {
    // det(V - tV^T) of a knot satisfies f(1/t) = f(t) * t^(-deg) up to sign
    for (auto& v : d.c) { /* keep */
    }
    throw std::runtime_error("antipalindromic Alexander polynomial (link input?)");
  }
  if (!pal) throw std::runtime_error("Alexander polynomial is not symmetric");
  if (n % 2 != 0) throw std::runtime_error("odd-degree Alexander polynomial (link input?)");
  if (d.lead() < 0)
    for (auto& v : d.c) v = -v;
  return Laurent{-n / 2, std::move(d)};
}

inline Int eval_laurent_at_minus1(const Laurent& l) {
  Int r = 0;
  for (int k = l.low; k <= l.hi(); ++k) r += ((k % 2) ? -l.at(k) : l.at(k));
  return r;
}

inline std::string laurent_str(const Laurent& l) {
  if (l.is_zero()) return "0";
  std::string out;
  for (int k = l.hi(); k >= l.low; --k) {
    Int c = l.at(k);
    if (c == 0) continue;
    if (!out.empty()) out += (c > 0 ? " + " : " - ");
    else if (c < 0) out += "-";
    Int a = abs(c);
    std::string coeff = a.str();
    if (k == 0) out += coeff;
    else {
      if (a != 1) out += coeff + "*";
      out += "t";
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

// Rewrite a symmetric Laurent l in the variable x = t + 1/t:
// t^k + t^-k = D_k(x), D_0 = 2, D_1 = x, D_{k+1} = x D_k - D_{k-1}.
inline IntPoly laurent_to_trace_poly(const Laurent& l) {
  if (l.is_zero()) return IntPoly();
  int d = l.hi();
  if (d != -l.low) throw std::runtime_error("not centered");
  IntPoly res = IntPoly::constant(l.at(0));
  IntPoly dk_prev = IntPoly::constant(2), dk = IntPoly::x_power(1);
  for (int k = 1; k <= d; ++k) {
    res = res + dk * l.at(k);
    IntPoly next = IntPoly::x_power(1) * dk - dk_prev;
    dk_prev = dk;
    dk = next;
  }
  return res;
}

// Does l vanish at the primitive root of unity e^(2*pi*i/den)^num, i.e. at
// e^(2*pi*i*s) for s = num/den in lowest terms? Exact: checks divisibility
// by the cyclotomic polynomial of order den.
inline bool vanishes_at_root_of_unity(const Laurent& l, const Rat& s) {
  if (l.is_zero()) return true;
  unsigned d = static_cast<unsigned>(s.denominator());
  const IntPoly& phi = cyclotomic(d);
  // remainder of t^(-low) * l by phi
  IntPoly f = l.p;
  std::vector<Int> rem = f.c;
  rem.resize(std::max<size_t>(rem.size(), phi.c.size()), Int(0));
  for (int k = (int)rem.size() - 1; k >= phi.deg(); --k) {
    if (rem[k] == 0) continue;
    Int t = rem[k];  // phi is monic
    for (int i = 0; i <= phi.deg(); ++i) rem[k - phi.deg() + i] -= t * phi.c[i];
  }
  for (const auto& v : rem)
    if (v != 0) return false;
  return true;
}

}  // namespace twistlab
