// Levine-Tristram signatures from a Seifert matrix, with certified integer
// answers: the Hermitian form (1-w)V + (1-conj(w))V^T is embedded as a real
// symmetric matrix, approximately diagonalized (Jacobi), and the eigenvalue
// signs are certified by interval Gershgorin discs around the congruent
// matrix Q^T A Q. Precision escalates until every disc excludes zero;
// TWISTLAB_PRECISION_CAP (decimal digits) bounds the ladder.
#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/interval.hpp"
#include "twistlab/polynomial.hpp"
#include "twistlab/seifert.hpp"

namespace twistlab {

struct OnJumpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PrecisionCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LTValue {
  int sigma = 0;
  bool certified = false;
};

inline int precision_cap_digits() {
  static const int cap = [] {
    const char* env = std::getenv("TWISTLAB_PRECISION_CAP");
    if (!env) return 400;
    int v = std::atoi(env);
    return v > 0 ? v : 400;
  }();
  return cap;
}

namespace detail {

template <class F>
using Mat = std::vector<std::vector<F>>;

// Cyclic Jacobi; returns the accumulated rotation matrix Q with A ~ Q D Q^T.
template <class F>
Mat<F> jacobi_eigenvectors(Mat<F> a) {
  const int n = (int)a.size();
  Mat<F> q(n, std::vector<F>(n, F(0)));
  for (int i = 0; i < n; ++i) q[i][i] = F(1);
  auto off_norm = [&] {
    F s(0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a[i][j] * a[i][j];
    return s;
  };
  F scale(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale += a[i][j] * a[i][j];
  if (scale == 0) return q;
  const F tol = scale * f_ldexp(F(1), -2 * std::numeric_limits<F>::digits);
  for (int sweep = 0; sweep < 60 && off_norm() > tol; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int r = p + 1; r < n; ++r) {
        F apq = a[p][r];
        if (apq == 0) continue;
        F theta = (a[r][r] - a[p][p]) / (2 * apq);
        F t;
        {
          F at = theta < 0 ? -theta : theta;
          using std::sqrt;
          t = F(1) / (at + sqrt(F(1) + at * at));
          if (theta < 0) t = -t;
        }
        using std::sqrt;
        F c = F(1) / sqrt(F(1) + t * t), s = t * c;
        for (int k = 0; k < n; ++k) {
          F akp = a[k][p], akq = a[k][r];
          a[k][p] = c * akp - s * akq;
          a[k][r] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          F apk = a[p][k], aqk = a[r][k];
          a[p][k] = c * apk - s * aqk;
          a[r][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          F qkp = q[k][p], qkq = q[k][r];
          q[k][p] = c * qkp - s * qkq;
          q[k][r] = s * qkp + c * qkq;
        }
      }
    }
  }
  return q;
}

// One ladder stage: build interval A, congruence-transform by the float Q,
// count certified eigenvalue signs via Gershgorin discs.
template <class F>
std::optional<int> certify_stage(const std::vector<std::vector<int>>& S,
                                 const std::vector<std::vector<int>>& K, const Iv<F>& one_minus_c,
                                 const Iv<F>& sin_part) {
  const int r = (int)S.size();
  const int n = 2 * r;
  if (r == 0) return 0;
  std::vector<std::vector<Iv<F>>> A(n, std::vector<Iv<F>>(n));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Iv<F> re = one_minus_c * S[i][j];
      Iv<F> im = sin_part * K[i][j];
      A[i][j] = re;
      A[i + r][j + r] = re;
      A[i][j + r] = im;
      A[i + r][j] = -im;
    }
  Mat<F> mid(n, std::vector<F>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mid[i][j] = A[i][j].mid();
  Mat<F> Q = jacobi_eigenvectors(mid);
  // congruent interval matrix Q^T A Q
  std::vector<std::vector<Iv<F>>> AQ(n, std::vector<Iv<F>>(n, Iv<F>::zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Iv<F> acc = Iv<F>::zero();
      for (int k = 0; k < n; ++k) acc = acc + A[i][k] * Iv<F>::exact(Q[k][j]);
      AQ[i][j] = acc;
    }
  int pos = 0, neg = 0;
  std::vector<Iv<F>> diag(n, Iv<F>::zero());
  std::vector<F> radius(n, F(0));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      Iv<F> acc = Iv<F>::zero();
      for (int k = 0; k < n; ++k) acc = acc + Iv<F>::exact(Q[k][j]) * AQ[k][i];
      if (i == j)
        diag[j] = acc;
      else
        radius[j] += acc.mag();
    }
  }
  for (int j = 0; j < n; ++j) {
    F lo = diag[j].lo - radius[j], hi = diag[j].hi + radius[j];
    if (lo <= 0 && hi >= 0) return std::nullopt;  // disc touches zero
    if (lo > 0)
      ++pos;
    else
      ++neg;
  }
  if (pos + neg != n || (pos - neg) % 2 != 0) return std::nullopt;
  return (pos - neg) / 2;
}

enum class OmegaMode { FromX, FromS };

// omega described either by x = 2cos(2*pi*s) (exact rational, sin >= 0) or
// by rational s itself (transcendental enclosures).
inline LTValue certify_signature(const SeifertMatrix& m, OmegaMode mode, const Rat& param) {
  const int r = m.size;
  if (r == 0) return {0, true};
  std::vector<std::vector<int>> S(r, std::vector<int>(r)), K(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      S[i][j] = m.v[i][j] + m.v[j][i];
      K[i][j] = m.v[i][j] - m.v[j][i];
    }
  const int cap = precision_cap_digits();
  auto run = [&](auto fdummy) -> std::optional<int> {
    using F = decltype(fdummy);
    Iv<F> omc, sp;
    if (mode == OmegaMode::FromX) {
      Rat c = param / 2;
      omc = iv_from_rat<F>(Rat(1) - c);
      sp = sqrt_enclosure<F>(Rat(1) - c * c);
    } else {
      omc = Iv<F>::exact(F(1)) - cos_pi<F>(param * 2);
      sp = sin_pi<F>(param * 2);
    }
    return certify_stage<F>(S, K, omc, sp);
  };
  if (auto s = run(double{})) return {*s, true};
  if (cap >= 50)
    if (auto s = run(F50{})) return {*s, true};
  if (cap >= 100)
    if (auto s = run(F100{})) return {*s, true};
  if (cap >= 200)
    if (auto s = run(F200{})) return {*s, true};
  if (cap >= 400)
    if (auto s = run(F400{})) return {*s, true};
  throw PrecisionCapError("signature not certifiable within TWISTLAB_PRECISION_CAP digits");
}

}  // namespace detail

// Signature at omega = e^(2*pi*i*s) given by x = t + 1/t = 2cos(2*pi*s);
// sample points produced by root isolation use this exact-rational route.
inline LTValue lt_signature_at_x(const SeifertMatrix& m, const Rat& x, const Laurent* alex = nullptr) {
  if (x < Rat(-2) || x >= Rat(2)) throw std::domain_error("x must lie in [-2, 2)");
  if (alex && !alex->is_zero()) {
    IntPoly p = laurent_to_trace_poly(*alex);
    if (sign_at(p, x) == 0) throw OnJumpError("omega is a root of the Alexander polynomial");
  }
  return detail::certify_signature(m, detail::OmegaMode::FromX, x);
}

// Signature at omega = e^(2*pi*i*s) for rational s in (0,1), s not a jump.
inline LTValue lt_signature(const SeifertMatrix& m, const Rat& s, const Laurent* alex_opt = nullptr) {
  if (s <= Rat(0) || s >= Rat(1)) throw std::domain_error("s must lie in (0,1)");
  Laurent alex = alex_opt ? *alex_opt : alexander_poly(m);
  if (vanishes_at_root_of_unity(alex, s)) throw OnJumpError("s is a jump point of the signature");
  return detail::certify_signature(m, detail::OmegaMode::FromS, s);
}

// Ordinary signature sigma(V + V^T) = signature at omega = -1 (s = 1/2).
inline LTValue ordinary_signature(const SeifertMatrix& m) {
  return detail::certify_signature(m, detail::OmegaMode::FromX, Rat(-2));
}

// Sample x-points, one inside each maximal root-free arc of (-2, 2].
inline std::vector<Rat> arc_samples(const Laurent& alex) {
  IntPoly p = laurent_to_trace_poly(alex);
  auto roots = isolate_roots(p, Rat(-2), Rat(2));
  std::vector<Rat> xs;
  xs.push_back(Rat(-2));  // s = 1/2 arc; never a root for a knot
  for (size_t i = 0; i + 1 < roots.size(); ++i) xs.push_back((roots[i].second + roots[i + 1].first) / 2);
  if (!roots.empty()) {
    xs.push_back((Rat(-2) + roots.front().first) / 2);
    xs.push_back((roots.back().second + Rat(2)) / 2);
  }
  return xs;
}

// max over omega (off the Alexander roots) of |sigma_omega|; even, >= 0.
inline int sigma_hat(const SeifertMatrix& m, const Laurent* alex_opt = nullptr) {
  if (m.size == 0) return 0;
  Laurent alex = alex_opt ? *alex_opt : alexander_poly(m);
  int best = 0;
  for (const Rat& x : arc_samples(alex)) {
    LTValue v = detail::certify_signature(m, detail::OmegaMode::FromX, x);
    best = std::max(best, std::abs(v.sigma));
  }
  return best;
}

inline int sigma_hat_word(const BraidWord& w) {
  if (closure_components(w) != 1) throw BraidError("sigma_hat needs a knot closure");
  SeifertMatrix m = seifert_matrix(w);
  return sigma_hat(m);
}

// ---- signature profile over s in (0,1) ----

struct ProfileArc {
  Rat s_lo, s_hi;  // certified rational bounds of the constancy arc
  int sigma = 0;
};

namespace detail {

// Tight rational bracket for the s-location of a jump, via bisection with
// certified cos enclosures. x(s) = 2cos(2*pi*s) is decreasing on (0, 1/2).
// Returns an s with certified x(s) < x_target (want_below_x) or > x_target.
inline Rat s_bound_for_x(const Rat& x_target, bool want_below_x) {
  Rat lo(0), hi(1, 2);  // x(lo) = 2 > x_target, x(hi) = -2 < x_target
  for (int it = 0; it < 48; ++it) {
    Rat mid = (lo + hi) / 2;
    Iv<F100> c = cos_pi<F100>(mid * 2) * Iv<F100>::exact(F100(2));
    if (to_rat_exact(c.lo) > x_target)
      lo = mid;
    else if (to_rat_exact(c.hi) < x_target)
      hi = mid;
    else
      break;  // jump too close to resolve further; bounds stay sound
  }
  return want_below_x ? hi : lo;
}

}  // namespace detail

// Arcs of constancy of s -> sigma_omega over (0,1), with certified rational
// bounds bracketing each jump and the certified signature on each arc.
inline std::vector<ProfileArc> signature_profile(const SeifertMatrix& m) {
  Laurent alex = alexander_poly(m);
  IntPoly p = laurent_to_trace_poly(alex);
  auto roots = isolate_roots(p, Rat(-2), Rat(2));  // increasing x
  const size_t nj = roots.size();
  struct JumpBounds {
    Rat s_lo, s_hi;
  };
  std::vector<JumpBounds> jumps;  // increasing s over (0, 1/2)
  for (size_t i = nj; i-- > 0;) {
    Rat s_lo = detail::s_bound_for_x(roots[i].second, false);
    Rat s_hi = detail::s_bound_for_x(roots[i].first, true);
    jumps.push_back({s_lo, s_hi});
  }
  // one certified value per arc, in increasing s over (0, 1/2]
  std::vector<int> vals;
  {
    std::vector<Rat> xs;
    if (nj == 0) {
      xs.push_back(Rat(-2));
    } else {
      xs.push_back((roots.back().second + Rat(2)) / 2);
      for (size_t i = nj; i-- > 1;) xs.push_back((roots[i - 1].second + roots[i].first) / 2);
      xs.push_back(Rat(-2));
    }
    for (const auto& x : xs)
      vals.push_back(detail::certify_signature(m, detail::OmegaMode::FromX, x).sigma);
  }
  if (jumps.empty()) return {{Rat(0), Rat(1), vals[0]}};
  std::vector<ProfileArc> arcs;
  arcs.push_back({Rat(0), jumps[0].s_lo, vals[0]});
  for (size_t i = 1; i < jumps.size(); ++i) arcs.push_back({jumps[i - 1].s_hi, jumps[i].s_lo, vals[i]});
  arcs.push_back({jumps.back().s_hi, Rat(1) - jumps.back().s_hi, vals.back()});
  for (size_t i = jumps.size(); i-- > 1;)
    arcs.push_back({Rat(1) - jumps[i].s_lo, Rat(1) - jumps[i - 1].s_hi, vals[i]});
  arcs.push_back({Rat(1) - jumps[0].s_lo, Rat(1), vals[0]});
  return arcs;
}

}  // namespace twistlab
