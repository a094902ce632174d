// Seifert matrix of a braid closure from the Bennequin surface (one disk per
// strand, one band per letter), and the Alexander polynomial det(V - tV^T)
// by fraction-free elimination over Z[t].
//
// Basis loops run through consecutive bands of the same generator, ordered
// by (generator, occurrence); the matrix is reproducible entry for entry.
// Convention notes: positive torus knots come out with negative signature;
// the positive trefoil aaa in B_2 yields exactly [[-1,1],[0,-1]].
#pragma once

#include <string>
#include <vector>

#include "twistlab/braid.hpp"
#include "twistlab/polynomial.hpp"

namespace twistlab {

struct SeifertMatrix {
  int size = 0;
  std::vector<std::vector<int>> v;  // v[i][j] = lk(x_i, x_j^+)
  BraidWord source;
};

inline SeifertMatrix seifert_matrix(const BraidWord& w) {
  if (!uses_all_generators(w))
    throw BraidError("seifert matrix needs every generator to occur; destabilize first");
  const int n = w.strands;
  // occurrences per generator
  std::vector<std::vector<int>> occ(n);  // positions, per generator 1..n-1
  std::vector<std::vector<int>> sgn(n);
  for (int i = 0; i < (int)w.size(); ++i) {
    int g = std::abs(w.letters[i]);
    occ[g].push_back(i);
    sgn[g].push_back(w.letters[i] > 0 ? 1 : -1);
  }
  struct Loop {
    int gen, p1, p2, e1, e2;
  };
  std::vector<Loop> loops;
  for (int g = 1; g < n; ++g)
    for (size_t j = 0; j + 1 < occ[g].size(); ++j)
      loops.push_back({g, occ[g][j], occ[g][j + 1], sgn[g][j], sgn[g][j + 1]});
  const int r = (int)loops.size();
  SeifertMatrix m;
  m.size = r;
  m.source = w;
  m.v.assign(r, std::vector<int>(r, 0));
  // index of first loop per generator for the consecutive rule
  for (int i = 0; i < r; ++i) {
    m.v[i][i] = -(loops[i].e1 + loops[i].e2) / 2;
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const Loop &x = loops[i], &y = loops[j];
      if (x.gen == y.gen) {
        if (x.p2 == y.p1) {  // consecutive, shared band sign = x.e2
          if (x.e2 > 0)
            m.v[i][j] += 1;
          else
            m.v[j][i] += -1;
        }
      } else if (y.gen == x.gen + 1 || y.gen == x.gen - 1) {
        // interleaving loops on adjacent disks link once; the entry sits in
        // the (lower generator, higher generator) slot with sign +1 when the
        // lower loop starts first
        const bool x_lower = x.gen < y.gen;
        int lo = x_lower ? i : j, hi = x_lower ? j : i;
        const Loop &l = x_lower ? x : y, &h = x_lower ? y : x;
        if (l.p1 < h.p1 && h.p1 < l.p2 && l.p2 < h.p2)
          m.v[lo][hi] += 1;  // lower-generator loop starts first
        else if (h.p1 < l.p1 && l.p1 < h.p2 && h.p2 < l.p2)
          m.v[lo][hi] += -1;
      }
    }
  }
  return m;
}

// det(V - t V^T), exact, Bareiss elimination with polynomial entries.
inline IntPoly alexander_det(const SeifertMatrix& m) {
  const int r = m.size;
  if (r == 0) return IntPoly::constant(1);
  std::vector<std::vector<IntPoly>> a(r, std::vector<IntPoly>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      a[i][j] = IntPoly({Int(m.v[i][j]), Int(-m.v[j][i])});
  int sign = 1;
  IntPoly prev = IntPoly::constant(1);
  for (int k = 0; k < r - 1; ++k) {
    if (a[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < r; ++i)
        if (!a[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return IntPoly();  // singular over Z[t]
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < r; ++i)
      for (int j = k + 1; j < r; ++j)
        a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  IntPoly det = a[r - 1][r - 1];
  if (sign < 0) det = -det;
  return det;
}

// Normalized Alexander polynomial (knot closures).
inline Laurent alexander_poly(const SeifertMatrix& m) { return normalize_alexander(alexander_det(m)); }

// det(V - V^T); +-1 exactly when the closure is a knot.
inline Int symplectic_det(const SeifertMatrix& m) {
  const int r = m.size;
  if (r == 0) return Int(1);
  // integer Bareiss
  std::vector<std::vector<Int>> a(r, std::vector<Int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a[i][j] = Int(m.v[i][j] - m.v[j][i]);
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < r - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < r; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Int(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < r; ++i)
      for (int j = k + 1; j < r; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign < 0 ? -a[r - 1][r - 1] : a[r - 1][r - 1];
}

}  // namespace twistlab
