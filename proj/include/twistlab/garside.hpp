// Garside left normal form for braid words: permutation-braid factors in
// left-greedy order times a power of the half twist. Two words represent the
// same braid element iff their normal forms coincide; this is the equality
// engine behind every word identity the library certifies.
#pragma once

#include <cassert>
#include <deque>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "twistlab/braid.hpp"

namespace twistlab {

// Permutation braids are encoded by their strand permutation (image form,
// 0-based): perm[k] = end position of the strand entering at position k.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline bool perm_is_identity(const Perm& p) {
  for (int i = 0; i < (int)p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

inline Perm perm_of_generator(int n, int i) {  // sigma_i, 1-based i
  Perm p = perm_identity(n);
  std::swap(p[i - 1], p[i]);
  return p;
}

inline Perm perm_delta(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

inline Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (int i = 0; i < (int)p.size(); ++i) q[p[i]] = i;
  return q;
}

// tau(F) = Delta F Delta^-1; image form tau(F)[k] = delta(F[delta(k)]).
inline Perm perm_tau(const Perm& f) {
  int n = (int)f.size();
  Perm r(n);
  for (int k = 0; k < n; ++k) r[k] = n - 1 - f[n - 1 - k];
  return r;
}

// Starting set S(B) = {i : B = sigma_i * B'}: descents of the image.
inline bool in_starting_set(const Perm& b, int i) { return b[i - 1] > b[i]; }
// Finishing set F(A) = {i : A = A' * sigma_i}: descents of the inverse image.
inline bool in_finishing_set_inv(const Perm& a_inv, int i) { return a_inv[i - 1] > a_inv[i]; }

// Left-weight an adjacent factor pair in place. Returns true if modified.
inline bool make_left_weighted(Perm& a, Perm& b) {
  int n = (int)a.size();
  bool changed = false;
  Perm a_inv = perm_inverse(a);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i < n; ++i) {
      if (in_starting_set(b, i) && !in_finishing_set_inv(a_inv, i)) {
        // transfer sigma_i from the front of b to the end of a
        int k1 = a_inv[i - 1], k2 = a_inv[i];
        std::swap(a[k1], a[k2]);
        std::swap(a_inv[i - 1], a_inv[i]);
        std::swap(b[i - 1], b[i]);
        changed = progress = true;
      }
    }
  }
  return changed;
}

struct NormalForm {
  int strands = 1;
  long long inf = 0;             // power of Delta
  std::vector<Perm> factors;     // left-weighted, none trivial or Delta

  bool operator==(const NormalForm& o) const {
    return strands == o.strands && inf == o.inf && factors == o.factors;
  }
  bool operator<(const NormalForm& o) const {
    if (strands != o.strands) return strands < o.strands;
    if (inf != o.inf) return inf < o.inf;
    return factors < o.factors;
  }
  bool is_trivial() const { return inf == 0 && factors.empty(); }
  // canonical length
  size_t len() const { return factors.size(); }
};

inline NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands;
  NormalForm nf;
  nf.strands = n;
  if (n == 1) return nf;
  const Perm delta = perm_delta(n);
  std::vector<Perm> fs;
  fs.reserve(w.size());
  for (int l : w.letters) {
    if (l > 0) {
      fs.push_back(perm_of_generator(n, l));
    } else {
      nf.inf -= 1;
      for (auto& f : fs) f = perm_tau(f);
      // Delta * sigma_i^-1 as permutation: swap values i-1, i in delta
      Perm p = delta;
      int i = -l;
      for (int k = 0; k < n; ++k) {
        if (p[k] == i - 1)
          p[k] = i;
        else if (p[k] == i)
          p[k] = i - 1;
      }
      fs.push_back(std::move(p));
    }
  }
  // left-weight to fixpoint
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Perm> kept;
    kept.reserve(fs.size());
    for (auto& f : fs)
      if (!perm_is_identity(f))
        kept.push_back(std::move(f));
      else
        changed = true;
    fs = std::move(kept);
    for (size_t j = 0; j + 1 < fs.size(); ++j)
      if (make_left_weighted(fs[j], fs[j + 1])) changed = true;
  }
  // absorb leading half twists
  size_t lead = 0;
  while (lead < fs.size() && fs[lead] == delta) ++lead;
  nf.inf += (long long)lead;
  fs.erase(fs.begin(), fs.begin() + lead);
  nf.factors = std::move(fs);
  return nf;
}

inline bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw BraidError("strand mismatch in braid comparison");
  return normal_form(a) == normal_form(b);
}

// Canonical positive word of a permutation braid: repeatedly peel the
// smallest finishing generator.
inline std::vector<int> perm_word(Perm p) {
  std::vector<int> rev;
  Perm inv = perm_inverse(p);
  while (!perm_is_identity(p)) {
    int i = -1;
    for (int j = 1; j < (int)p.size(); ++j)
      if (in_finishing_set_inv(inv, j)) {
        i = j;
        break;
      }
    assert(i > 0);
    rev.push_back(i);
    int k1 = inv[i - 1], k2 = inv[i];
    std::swap(p[k1], p[k2]);
    std::swap(inv[i - 1], inv[i]);
  }
  return {rev.rbegin(), rev.rend()};
}

// Canonical word representing the same braid as w (Delta-power then factors).
inline BraidWord canonical_word(const NormalForm& nf) {
  std::vector<int> ls;
  std::vector<int> delta_word = perm_word(perm_delta(nf.strands));
  if (nf.inf >= 0) {
    for (long long r = 0; r < nf.inf; ++r) ls.insert(ls.end(), delta_word.begin(), delta_word.end());
  } else {
    std::vector<int> delta_inv(delta_word.rbegin(), delta_word.rend());
    for (int& l : delta_inv) l = -l;
    for (long long r = 0; r < -nf.inf; ++r) ls.insert(ls.end(), delta_inv.begin(), delta_inv.end());
  }
  for (const auto& f : nf.factors) {
    auto fw = perm_word(f);
    ls.insert(ls.end(), fw.begin(), fw.end());
  }
  return BraidWord(nf.strands, std::move(ls));
}

inline BraidWord canonical_word(const BraidWord& w) { return canonical_word(normal_form(w)); }

inline std::string nf_key(const NormalForm& nf) {
  std::string k = std::to_string(nf.strands) + "|" + std::to_string(nf.inf) + "|";
  for (const auto& f : nf.factors) {
    for (int v : f) k += static_cast<char>('0' + v);
    k += ',';
  }
  return k;
}

// ---- bounded conjugacy search ----

enum class ClosureRelation { BraidEqual, Conjugate, DistinctByInvariant, Unknown };

struct ClosureCheck {
  ClosureRelation relation = ClosureRelation::Unknown;
  std::string detail;  // witness description or distinguishing invariant
  bool closures_equal() const {
    return relation == ClosureRelation::BraidEqual || relation == ClosureRelation::Conjugate;
  }
};

// Decides whether two same-strand words have isotopic closures, by exact
// braid equality, then a bounded search through rotations and short
// conjugators. "Unknown" is a legitimate outcome. Invariant-based
// distinction (components, exponent sum) certifies inequality of the
// conjugacy classes.
inline ClosureCheck closure_relation(const BraidWord& w1, const BraidWord& w2, int depth = 3,
                                     size_t state_cap = 20000) {
  if (w1.strands != w2.strands) throw BraidError("closure comparison needs equal strand counts");
  if (normal_form(w1) == normal_form(w2)) return {ClosureRelation::BraidEqual, "identical normal forms"};

  if (closure_components(w1) != closure_components(w2))
    return {ClosureRelation::DistinctByInvariant, "component counts differ"};
  if (exponent_sum(w1) != exponent_sum(w2))
    return {ClosureRelation::DistinctByInvariant, "exponent sums differ"};

  // target keys: all rotations of w2
  std::set<std::string> targets;
  BraidWord w2r = cyclic_free_reduce(w2);
  for (size_t r = 0; r < std::max<size_t>(w2r.size(), 1); ++r)
    targets.insert(nf_key(normal_form(rotate_left(w2r, r))));

  auto canon = [](const BraidWord& w) { return canonical_word(normal_form(cyclic_free_reduce(w))); };

  std::set<std::string> seen;
  std::queue<std::pair<BraidWord, int>> frontier;
  auto push_node = [&](const BraidWord& w, int d) {
    for (size_t r = 0; r < std::max<size_t>(w.size(), 1); ++r) {
      BraidWord rot = rotate_left(w, r);
      std::string key = nf_key(normal_form(rot));
      if (targets.count(key)) return true;
      if (seen.size() < state_cap && seen.insert(key).second && d <= depth)
        frontier.push({canon(rot), d});
    }
    return false;
  };
  if (push_node(cyclic_free_reduce(w1), 0)) return {ClosureRelation::Conjugate, "cyclic rotation"};
  while (!frontier.empty()) {
    auto [w, d] = frontier.front();
    frontier.pop();
    if (d >= depth) continue;
    for (int g = 1; g < w.strands; ++g) {
      for (int sign : {1, -1}) {
        BraidWord u(w.strands, {sign * g});
        if (push_node(cyclic_free_reduce(conjugate(u, w)), d + 1))
          return {ClosureRelation::Conjugate, "conjugator found at depth " + std::to_string(d + 1)};
      }
    }
  }
  return {ClosureRelation::Unknown, "bounded conjugacy search exhausted"};
}

}  // namespace twistlab
