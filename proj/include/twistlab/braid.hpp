// Braid words: letters, parsing, free reduction, closure permutations.
//
// A word in B_n is a sequence of nonzero ints: +i stands for the Artin
// generator sigma_i, -i for its inverse, 1 <= i < n. Text form follows the
// a..y / A..Y convention (lowercase positive, uppercase inverse).
#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistlab {

struct BraidError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) { validate(); }

  void validate() const {
    if (strands < 1) throw BraidError("strand count must be >= 1");
    for (int l : letters) {
      if (l == 0) throw BraidError("zero letter");
      if (std::abs(l) >= strands)
        throw BraidError("letter index " + std::to_string(std::abs(l)) + " needs more than " +
                         std::to_string(strands) + " strands");
    }
  }

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const BraidWord& o) const { return strands == o.strands && letters == o.letters; }
};

inline BraidWord parse_word(const std::string& text, int strands) {
  std::vector<int> ls;
  ls.reserve(text.size());
  for (char ch : text) {
    int idx;
    if (ch >= 'a' && ch <= 'y')
      idx = ch - 'a' + 1;
    else if (ch >= 'A' && ch <= 'Y')
      idx = -(ch - 'A' + 1);
    else if (ch == ' ' || ch == '\t')
      continue;
    else
      throw BraidError(std::string("unknown character '") + ch + "' in braid word");
    if (std::abs(idx) >= strands)
      throw BraidError(std::string("letter '") + ch + "' needs more than " + std::to_string(strands) +
                       " strands");
    ls.push_back(idx);
  }
  return BraidWord(strands, std::move(ls));
}

inline std::string word_str(const BraidWord& w) {
  std::string s;
  s.reserve(w.size());
  for (int l : w.letters) s += static_cast<char>(l > 0 ? ('a' + l - 1) : ('A' - l - 1));
  return s;
}

inline BraidWord inverse(const BraidWord& w) {
  std::vector<int> ls(w.letters.rbegin(), w.letters.rend());
  for (int& l : ls) l = -l;
  return BraidWord(w.strands, std::move(ls));
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw BraidError("strand mismatch in concatenation");
  std::vector<int> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return BraidWord(a.strands, std::move(ls));
}

inline BraidWord power(const BraidWord& w, int k) {
  BraidWord base = k >= 0 ? w : inverse(w);
  int reps = std::abs(k);
  std::vector<int> ls;
  ls.reserve(base.size() * reps);
  for (int i = 0; i < reps; ++i) ls.insert(ls.end(), base.letters.begin(), base.letters.end());
  return BraidWord(w.strands, std::move(ls));
}

// Cancels adjacent inverse pairs until none remain (linear word, not cyclic).
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> st;
  st.reserve(w.size());
  for (int l : w.letters) {
    if (!st.empty() && st.back() == -l)
      st.pop_back();
    else
      st.push_back(l);
  }
  return BraidWord(w.strands, std::move(st));
}

// Free reduction on the cyclic word: reduces, then cancels across the wrap.
inline BraidWord cyclic_free_reduce(const BraidWord& w) {
  BraidWord r = free_reduce(w);
  while (r.size() >= 2 && r.letters.front() == -r.letters.back()) {
    r.letters.erase(r.letters.begin());
    r.letters.pop_back();
    r = free_reduce(r);
  }
  return r;
}

inline long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (int l : w.letters) s += (l > 0 ? 1 : -1);
  return s;
}

inline BraidWord rotate_left(const BraidWord& w, size_t r) {
  if (w.empty()) return w;
  r %= w.size();
  std::vector<int> ls(w.letters.begin() + r, w.letters.end());
  ls.insert(ls.end(), w.letters.begin(), w.letters.begin() + r);
  return BraidWord(w.strands, std::move(ls));
}

inline BraidWord conjugate(const BraidWord& u, const BraidWord& w) {
  return concat(concat(u, w), inverse(u));  // u w u^-1
}

// Permutation induced on strand positions: result[i] = end position of the
// strand entering at position i (0-based).
inline std::vector<int> strand_permutation(const BraidWord& w) {
  std::vector<int> pos(w.strands);
  std::iota(pos.begin(), pos.end(), 0);
  for (int l : w.letters) {
    int i = std::abs(l) - 1;
    std::swap(pos[i], pos[i + 1]);
  }
  // pos[p] = strand occupying position p at the bottom; invert.
  std::vector<int> img(w.strands);
  for (int p = 0; p < w.strands; ++p) img[pos[p]] = p;
  return img;
}

inline int closure_components(const BraidWord& w) {
  auto perm = strand_permutation(w);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

// (sigma_1 ... sigma_{n-1})^(n*count): `count` positive full twists on n strands.
inline BraidWord full_twist(int strands, int count) {
  if (strands < 2 || count < 0) throw BraidError("full_twist needs strands >= 2, count >= 0");
  std::vector<int> ls;
  ls.reserve(static_cast<size_t>(strands) * (strands - 1) * count);
  for (int rep = 0; rep < strands * count; ++rep)
    for (int i = 1; i < strands; ++i) ls.push_back(i);
  return BraidWord(strands, std::move(ls));
}

// Letters of a word shifted onto strands offset+1 .. offset+m inside B_n.
inline BraidWord shift_strands(const BraidWord& w, int offset, int ambient_strands) {
  std::vector<int> ls = w.letters;
  for (int& l : ls) l += (l > 0 ? offset : -offset);
  return BraidWord(ambient_strands, std::move(ls));
}

// Markov stabilization: w in B_n -> w * sigma_n^{sign} in B_{n+1}.
inline BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) throw BraidError("stabilize sign must be +1 or -1");
  BraidWord r(w.strands + 1, w.letters);
  r.letters.push_back(sign * w.strands);
  return r;
}

// Markov destabilization on the cyclic word: requires sigma_{n-1} to occur
// exactly once (either sign); removes it and drops the last strand.
inline BraidWord destabilize(const BraidWord& w) {
  if (w.strands < 2) throw BraidError("cannot destabilize a 1-strand braid");
  int target = w.strands - 1;
  int count = 0;
  size_t at = 0;
  for (size_t i = 0; i < w.size(); ++i)
    if (std::abs(w.letters[i]) == target) {
      ++count;
      at = i;
    }
  if (count != 1) throw BraidError("destabilization needs exactly one use of the last strand");
  std::vector<int> ls(w.letters.begin() + at + 1, w.letters.end());
  ls.insert(ls.end(), w.letters.begin(), w.letters.begin() + at);
  return BraidWord(w.strands - 1, std::move(ls));
}

inline bool uses_all_generators(const BraidWord& w) {
  std::vector<bool> used(w.strands, false);
  for (int l : w.letters) used[std::abs(l)] = true;
  for (int i = 1; i < w.strands; ++i)
    if (!used[i]) return false;
  return true;
}

}  // namespace twistlab
