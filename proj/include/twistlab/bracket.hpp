// Bracket calculus for positive 3-braids: [k_1,...,k_n] denotes
// a^{k_1} b a^{k_2} b ... a^{k_n} b, and inserting a full twist acts on a
// cyclically adjacent pair by (x, y) -> (x+1, 3, y+1).
#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistlab/braid.hpp"

namespace twistlab {

struct BracketForm {
  std::vector<int> exponents;  // all >= 1

  explicit BracketForm(std::vector<int> ks) : exponents(std::move(ks)) {
    if (exponents.empty()) throw BraidError("empty bracket");
    for (int k : exponents)
      if (k < 1) throw BraidError("bracket exponents must be >= 1");
  }
  bool operator==(const BracketForm& o) const { return exponents == o.exponents; }
};

inline BraidWord bracket_to_word(const BracketForm& b) {
  std::vector<int> ls;
  for (int k : b.exponents) {
    ls.insert(ls.end(), k, 1);
    ls.push_back(2);
  }
  return BraidWord(3, std::move(ls));
}

inline std::string bracket_str(const BracketForm& b) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < b.exponents.size(); ++i) os << (i ? "," : "") << b.exponents[i];
  os << ']';
  return os.str();
}

inline BracketForm parse_bracket(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw BraidError("bracket must look like [3,5,4]");
  std::vector<int> ks;
  std::string body = s.substr(1, s.size() - 2);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw BraidError("empty bracket entry");
    ks.push_back(std::stoi(tok));
  }
  return BracketForm(std::move(ks));
}

// Insert a full twist at the cyclic pair (exponents[pos], exponents[pos+1]).
// For a length-1 bracket the single entry plays both roles: [x] -> [x+2, 3].
inline BracketForm fulltwist_insert(const BracketForm& b, size_t pos) {
  const auto& ks = b.exponents;
  if (pos >= ks.size()) throw BraidError("bracket position out of range");
  std::vector<int> out;
  if (ks.size() == 1) {
    out = {ks[0] + 2, 3};
    return BracketForm(std::move(out));
  }
  size_t next = (pos + 1) % ks.size();
  out = ks;
  out[pos] += 1;
  out[next] += 1;
  if (next == 0) {
    out.push_back(3);  // wrapped pair: 3 sits between k_n and k_1 cyclically
  } else {
    out.insert(out.begin() + pos + 1, 3);
  }
  return BracketForm(std::move(out));
}

}  // namespace twistlab
