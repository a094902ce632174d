#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "twistlab/garside.hpp"

using namespace twistlab;

static BraidWord W(const std::string& s, int n = 3) { return parse_word(s, n); }

TEST_CASE("word identities from the bracket calculus") {
  REQUIRE(braid_equal(W("ababab"), W("aabaab")));
  REQUIRE(braid_equal(concat(concat(W("aab"), W("abaaba")), W("aab")), W("aaabaaabaaab")));
  REQUIRE_FALSE(braid_equal(W("a"), W("b")));
}

TEST_CASE("half twist and full twist normal forms") {
  auto nf = normal_form(full_twist(3, 1));
  REQUIRE(nf.inf == 2);
  REQUIRE(nf.factors.empty());
  auto nf4 = normal_form(full_twist(4, 1));
  REQUIRE(nf4.inf == 2);
  REQUIRE(nf4.factors.empty());
  auto nf_delta = normal_form(W("aba"));
  REQUIRE(nf_delta.inf == 1);
  REQUIRE(nf_delta.factors.empty());
}

TEST_CASE("normal form detects trivial words") {
  REQUIRE(normal_form(W("abAB")).is_trivial() == false);
  REQUIRE(normal_form(W("aAbB")).is_trivial());
  REQUIRE(normal_form(W("")).is_trivial());
}

TEST_CASE("canonical word round trip") {
  for (const char* s : {"abAB", "aaabaaabaaab", "BAbaBAba", "abacbA"}) {
    auto w = parse_word(s, 4);
    auto c = canonical_word(w);
    REQUIRE(braid_equal(w, c));
    REQUIRE(normal_form(c) == normal_form(w));
  }
}

TEST_CASE("normal form invariant under random legal rewrites") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + (int)(rng() % 3);  // 3..5 strands
    std::vector<int> ls;
    int len = 6 + (int)(rng() % 10);
    for (int i = 0; i < len; ++i) {
      int g = 1 + (int)(rng() % (n - 1));
      ls.push_back((rng() & 1) ? g : -g);
    }
    BraidWord w(n, ls);
    auto nf0 = normal_form(w);
    BraidWord cur = w;
    for (int step = 0; step < 40; ++step) {
      int which = (int)(rng() % 3);
      if (which == 0 && cur.size() >= 3) {
        // braid relation at a random applicable spot
        for (size_t t = 0; t < cur.size(); ++t) {
          size_t p = rng() % cur.size();
          if (p + 2 < cur.size()) {
            int x = cur.letters[p], y = cur.letters[p + 1], z = cur.letters[p + 2];
            if (x == z && std::abs(std::abs(x) - std::abs(y)) == 1 && (x > 0) == (y > 0)) {
              cur.letters[p] = y;
              cur.letters[p + 1] = x;
              cur.letters[p + 2] = y;
              break;
            }
          }
        }
      } else if (which == 1) {
        // free insertion
        size_t p = rng() % (cur.size() + 1);
        int g = 1 + (int)(rng() % (n - 1));
        int s = (rng() & 1) ? g : -g;
        cur.letters.insert(cur.letters.begin() + p, {s, -s});
      } else if (cur.size() >= 2) {
        // distant commutation
        for (size_t t = 0; t < cur.size(); ++t) {
          size_t p = rng() % (cur.size() - 1);
          if (std::abs(std::abs(cur.letters[p]) - std::abs(cur.letters[p + 1])) >= 2) {
            std::swap(cur.letters[p], cur.letters[p + 1]);
            break;
          }
        }
      }
      cur = free_reduce(cur);
    }
    REQUIRE(normal_form(cur) == nf0);
  }
}

TEST_CASE("full twist is central") {
  std::mt19937_64 rng(7);
  for (int n : {3, 4}) {
    BraidWord delta2 = full_twist(n, 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> ls;
      int len = 1 + (int)(rng() % 12);
      for (int i = 0; i < len; ++i) {
        int g = 1 + (int)(rng() % (n - 1));
        ls.push_back((rng() & 1) ? g : -g);
      }
      BraidWord w(n, ls);
      REQUIRE(normal_form(concat(w, delta2)) == normal_form(concat(delta2, w)));
    }
  }
}

TEST_CASE("closure relation three-valued results") {
  // bracket [3,4,3,4] closes like (ab)^9
  auto bracket_word = W("aaabaaaabaaabaaaab");
  auto torus = power(W("ab"), 9);
  auto r1 = closure_relation(torus, bracket_word);
  REQUIRE(r1.closures_equal());

  auto r2 = closure_relation(power(W("ab"), 7), power(W("ab"), 8));
  REQUIRE(r2.relation == ClosureRelation::DistinctByInvariant);

  auto lhs = power(W("AB"), 5);
  auto rhs = W("AAABAAABAA");
  auto r3 = closure_relation(lhs, rhs);
  REQUIRE(r3.relation == ClosureRelation::BraidEqual);
}

TEST_CASE("closure relation finds rotational conjugates") {
  auto w = W("aabab");
  auto r = closure_relation(rotate_left(w, 2), w);
  REQUIRE(r.closures_equal());
}
