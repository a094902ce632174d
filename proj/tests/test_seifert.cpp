#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"
#include "twistlab/garside.hpp"
#include "twistlab/seifert.hpp"

using namespace twistlab;

TEST_CASE("trefoil seifert matrix is the classical one") {
  auto m = seifert_matrix(parse_word("aaa", 2));
  REQUIRE(m.size == 2);
  REQUIRE(m.v == std::vector<std::vector<int>>{{-1, 1}, {0, -1}});
}

TEST_CASE("unknot gives an empty matrix") {
  auto m = seifert_matrix(parse_word("a", 2));
  REQUIRE(m.size == 0);
  REQUIRE(alexander_poly(m).p == IntPoly({Int(1)}));
}

TEST_CASE("matrix size is word length minus strands plus one") {
  auto w = oracles::torus_braid(3, 4);
  auto m = seifert_matrix(w);
  REQUIRE(m.size == (int)w.size() - (w.strands - 1));
  REQUIRE(m.size == 6);
}

TEST_CASE("missing generators are rejected") {
  REQUIRE_THROWS_AS(seifert_matrix(parse_word("aaa", 3)), BraidError);
}

TEST_CASE("alexander polynomials of small knots") {
  auto trefoil = alexander_poly(seifert_matrix(parse_word("aaa", 2)));
  REQUIRE(laurent_str(trefoil) == "t - 1 + t^-1");
  // figure eight from (aB)^2
  auto fig8 = alexander_poly(seifert_matrix(parse_word("aBaB", 3)));
  REQUIRE(laurent_str(fig8) == "t - 3 + t^-1");
}

TEST_CASE("torus knot alexander polynomials match the closed form") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {3, 7}, {4, 5}}) {
    auto m = seifert_matrix(oracles::torus_braid(p, q));
    REQUIRE(alexander_poly(m) == oracles::torus_alexander(p, q));
  }
}

TEST_CASE("knot closures have unimodular symplectic form and alex(1) = +-1") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + (int)(rng() % 3);
    auto w = oracles::random_knot_word(rng, n, 6 + (int)(rng() % 8));
    auto m = seifert_matrix(w);
    Int d = symplectic_det(m);
    REQUIRE((d == 1 || d == -1));
    auto alex = alexander_poly(m);
    Int at1 = 0;
    for (int k = alex.low; k <= alex.hi(); ++k) at1 += alex.at(k);
    REQUIRE((at1 == 1 || at1 == -1));
  }
}

TEST_CASE("alexander polynomial is a conjugation and stabilization invariant") {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + (int)(rng() % 2);
    auto w = oracles::random_knot_word(rng, n, 7 + (int)(rng() % 6));
    auto alex = alexander_poly(seifert_matrix(w));
    auto rot = rotate_left(w, 1 + rng() % std::max<size_t>(w.size() - 1, 1));
    if (uses_all_generators(rot))
      REQUIRE(alexander_poly(seifert_matrix(rot)) == alex);
    int g = 1 + (int)(rng() % (n - 1));
    auto conj = cyclic_free_reduce(conjugate(BraidWord(n, {(rng() & 1) ? g : -g}), w));
    if (uses_all_generators(conj) && !conj.empty())
      REQUIRE(alexander_poly(seifert_matrix(conj)) == alex);
    auto stab = stabilize(w, (rng() & 1) ? 1 : -1);
    REQUIRE(alexander_poly(seifert_matrix(stab)) == alex);
  }
}
