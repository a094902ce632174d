#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"
#include "twistlab/signature.hpp"

using namespace twistlab;

TEST_CASE("ordinary signatures of small torus knots") {
  auto sig = [](const BraidWord& w) {
    auto v = ordinary_signature(seifert_matrix(w));
    REQUIRE(v.certified);
    return v.sigma;
  };
  REQUIRE(sig(parse_word("aaa", 2)) == -2);
  REQUIRE(sig(oracles::torus_braid(3, 4)) == -6);
  REQUIRE(sig(oracles::torus_braid(3, 5)) == -8);
  REQUIRE(sig(parse_word("aBaB", 3)) == 0);  // figure eight
}

TEST_CASE("unknot signatures vanish") {
  auto m = seifert_matrix(parse_word("a", 2));
  REQUIRE(ordinary_signature(m).sigma == 0);
  REQUIRE(lt_signature(m, Rat(1, 3)).sigma == 0);
  REQUIRE(sigma_hat(m) == 0);
}

TEST_CASE("lt signature at s = 1/2 equals the symmetrized signature") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + (int)(rng() % 3);  // <= 4 strands
    auto w = oracles::random_knot_word(rng, n, 5 + (int)(rng() % 10));
    auto m = seifert_matrix(w);
    auto alex = alexander_poly(m);
    auto direct = ordinary_signature(m);
    REQUIRE(direct.certified);
    if (!vanishes_at_root_of_unity(alex, Rat(1, 2))) {
      auto via_s = lt_signature(m, Rat(1, 2), &alex);
      REQUIRE(via_s.sigma == direct.sigma);
    }
  }
}

TEST_CASE("jump detection rejects on-jump evaluation") {
  auto m = seifert_matrix(parse_word("aaa", 2));  // jumps at 1/6, 5/6
  REQUIRE_THROWS_AS(lt_signature(m, Rat(1, 6)), OnJumpError);
  REQUIRE_THROWS_AS(lt_signature(m, Rat(5, 6)), OnJumpError);
  REQUIRE(lt_signature(m, Rat(1, 4)).sigma == -2);
  REQUIRE(lt_signature(m, Rat(1, 12)).sigma == 0);
}

TEST_CASE("sigma hat of small knots") {
  REQUIRE(sigma_hat_word(parse_word("aaa", 2)) == 2);
  REQUIRE(sigma_hat_word(parse_word("aBaB", 3)) == 0);  // fig-8: no unit circle roots
  REQUIRE(sigma_hat_word(power(parse_word("ab", 3), 7)) == 10);
}

TEST_CASE("one sided limits around the first jump past one half for T(3,7)") {
  auto m = seifert_matrix(power(parse_word("ab", 3), 7));
  auto alex = alexander_poly(m);
  Rat jump(11, 21);
  REQUIRE(vanishes_at_root_of_unity(alex, jump));
  auto below = lt_signature(m, jump - Rat(1, 1000), &alex);
  auto above = lt_signature(m, jump + Rat(1, 1000), &alex);
  REQUIRE(below.certified);
  REQUIRE(above.certified);
  REQUIRE(std::abs(above.sigma - below.sigma) == 2);
}

TEST_CASE("signature is constant on arcs between alexander roots") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + (int)(rng() % 2);
    auto w = oracles::random_knot_word(rng, n, 6 + (int)(rng() % 6));
    auto m = seifert_matrix(w);
    auto alex = alexander_poly(m);
    IntPoly p = laurent_to_trace_poly(alex);
    auto roots = isolate_roots(p, Rat(-2), Rat(2));
    // two samples inside the arc adjacent to x = 2
    Rat hi = roots.empty() ? Rat(2) : roots.back().second;
    Rat x1 = (hi + Rat(2)) / 2, x2 = (hi + Rat(2) * 3) / 4;
    REQUIRE(lt_signature_at_x(m, x1, &alex).sigma == lt_signature_at_x(m, x2, &alex).sigma);
  }
}

TEST_CASE("signature bounded by matrix size and even for knots") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + (int)(rng() % 3);
    auto w = oracles::random_knot_word(rng, n, 5 + (int)(rng() % 9));
    auto m = seifert_matrix(w);
    int sh = sigma_hat(m);
    REQUIRE(sh >= 0);
    REQUIRE(sh % 2 == 0);
    REQUIRE(sh <= m.size);
    auto v = ordinary_signature(m);
    REQUIRE(std::abs(v.sigma) <= m.size);
    REQUIRE(v.sigma % 2 == 0);
  }
}

TEST_CASE("signature invariants under conjugation and stabilization") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + (int)(rng() % 2);
    auto w = oracles::random_knot_word(rng, n, 6 + (int)(rng() % 6));
    auto m = seifert_matrix(w);
    auto alex = alexander_poly(m);
    Rat s(1, 5);
    if (vanishes_at_root_of_unity(alex, s)) continue;
    int sig = lt_signature(m, s, &alex).sigma;
    auto stab = stabilize(w, (rng() & 1) ? 1 : -1);
    REQUIRE(lt_signature(seifert_matrix(stab), s).sigma == sig);
    int g = 1 + (int)(rng() % (n - 1));
    auto conj = cyclic_free_reduce(conjugate(BraidWord(n, {(rng() & 1) ? g : -g}), w));
    if (uses_all_generators(conj) && closure_components(conj) == 1)
      REQUIRE(lt_signature(seifert_matrix(conj), s).sigma == sig);
  }
}

TEST_CASE("trefoil signature profile") {
  auto m = seifert_matrix(parse_word("aaa", 2));
  auto arcs = signature_profile(m);
  REQUIRE(arcs.size() == 3);
  REQUIRE(arcs[0].sigma == 0);
  REQUIRE(arcs[1].sigma == -2);
  REQUIRE(arcs[2].sigma == 0);
  // jump bracketed around 1/6 and 5/6
  REQUIRE(arcs[0].s_hi <= Rat(1, 6));
  REQUIRE(arcs[1].s_lo >= Rat(1, 6));
  REQUIRE(arcs[1].s_hi <= Rat(5, 6));
  REQUIRE(arcs[2].s_lo >= Rat(5, 6));
  REQUIRE(arcs[0].s_lo == Rat(0));
  REQUIRE(arcs[2].s_hi == Rat(1));
}
