#include <catch2/catch_amalgamated.hpp>

#include "twistlab/bracket.hpp"
#include "twistlab/garside.hpp"

using namespace twistlab;

TEST_CASE("bracket words") {
  REQUIRE(word_str(bracket_to_word(BracketForm({1, 1, 1}))) == "ababab");
  REQUIRE(word_str(bracket_to_word(BracketForm({2, 2}))) == "aabaab");
  REQUIRE(word_str(bracket_to_word(BracketForm({3, 3, 3}))) == "aaabaaabaaab");
  REQUIRE(braid_equal(bracket_to_word(BracketForm({1, 1, 1})), bracket_to_word(BracketForm({2, 2}))));
}

TEST_CASE("bracket parsing and printing") {
  auto b = parse_bracket("[3,5,5,4]");
  REQUIRE(b.exponents == std::vector<int>{3, 5, 5, 4});
  REQUIRE(bracket_str(b) == "[3,5,5,4]");
  REQUIRE_THROWS_AS(parse_bracket("3,5"), BraidError);
  REQUIRE_THROWS_AS(BracketForm(std::vector<int>{}), BraidError);
  REQUIRE_THROWS_AS(BracketForm({2, 0}), BraidError);
}

TEST_CASE("full twist insertion rule on pairs") {
  REQUIRE(fulltwist_insert(BracketForm({2, 2}), 1) == BracketForm({3, 3, 3}));
  REQUIRE(fulltwist_insert(BracketForm({3, 3, 3}), 1) == BracketForm({3, 4, 3, 4}));
  REQUIRE(fulltwist_insert(BracketForm({3, 4, 3, 4}), 1) == BracketForm({3, 5, 3, 4, 4}));
  // wrapped pair appends the 3 at the end
  REQUIRE(fulltwist_insert(BracketForm({2, 2}), 0) == BracketForm({3, 3, 3}));
  REQUIRE(fulltwist_insert(BracketForm({3, 4}), 1) == BracketForm({4, 5, 3}));
  // single entry plays both pair roles
  REQUIRE(fulltwist_insert(BracketForm({4}), 0) == BracketForm({6, 3}));
}

TEST_CASE("insertion adds one full twist to the closure") {
  // enumerate all brackets of total weight <= 12 and check the braid identity
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (!cur.empty()) all.push_back(cur);
    for (int k = 1; k <= remaining; ++k) {
      cur.push_back(k);
      self(self, remaining - k);
      cur.pop_back();
    }
  };
  rec(rec, 8);
  BraidWord delta2 = full_twist(3, 1);
  int interior_checked = 0, wrapped_checked = 0;
  for (const auto& ks : all) {
    BracketForm b(ks);
    BraidWord w = bracket_to_word(b);
    if ((int)w.size() > 12) continue;
    for (size_t pos = 0; pos < ks.size(); ++pos) {
      BraidWord w2 = bracket_to_word(fulltwist_insert(b, pos));
      BraidWord expect = concat(delta2, w);
      bool interior = ks.size() >= 2 && pos + 1 < ks.size();
      if (interior) {
        REQUIRE(braid_equal(w2, expect));  // literal equality for interior pairs
        ++interior_checked;
      } else {
        REQUIRE(closure_relation(w2, expect).closures_equal());
        ++wrapped_checked;
      }
    }
  }
  REQUIRE(interior_checked > 20);
  REQUIRE(wrapped_checked > 10);
}
