#include <doctest.h>

#include "imcm/free_rep.hpp"
#include "imcm/gen_words.hpp"
#include "random_words.hpp"

using namespace imcm;

namespace {

Word w(const char* text, int rank) { return parse_word(text, rank); }

}  // namespace

TEST_CASE("parse_word maps tokens to letters") {
  CHECK(w("", 3).empty());
  CHECK(w("   ", 3).empty());
  const Word x = w("s1 s2^-1 e3", 4);
  REQUIRE(x.size() == 3);
  CHECK(x[0] == Letter::sigma(1));
  CHECK(x[1] == Letter::sigma_inv(2));
  CHECK(x[2] == Letter::eps(3));
  CHECK(x.rank() == 4);
  CHECK(w("e", 2) == w("e1", 2));
  CHECK(w("s1^3", 2).size() == 3);
  CHECK(w("s1^-2", 2) == w("s1^-1 s1^-1", 2));
  CHECK(w("s1^0", 2).empty());
  CHECK(w("e2^2", 2) == w("e2 e2", 2));
}

TEST_CASE("parse_word macros") {
  CHECK(w("D", 3) == w("s1 s2 s1", 3));
  CHECK(w("g", 4) == w("s1 s2 s3", 4));
  CHECK(w("E1", 3) == w("e2 e3", 3));
  CHECK(w("E3", 3).empty());
  CHECK(w("q1,3", 3) == w("s2 s1 s1 s2^-1", 3));
  CHECK(w("c1,3", 3) == w("s1^-1 s2^-1", 3));
  CHECK(w("c2,2", 3).empty());
  CHECK(w("D^-1", 3) == w("s1^-1 s2^-1 s1^-1", 3));
}

TEST_CASE("parse errors name the offending token") {
  auto token_of = [](const char* text, int rank) {
    try {
      parse_word(text, rank);
    } catch (const ParseError& e) {
      return e.token();
    }
    return std::string("<no error>");
  };
  CHECK(token_of("e1^-1", 2) == "e1^-1");
  CHECK(token_of("s1 e^0", 2) == "e^0");
  CHECK(token_of("s1 x2", 3) == "x2");
  CHECK(token_of("s3", 3) == "s3");
  CHECK(token_of("s0", 3) == "s0");
  CHECK(token_of("e4", 3) == "e4");
  CHECK(token_of("s1^", 3) == "s1^");
  CHECK(token_of("q2,1", 3) == "q2,1");
  CHECK(token_of("E^2", 3) == "E^2");
  CHECK_THROWS_AS(parse_word("e1^-1", 2), ParseError);
}

TEST_CASE("words refuse to mix ranks") {
  CHECK_THROWS_AS(w("s1", 2) * w("s1", 3), RankMismatch);
  CHECK_THROWS_AS(Word(2, {Letter::sigma(2)}), std::out_of_range);
  CHECK(w("s1", 2).embedded(4, 2) == w("s3", 4));
  CHECK_THROWS(w("e1", 2).inverse());
  CHECK(w("s1 e2 s1^-1", 2).monoid_inverse() == w("s1 e2 s1^-1", 2));
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(w("s1 s1^-1", 2)).empty());
  CHECK(free_reduce(w("e1 e1", 2)) == w("e1 e1", 2));
  CHECK(free_reduce(w("s1 s2 s2^-1 s1^-1", 3)).empty());
  CHECK(free_reduce(w("s1 e2 s1^-1", 2)) == w("s1 e2 s1^-1", 2));
  CHECK(free_reduce(w("s1 s2 s1^-1", 3)) == w("s1 s2 s1^-1", 3));
}

TEST_CASE("expand_macro") {
  CHECK(expand_macro("Delta", 3) == w("s1 s2 s1", 3));
  CHECK(expand_macro("eps(2)", 3) == w("s1 e1 s1^-1", 3));
  CHECK(expand_macro("eps(1)", 3) == w("e1", 3));
  CHECK(expand_macro("eps-block(1)", 3) == w("e2 e3", 3));
  CHECK(expand_macro("sigma-big", 4) == w("s1 s2 s3", 4));
  CHECK_THROWS(expand_macro("eps(4)", 3));
  CHECK_THROWS(expand_macro("eps-block(4)", 3));
  CHECK_THROWS(expand_macro("Nabla", 3));
}

TEST_CASE("expand_sij and expand_coset") {
  CHECK(expand_sij(1, 2, 3) == w("s1 s1", 3));
  CHECK(expand_sij(1, 3, 3) == w("s2 s1 s1 s2^-1", 3));
  CHECK(expand_sij(2, 4, 4) == w("s3 s2 s2 s3^-1", 4));
  CHECK_THROWS(expand_sij(2, 2, 3));
  CHECK(expand_coset(2, 2, 3).empty());
  CHECK(expand_coset(1, 3, 3) == w("s1^-1 s2^-1", 3));
  CHECK(expand_coset(1, 2, 4) == w("s1^-1", 4));
  CHECK_THROWS(expand_coset(3, 2, 3));
}

TEST_CASE("property: print then parse round trips") {
  testing::WordSource src(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int rank = src.uniform(0, 6);
    const Word x = src.word(rank, 12, 0.2);
    CHECK(parse_word(to_string(x), rank) == x);
  }
}

TEST_CASE("property: free_reduce is idempotent and never lengthens") {
  testing::WordSource src(12);
  for (int trial = 0; trial < 500; ++trial) {
    const int rank = src.uniform(2, 6);
    const Word x = src.word(rank, 16, 0.1);
    const Word r = free_reduce(x);
    CHECK(r.size() <= x.size());
    CHECK(free_reduce(r) == r);
    CHECK(ib_equal_disc(x, r));
  }
}

TEST_CASE("property: Delta has n(n-1)/2 letters") {
  for (int n = 2; n <= 12; ++n)
    CHECK(static_cast<int>(garside_delta(n).size()) == n * (n - 1) / 2);
}

TEST_CASE("property: both sign choices for eps_{i+1} agree") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      const Word base = eps_word(i, n);
      for (int a : {-1, 1})
        for (int b : {-1, 1}) CHECK(ib_equal_disc(base, eps_word(i, n, a, b)));
      CHECK(ib_equal_disc(base, Word(n, {Letter::eps(i)})));
    }
  }
}
