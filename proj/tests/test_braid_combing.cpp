#include <doctest.h>

#include <algorithm>

#include "imcm/braid_combing.hpp"
#include "imcm/free_rep.hpp"
#include "imcm/partial_injection.hpp"
#include "random_words.hpp"

using namespace imcm;

namespace {

Word w(const char* text, int rank) { return parse_word(text, rank); }
FreeWord fw(std::vector<int> letters) { return FreeWord(std::move(letters)); }

bool is_pure(const Word& x) { return tau_of_word(x) == PartialInjection::identity(x.rank()); }

}  // namespace

TEST_CASE("strand_delete") {
  CHECK(strand_delete(w("s1", 2), {1}) == Word(1));
  CHECK(strand_delete(w("s2 s2", 3), {1}) == w("s1 s1", 2));
  const Word x = w("s1 s2^-1 s1", 3);
  CHECK(strand_delete(x, {}) == x);
  // Strand 1 moves to position 2 and then crosses strand 3.
  CHECK(strand_delete(w("s1 s2", 3), {3}) == w("s1", 2));
  CHECK(strand_delete(w("s1 s2", 3), {1}) == Word(2));
  CHECK(strand_delete(w("s1 s2 s1", 3), {1, 2, 3}) == Word(0));
}

TEST_CASE("coset_factor") {
  const Word pure = w("s1 s1 s2 s1^-1", 3) * w("s1 s2^-1", 3);
  REQUIRE(is_pure(pure));
  const CosetFactor id = coset_factor(pure);
  CHECK(id.indices == std::vector<int>{2, 3});
  CHECK(ib_equal_disc(id.pure, pure));

  const CosetFactor s1 = coset_factor(w("s1", 3));
  CHECK(s1.indices == std::vector<int>{1, 3});
  CHECK(s1.pure == w("s1 s1", 3));

  // Brute force over the six coset words at rank 3.
  const Word x = w("s2 s1", 3);
  const CosetFactor f = coset_factor(x);
  int matches = 0;
  for (int i2 = 1; i2 <= 2; ++i2)
    for (int i3 = 1; i3 <= 3; ++i3)
      if (tau_of_word(coset_word({i2, i3}, 3)) == tau_of_word(x)) {
        ++matches;
        CHECK(f.indices == std::vector<int>{i2, i3});
      }
  CHECK(matches == 1);
  CHECK(is_pure(f.pure));
  CHECK(ib_equal_disc(coset_word(f.indices, 3) * f.pure, x));
  CHECK(coset_factor(Word(1)).indices.empty());
}

TEST_CASE("comb_pure") {
  const Layers a = comb_pure(w("s1 s1", 3));
  REQUIRE(a.size() == 2);
  CHECK(a[0] == fw({2}));
  CHECK(a[1].empty());
  const Layers b = comb_pure(w("s2 s1 s1 s2^-1", 3));
  CHECK(b[0] == fw({3}));
  CHECK(b[1].empty());
  const Layers c = comb_pure(w("", 3));
  CHECK(c.size() == 2);
  CHECK(c[0].empty());
  CHECK(c[1].empty());
  CHECK(comb_pure(w("s2 s2", 3))[1] == fw({3}));
  CHECK(comb_pure(Word(1)).empty());
  CHECK_THROWS_AS(comb_pure(w("s1", 3)), std::invalid_argument);
  CHECK_THROWS_AS(comb_pure(w("e1", 3)), std::invalid_argument);
  CHECK(layers_to_string(a) == "q1,2|1");
  CHECK(layers_to_string(comb_pure(w("s2 s1 s1 s2^-1 s2^-1 s2^-1", 3))) == "q1,3|q2,3^-1");
}

TEST_CASE("layer letters expand to generators") {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Layers layers(static_cast<std::size_t>(n - 1));
        layers[i - 1] = FreeWord::generator(j);
        CHECK(comb_pure(expand_sij(i, j, n)) == layers);
        CHECK(expand_layers(layers, n) == expand_sij(i, j, n));
      }
}

TEST_CASE("disc_normal_form text") {
  const DiscNormalForm nf = disc_normal_form(w("s1", 2));
  CHECK(to_string(nf) == "cosets=(1) layers=[q1,2]");
  CHECK(tuple_to_string({1, 2, 3}) == "(1,2,3)");
  CHECK(tuple_to_string({}) == "()");
}

TEST_CASE("property: combing reconstructs the pure braid") {
  testing::WordSource src(41);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = src.uniform(2, 5);
    const CosetFactor f = coset_factor(src.braid(n, 10));
    REQUIRE(is_pure(f.pure));
    const Layers layers = comb_pure(f.pure);
    CHECK(static_cast<int>(layers.size()) == n - 1);
    for (std::size_t j = 0; j < layers.size(); ++j)
      for (int letter : layers[j].letters()) {
        CHECK(std::abs(letter) > static_cast<int>(j) + 1);
        CHECK(std::abs(letter) <= n);
      }
    CHECK(ib_equal_disc(expand_layers(layers, n), f.pure));
  }
}

TEST_CASE("property: disc normal form is a complete invariant") {
  testing::WordSource src(42);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = src.uniform(2, 4);
    const Word x = src.braid(n, 8);
    const Word y = src.coin(0.3) ? x * src.braid(n, 2) * src.braid(n, 2) : src.braid(n, 8);
    const DiscNormalForm nx = disc_normal_form(x);
    CHECK(ib_equal_disc(expand(nx), x));
    CHECK(disc_normal_form(expand(nx)) == nx);
    CHECK((nx == disc_normal_form(y)) == ib_equal_disc(x, y));
  }
}

TEST_CASE("property: strand deletion keeps the surviving point map") {
  testing::WordSource src(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = src.uniform(2, 5);
    const Word x = src.braid(n, 8);
    const int dead = src.uniform(1, n);
    const Word y = strand_delete(x, {dead});
    CHECK(y.rank() == n - 1);
    // The survivors keep their order, so positions above the dead strand's
    // final position drop by one.
    const auto tx = tau_of_word(x);
    const auto ty = tau_of_word(y);
    int k = 0;
    for (int i = 1; i <= n; ++i) {
      if (i == dead) continue;
      ++k;
      CHECK(ty(k) == tx(i) - (tx(i) > tx(dead) ? 1 : 0));
    }
  }
}
