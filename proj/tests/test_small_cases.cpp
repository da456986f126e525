#include <doctest.h>

#include "imcm/mult_table.hpp"
#include "imcm/small_cases.hpp"
#include "oracles.hpp"
#include "random_words.hpp"

using namespace imcm;

namespace {

Word w(const char* text) { return parse_word(text, 3); }
Matrix2 mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return {{a, b, c, d}}; }

}  // namespace

TEST_CASE("IM_{0,n} enumeration counts and structure") {
  const std::size_t expected[] = {1, 2, 7, 34};
  for (int n = 0; n <= 3; ++n) {
    const MonoidEnumeration m = enumerate_im0n(n);
    CHECK(m.elements.size() == expected[n]);
    CHECK(m.table.is_associative());
    REQUIRE(m.table.identity().has_value());
    CHECK(m.elements[*m.table.identity()] == identity_element(n, Flavor::sphere_mcg));
  }
  const MonoidEnumeration one = enumerate_im0n(1);
  int idempotents = 0;
  for (int a = 0; a < one.table.size(); ++a) idempotents += one.table.is_idempotent(a);
  CHECK(idempotents == 2);
  CHECK_THROWS(enumerate_im0n(4));
}

TEST_CASE("IM_{0,n} is isomorphic to the rook monoid for n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    const MultiplicationTable im = enumerate_im0n(n).table;
    const MultiplicationTable rook = oracle::rook_table(n, false);
    const auto witness = iso_check(im, rook);
    REQUIRE(witness.has_value());
    for (int a = 0; a < im.size(); ++a) {
      CHECK(im.is_idempotent(a) == rook.is_idempotent((*witness)[a]));
      CHECK(im.right_ideal_size(a) == rook.right_ideal_size((*witness)[a]));
    }
    CHECK(iso_check(symmetric_inverse_table(n), rook).has_value());
  }
}

TEST_CASE("iso_check negatives and guards") {
  CHECK_FALSE(iso_check(symmetric_inverse_table(2), symmetric_inverse_table(3)).has_value());
  // Same size, different structure: Z/6 against S_3.
  std::vector<int> cyclic;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) cyclic.push_back((a + b) % 6);
  const MultiplicationTable z6({"0", "1", "2", "3", "4", "5"}, cyclic);
  CHECK(z6.is_associative());
  CHECK_FALSE(iso_check(z6, symmetric_group_table(3)).has_value());
  CHECK(iso_check(symmetric_group_table(3), oracle::rook_table(3, true)).has_value());
  CHECK_THROWS(iso_check(symmetric_inverse_table(4), symmetric_inverse_table(4)));
}

TEST_CASE("multiplication table text") {
  const MultiplicationTable t = enumerate_im0n(1).table;
  const std::string text = t.to_text();
  CHECK(text.find(" * ") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
}

TEST_CASE("rho examples") {
  CHECK(rho(w("")) == Matrix2::identity());
  CHECK(rho(w("s1")) == mat(1, 1, 0, 1));
  CHECK(rho(w("s2")) == mat(1, 0, -1, 1));
  CHECK(rho(w("s1^-1")) == mat(1, -1, 0, 1));
  CHECK(rho(w("D D D D")) == Matrix2::identity());
  CHECK(rho(w("D D")) == mat(-1, 0, 0, -1));
  CHECK(rho(w("s1 s2 s1")) == rho(w("s2 s1 s2")));
  CHECK(to_string(rho(w("s1"))) == "[[1,1],[0,1]]");
  CHECK_THROWS(rho(w("e1")));
  CHECK_THROWS(rho(parse_word("s1", 2)));
}

TEST_CASE("im11 examples") {
  const auto x = IM11Element::full(w("s1 s2^-1"));
  CHECK(im11_multiply(x, IM11Element::full(w(""))) == x);
  const auto a = IM11Element::empty(mat(2, 1, 1, 1));
  const Word b = w("s2 s1");
  CHECK(im11_multiply(a, IM11Element::full(b)) == IM11Element::empty(a.matrix() * rho(b)));
  CHECK(im11_multiply(IM11Element::full(b), a) == IM11Element::empty(rho(b) * a.matrix()));
  const auto one = IM11Element::empty(Matrix2::identity());
  CHECK(im11_multiply(one, one) == one);
  CHECK_THROWS(IM11Element::empty(mat(2, 0, 0, 1)));
  CHECK(IM11Element::full(w("s1 s2 s1")) == IM11Element::full(w("s2 s1 s2")));
  CHECK_FALSE(IM11Element::full(w("D D")) == IM11Element::full(w("")));
  CHECK_FALSE(x == one);
  CHECK(to_string(one) == "[[1,0],[0,1]]");
}

TEST_CASE("property: rho is a homomorphism into SL_2(Z)") {
  testing::WordSource src(71);
  for (int trial = 0; trial < 500; ++trial) {
    const Word u = src.braid(3, 10), v = src.braid(3, 10);
    CHECK(rho(u * v) == rho(u) * rho(v));
    CHECK(rho(u).det() == 1);
  }
}

TEST_CASE("property: im11_multiply is associative on mixed triples") {
  testing::WordSource src(72);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = src.im11(), b = src.im11(), c = src.im11();
    CHECK(im11_multiply(im11_multiply(a, b), c) == im11_multiply(a, im11_multiply(b, c)));
  }
}
