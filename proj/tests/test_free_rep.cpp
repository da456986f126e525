#include <doctest.h>

#include "imcm/free_rep.hpp"
#include "imcm/relations.hpp"
#include "imcm/sphere_nf.hpp"
#include "random_words.hpp"

using namespace imcm;

namespace {

Word w(const char* text, int rank) { return parse_word(text, rank); }
FreeWord fw(std::vector<int> letters) { return FreeWord(std::move(letters)); }

}  // namespace

TEST_CASE("phi of single generators") {
  const auto s1 = phi_generator(Letter::sigma(1), 2);
  CHECK(s1.image(1) == fw({2}));
  CHECK(s1.image(2) == fw({-2, 1, 2}));
  const auto e1 = phi_generator(Letter::eps(1), 2);
  CHECK_FALSE(e1.defined(1));
  CHECK(e1.image(2) == fw({2}));
  CHECK_THROWS_AS(e1.image(1), std::out_of_range);
  const auto s1i = phi_generator(Letter::sigma_inv(1), 2);
  CHECK(s1i.image(1) == fw({1, 2, -1}));
  CHECK(s1i.image(2) == fw({1}));
  CHECK(compose_pfa(s1, s1i) == PartialFreeAutomorphism::identity(2));
  CHECK(compose_pfa(s1i, s1) == PartialFreeAutomorphism::identity(2));
  CHECK(to_string(s1) == "1 -> x2\n2 -> x2^-1 x1 x2");
  CHECK(to_string(e1) == "1 -> _\n2 -> x2");
}

TEST_CASE("compose kills before substituting") {
  const auto s1 = phi_generator(Letter::sigma(1), 2);
  const auto e1 = phi_generator(Letter::eps(1), 2);
  const auto a = compose_pfa(s1, e1);
  CHECK(a.image(1) == fw({2}));
  CHECK_FALSE(a.defined(2));
  const auto b = compose_pfa(e1, s1);
  CHECK(b.image(2) == fw({1}));
  CHECK_FALSE(b.defined(1));
  CHECK(compose_pfa(s1, PartialFreeAutomorphism::identity(2)) == s1);
  CHECK_THROWS_AS(compose_pfa(s1, PartialFreeAutomorphism::identity(3)), RankMismatch);
}

TEST_CASE("phi_of_word") {
  CHECK(phi_of_word(w("", 3)) == PartialFreeAutomorphism::identity(3));
  CHECK(phi_of_word(w("s1 s1^-1", 2)) == PartialFreeAutomorphism::identity(2));
  CHECK(phi_of_word(w("e1 e1", 2)) == phi_of_word(w("e1", 2)));
}

TEST_CASE("ib_equal_disc") {
  CHECK(ib_equal_disc(w("s1 s2 s1", 3), w("s2 s1 s2", 3)));
  CHECK(ib_equal_disc(w("e1 s1", 2), w("s1 e2", 2)));
  CHECK_FALSE(ib_equal_disc(w("s1", 2), w("s1^-1", 2)));
  CHECK_FALSE(ib_equal_disc(w("s1 s1", 2), w("", 2)));
  CHECK(ib_equal_disc(w("e2 s1 s1", 2), w("e2", 2)));
  CHECK_THROWS_AS(ib_equal_disc(w("", 2), w("", 3)), RankMismatch);
}

TEST_CASE("braid_image agrees with the full fold") {
  testing::WordSource src(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = src.uniform(2, 5);
    const Word b = src.braid(n, 10);
    const auto full = phi_of_word(b);
    for (int k = 1; k <= n; ++k) CHECK(braid_image(b, k) == full.image(k));
  }
}

TEST_CASE("sphere action in quotient coordinates") {
  const auto id = sphere_action_of_word(w("", 3));
  CHECK(id == SpherePartialAutomorphism(PartialFreeAutomorphism::identity(3)));
  CHECK(id.eliminated() == 3);
  const auto s1 = sphere_action_of_word(w("s1", 3));
  CHECK(s1.image(1) == fw({2}));
  CHECK(s1.image(2) == fw({-2, 1, 2}));
  // u3 is written through u1 u2 u3 = 1.
  CHECK(s1.image(3) == s1.reduce(fw({3})));
  CHECK(s1.reduce(fw({3})) == fw({-2, -1}));
  const auto dead = sphere_action_of_word(w("e1 e2 e3", 3));
  CHECK(dead.shadow().domain().empty());
  CHECK(dead.eliminated() == 0);
  const auto partial = sphere_action_of_word(w("e3", 3));
  CHECK(partial.eliminated() == 2);
  CHECK(partial.image(2) == fw({-1}));
}

TEST_CASE("iout verifier") {
  const auto a = sphere_action_of_word(w("s1 s2^-1 s1", 3));
  CHECK(iout_equal_verifier(a, a, 0).verdict == IOutVerdict::equal);
  CHECK(iout_equal_verifier(sphere_action_of_word(w("s1", 3)),
                            sphere_action_of_word(w("s2", 3)), 4)
            .verdict == IOutVerdict::distinct);
  const auto r = iout_equal_verifier(sphere_action_of_word(w("s1 s1", 3)),
                                     sphere_action_of_word(w("", 3)), 4);
  CHECK(r.verdict == IOutVerdict::equal);
  CHECK(r.bound == 4);
  REQUIRE(r.conjugator.has_value());
  // Delta^2 is the conjugation by the surface relation: trivial in the quotient.
  CHECK(iout_equal_verifier(sphere_action_of_word(garside_delta(4).power(2)),
                            sphere_action_of_word(w("", 4)), 2)
            .verdict == IOutVerdict::equal);
  CHECK(to_string(IOutVerdict::inconclusive) == "inconclusive");
}

TEST_CASE("property: phi certifies the disc relations up to rank 6") {
  for (Presentation p : {Presentation::disc_braid, Presentation::disc_inverse,
                         Presentation::disc_inverse_balanced,
                         Presentation::disc_inverse_two_generator, Presentation::pure_braid})
    for (int n = 2; n <= 6; ++n)
      for (const auto& r : relations(p, n).pairs) {
        CAPTURE(r.family);
        CHECK(ib_equal_disc(r.lhs, r.rhs));
      }
}

TEST_CASE("property: shadow of phi is tau") {
  testing::WordSource src(32);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = src.uniform(1, 6);
    const Word x = src.word(n, 10, 0.25);
    CHECK(phi_of_word(x).shadow() == tau_of_word(x));
  }
}

TEST_CASE("property: compose_pfa is associative") {
  testing::WordSource src(33);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = src.uniform(2, 5);
    const auto a = phi_of_word(src.word(n, 6, 0.2));
    const auto b = phi_of_word(src.word(n, 6, 0.2));
    const auto c = phi_of_word(src.word(n, 6, 0.2));
    CHECK(compose_pfa(compose_pfa(a, b), c) == compose_pfa(a, compose_pfa(b, c)));
  }
}

TEST_CASE("property: braids fix the boundary word up to conjugacy") {
  testing::WordSource src(34);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = src.uniform(2, 6);
    const auto f = phi_of_word(src.braid(n, 10));
    FreeWord boundary, image;
    for (int i = 1; i <= n; ++i) {
      boundary *= FreeWord::generator(i);
      image *= f.image(i);
    }
    // Artin: the product x1...xn is fixed exactly.
    CHECK(image == boundary);
    CHECK(image.cyclic_normal() == boundary.cyclic_normal());
  }
}

TEST_CASE("property: images are conjugates of single letters along the shadow") {
  testing::WordSource src(35);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = src.uniform(2, 6);
    const auto f = phi_of_word(src.word(n, 10, 0.2));
    for (int i : f.shadow().domain()) {
      int middle = 0;
      FreeWord c;
      REQUIRE(split_conjugate(f.image(i), middle, c));
      CHECK(middle == f.shadow()(i));
      for (int letter : c.letters()) CHECK(f.shadow().inverse().defined(std::abs(letter)));
    }
  }
}
