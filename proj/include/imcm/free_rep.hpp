#pragma once

// Partial automorphisms of the free group F_n = <x_1..x_n> and the
// representation phi of partial braid words by them. phi is faithful, so
// comparing images decides equality of disc partial braids.
//
// The sphere variant works in the fundamental group of the punctured
// sphere, <u_1..u_n | u_1 ... u_n = 1>, written in quotient coordinates.

#include <optional>
#include <string>
#include <vector>

#include "imcm/free_group.hpp"
#include "imcm/gen_words.hpp"
#include "imcm/partial_injection.hpp"

namespace imcm {

class PartialFreeAutomorphism {
 public:
  PartialFreeAutomorphism() = default;
  static PartialFreeAutomorphism identity(int n);
  /// images[i-1] is the image of x_i; entries off the shadow's domain are ignored.
  PartialFreeAutomorphism(PartialInjection shadow, std::vector<FreeWord> images);

  int rank() const { return shadow_.n(); }
  const PartialInjection& shadow() const { return shadow_; }
  bool defined(int i) const { return shadow_.defined(i); }
  /// Throws std::out_of_range when x_i is outside the domain.
  const FreeWord& image(int i) const;

  friend bool operator==(const PartialFreeAutomorphism&, const PartialFreeAutomorphism&) = default;

 private:
  PartialInjection shadow_;
  std::vector<FreeWord> images_;
};

PartialFreeAutomorphism phi_generator(Letter letter, int rank);
/// First f, then g. Letters of f's images outside g's domain are set to 1
/// before g is substituted; afterwards letters outside the composite image
/// are set to 1 as well (they only arise from conjugators and are trivial
/// in the target subgroup).
PartialFreeAutomorphism compose_pfa(const PartialFreeAutomorphism& f,
                                    const PartialFreeAutomorphism& g);
PartialFreeAutomorphism phi_of_word(const Word& w);
bool ib_equal_disc(const Word& w1, const Word& w2);

/// Image of the single generator x_k under an epsilon-free word. Cheaper than
/// phi_of_word when only one image is needed.
FreeWord braid_image(const Word& w, int k);

/// "i -> word" lines in ascending i, "i -> _" when undefined.
std::string to_string(const PartialFreeAutomorphism& f, std::string_view letter = "x");

class SpherePartialAutomorphism {
 public:
  SpherePartialAutomorphism() = default;
  /// Rewrites the images into quotient coordinates: the largest point of
  /// the shadow's image (n when it survives) is eliminated through the
  /// surface relation restricted to the surviving letters.
  explicit SpherePartialAutomorphism(const PartialFreeAutomorphism& free_action);

  int rank() const { return shadow_.n(); }
  const PartialInjection& shadow() const { return shadow_; }
  /// The letter eliminated in the target, 0 when nothing survives.
  int eliminated() const { return eliminated_; }
  const FreeWord& image(int i) const;
  /// Quotient coordinate form of an arbitrary word over the live letters.
  FreeWord reduce(const FreeWord& w) const;

  friend bool operator==(const SpherePartialAutomorphism&, const SpherePartialAutomorphism&) = default;

 private:
  PartialInjection shadow_;
  std::vector<FreeWord> images_;
  int eliminated_ = 0;
};

SpherePartialAutomorphism sphere_action_of_word(const Word& w);
std::string to_string(const SpherePartialAutomorphism& f);

enum class IOutVerdict { equal, distinct, inconclusive };
std::string_view to_string(IOutVerdict v);

struct IOutResult {
  IOutVerdict verdict = IOutVerdict::inconclusive;
  int bound = 0;
  /// The conjugator found for `equal`.
  std::optional<FreeWord> conjugator;
};

/// Semi-decision of equality modulo conjugation in the target group.
/// Searches conjugators of length <= bound; `distinct` comes from shadows or
/// cyclic words of single and pairwise image products.
IOutResult iout_equal_verifier(const SpherePartialAutomorphism& a1,
                               const SpherePartialAutomorphism& a2, int bound);

}  // namespace imcm
