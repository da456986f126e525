#pragma once

// Inverse monoids built over a base group of braids: the inverse braid
// monoid (disc), its sphere analogue, and the inverse mapping class monoid
// of the punctured sphere.
//
// An element is stored canonically as (domain, image, core): the strands
// starting at the domain points survive and end at the image points, and
// the core is the normal form of the braid they perform, as an element of
// the rank-k base group, k = |domain|. The bijection domain -> image is
// read off the core: the m-th domain point goes to image point pi(m), where
// pi is the permutation of the core.

#include <string>
#include <variant>
#include <vector>

#include "imcm/braid_combing.hpp"
#include "imcm/free_rep.hpp"
#include "imcm/gen_words.hpp"
#include "imcm/partial_injection.hpp"
#include "imcm/sphere_nf.hpp"

namespace imcm {

enum class Flavor { disc, sphere_braid, sphere_mcg };
std::string_view to_string(Flavor f);
/// Accepts "disc", "sphere-braid", "sphere-mcg".
Flavor parse_flavor(std::string_view name);

/// Disc cores keep the combed form and the free-group image side by side;
/// the first rebuilds words, the second is the faithful invariant.
struct DiscCore {
  DiscNormalForm form;
  PartialFreeAutomorphism phi;
  friend bool operator==(const DiscCore&, const DiscCore&) = default;
};

using Core = std::variant<DiscCore, MarkovNormalForm>;

/// Canonical core of an epsilon-free word in the base group of the flavor.
Core core_of(const Word& w, Flavor flavor);
Word core_word(const Core& core);
int core_rank(const Core& core);

class PartialMCElement {
 public:
  PartialMCElement() = default;
  /// Validates tuple sizes, ordering and the core rank.
  PartialMCElement(int n, Flavor flavor, std::vector<int> domain, std::vector<int> image,
                   Core core);

  int n() const { return n_; }
  Flavor flavor() const { return flavor_; }
  int k() const { return static_cast<int>(domain_.size()); }
  const std::vector<int>& domain() const { return domain_; }
  const std::vector<int>& image() const { return image_; }
  const Core& core() const { return core_; }
  PartialInjection tau() const;

  friend bool operator==(const PartialMCElement&, const PartialMCElement&) = default;

 private:
  int n_ = 0;
  Flavor flavor_ = Flavor::disc;
  std::vector<int> domain_;
  std::vector<int> image_;
  Core core_;
};

/// `k=<k> dom=(...) img=(...) core=<core>`
std::string to_string(const PartialMCElement& e);

/// Builds an element from its parts; core is a rank-k epsilon-free word.
PartialMCElement make_element(int n, Flavor flavor, std::vector<int> domain,
                              std::vector<int> image, const Word& core);
PartialMCElement identity_element(int n, Flavor flavor);
/// All strands deleted.
PartialMCElement empty_element(int n, Flavor flavor);
PartialMCElement eps_element(int i, int n, Flavor flavor);

/// An epsilon letter kills the strand that occupies its position at that
/// moment; killed strands keep moving as holes and their crossings vanish.
PartialMCElement normalize(const Word& w, Flavor flavor);
/// Canonical word: move the domain points to 1..k, eps_{k+1} ... eps_n,
/// the core, eps_{k+1} ... eps_n again, move 1..k to the image points.
Word embed(const PartialMCElement& e);
PartialMCElement multiply(const PartialMCElement& a, const PartialMCElement& b);
PartialMCElement inverse_elt(const PartialMCElement& e);

struct Factorization {
  PartialMCElement idempotent;
  PartialMCElement group_part;
};
/// e = idempotent * group_part, with the group part sending the complement
/// of the domain onto the complement of the image in order.
Factorization factorize(const PartialMCElement& e);

/// eps_i * e == eps_i.
bool is_brunnian(const PartialMCElement& e, int i);
bool is_makanin(const PartialMCElement& e);

struct Abelianization {
  bool eps = false;
  int residue = 0;
  int modulus = 1;
  friend bool operator==(const Abelianization&, const Abelianization&) = default;
};
/// Image in {1, eps} x Z/m for the mapping class flavor, n >= 2. The
/// idempotent absorbs the cyclic part, so any epsilon forces residue 0.
Abelianization abelianize(const Word& w);
Abelianization combine(const Abelianization& a, const Abelianization& b);
int abelian_modulus(int n);
/// "(1, 2 mod 6)" or "(e, 0 mod 6)".
std::string to_string(const Abelianization& a);

/// Mapping class flavor only: the empty element and the identity.
bool in_center(const PartialMCElement& e);

/// eps_i Delta == Delta eps_{n+1-i} after normalization.
bool delta_shift_check(int n, int i, Flavor flavor);

/// eps_n B_1 eps_n B_2 ... B_{n-k-1} eps_n with B_m = s_{n-1} ... s_{k+m}:
/// a product of single-strand deletions equal to eps_{k+1} ... eps_n.
Word eps_block_chain(int k, int n);

}  // namespace imcm
