#pragma once

// Coset decomposition of braids over the pure braid group and combing of
// pure braids into layers. Layer j of an m-strand pure braid is a free word
// whose letter k (j < k <= m) stands for s_{j,k}; the braid equals
// layer_1 * layer_2 * ... * layer_{m-1}, each letter expanded.

#include <string>
#include <vector>

#include "imcm/free_group.hpp"
#include "imcm/gen_words.hpp"

namespace imcm {

using Layers = std::vector<FreeWord>;

/// Drops every crossing that involves a strand whose starting position is in
/// `dead`, then renumbers the surviving strands in order. The result has
/// rank w.rank() - |dead|.
Word strand_delete(const Word& w, const std::vector<int>& dead);

struct CosetFactor {
  /// (i_2, ..., i_n) with 1 <= i_j <= j; empty for rank < 2.
  std::vector<int> indices;
  /// R^{-1} w, freely reduced, where R is coset_word(indices).
  Word pure;
};

/// R = sigma_{i_n,n} ... sigma_{i_2,2}: at step j the point bound for
/// position j is carried there from its current position i_j.
CosetFactor coset_factor(const Word& w);
Word coset_word(const std::vector<int>& indices, int rank);

/// Throws std::invalid_argument unless w is epsilon-free with trivial
/// permutation. Returns rank - 1 layers (none for rank <= 1).
Layers comb_pure(const Word& pure);
Word expand_layers(const Layers& layers, int rank);
/// "w1|w2|..." with letters q<j>,<k>.
std::string layers_to_string(const Layers& layers);
/// "(1,2,3)"
std::string tuple_to_string(const std::vector<int>& v);

/// Unique form R * layers of a disc braid.
struct DiscNormalForm {
  int rank = 0;
  std::vector<int> cosets;
  Layers layers;

  friend bool operator==(const DiscNormalForm&, const DiscNormalForm&) = default;
  friend auto operator<=>(const DiscNormalForm&, const DiscNormalForm&) = default;
};

DiscNormalForm disc_normal_form(const Word& w);
Word expand(const DiscNormalForm& nf);
std::string to_string(const DiscNormalForm& nf);

}  // namespace imcm
