#pragma once

// Normal forms and the word problem in the sphere braid group Br_n(S^2)
// and the mapping class group M_{0,n} of the n-punctured sphere.
//
// A normal form is R * w_1 ... w_{n-3} * Delta^{2 delta}: R a coset word,
// w_j a reduced word in s_{j,j+1}, ..., s_{j,n-1}, delta in {0, 1}
// (always 0 for the mapping class group, where Delta^2 = 1).

#include <string>
#include <vector>

#include "imcm/braid_combing.hpp"
#include "imcm/gen_words.hpp"
#include "imcm/mult_table.hpp"

namespace imcm {

enum class SphereFlavor { braid, mcg };
std::string_view to_string(SphereFlavor f);

struct MarkovNormalForm {
  int rank = 0;
  SphereFlavor flavor = SphereFlavor::braid;
  std::vector<int> cosets;
  Layers layers;
  int delta = 0;

  friend bool operator==(const MarkovNormalForm&, const MarkovNormalForm&) = default;
  friend auto operator<=>(const MarkovNormalForm&, const MarkovNormalForm&) = default;
};

struct SphereTail {
  Layers layers;
  int delta = 0;
};

/// Takes the rank - 1 disc layers of a pure braid and removes every s_{j,n}
/// through the sphere relation, then absorbs the last remaining layer into
/// a power of the central full twist.
SphereTail sphere_reduce(const Layers& disc_layers, int rank, SphereFlavor flavor);

/// Throws std::invalid_argument on epsilon letters.
MarkovNormalForm normal_form(const Word& w, SphereFlavor flavor);
Word expand(const MarkovNormalForm& nf);
bool equal_sphere(const Word& w1, const Word& w2, SphereFlavor flavor);
/// Product by concatenation and renormalization.
MarkovNormalForm multiply(const MarkovNormalForm& a, const MarkovNormalForm& b);
MarkovNormalForm inverse(const MarkovNormalForm& a);
MarkovNormalForm identity_form(int rank, SphereFlavor flavor);

/// `cosets=(i2,...,in) layers=[w1|...] delta=d`; delta omitted for mcg.
std::string to_string(const MarkovNormalForm& nf);

struct SphereEnumeration {
  std::vector<MarkovNormalForm> elements;
  MultiplicationTable table;
};

/// All elements for rank <= 3, where no free layers occur.
SphereEnumeration enumerate_sphere(int rank, SphereFlavor flavor);

}  // namespace imcm
