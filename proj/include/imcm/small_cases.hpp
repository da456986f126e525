#pragma once

// Exactly enumerable small cases: the inverse mapping class monoids of the
// sphere with at most three punctures, the symmetric (inverse) monoids they
// are compared with, and the torus monoid B_3 + SL_2(Z).

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "imcm/free_rep.hpp"
#include "imcm/gen_words.hpp"
#include "imcm/inverse_tower.hpp"
#include "imcm/mult_table.hpp"

namespace imcm {

struct MonoidEnumeration {
  std::vector<PartialMCElement> elements;
  MultiplicationTable table;
};

/// Every element of the sphere mapping class monoid on n <= 3 points.
MonoidEnumeration enumerate_im0n(int n);
MultiplicationTable symmetric_inverse_table(int n);
MultiplicationTable symmetric_group_table(int n);

/// Row-major [[a, b], [c, d]].
struct Matrix2 {
  std::array<std::int64_t, 4> m{1, 0, 0, 1};

  static Matrix2 identity() { return {}; }
  std::int64_t det() const { return m[0] * m[3] - m[1] * m[2]; }
  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};
/// "[[a,b],[c,d]]"
std::string to_string(const Matrix2& a);

/// sigma_1 -> [[1,1],[0,1]], sigma_2 -> [[1,0],[-1,1]], extended along the
/// word. Rank-3 epsilon-free words only.
Matrix2 rho(const Word& w);

/// An element of the torus monoid: a three-strand braid (kept as a
/// representative word plus its free-group image, which decides equality)
/// or an SL_2(Z) matrix for the part with the puncture filled in.
class IM11Element {
 public:
  static IM11Element full(const Word& braid);
  /// Throws std::invalid_argument unless det == 1.
  static IM11Element empty(const Matrix2& a);

  bool is_full() const { return std::holds_alternative<Braid>(payload_); }
  const Matrix2& matrix() const;
  const Word& braid_word() const;
  const PartialFreeAutomorphism& braid_image() const;

  friend IM11Element im11_multiply(const IM11Element& a, const IM11Element& b);
  friend bool operator==(const IM11Element& a, const IM11Element& b);

 private:
  struct Braid {
    Word word;
    PartialFreeAutomorphism phi;
  };
  std::variant<Braid, Matrix2> payload_;
};

std::string to_string(const IM11Element& e);

}  // namespace imcm
