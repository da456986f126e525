#pragma once

// Partial injective self-maps of {1..n}: the symmetric inverse monoid I_n.
// Products compose left to right, (f * g)(i) = g(f(i)).

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "imcm/gen_words.hpp"

namespace imcm {

class PartialInjection {
 public:
  PartialInjection() = default;
  static PartialInjection identity(int n);
  static PartialInjection empty(int n);
  /// Throws std::invalid_argument on non-injective or out-of-range pairs.
  static PartialInjection from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  /// Total map from a permutation given as images of 1..n.
  static PartialInjection from_images(const std::vector<int>& images);
  static PartialInjection transposition(int n, int i);
  /// Identity restricted to {1..n} minus the listed points.
  static PartialInjection restricted_identity(int n, const std::vector<int>& removed);

  int n() const { return static_cast<int>(map_.size()); }
  /// 0 when undefined.
  int operator()(int i) const { return map_.at(static_cast<std::size_t>(i - 1)); }
  bool defined(int i) const { return (*this)(i) != 0; }
  std::vector<int> domain() const;
  std::vector<int> image() const;
  int rank() const;
  bool is_total() const { return rank() == n(); }

  PartialInjection inverse() const;
  bool is_idempotent() const;

  friend PartialInjection compose(const PartialInjection& f, const PartialInjection& g);
  friend PartialInjection operator*(const PartialInjection& f, const PartialInjection& g) {
    return compose(f, g);
  }
  friend bool operator==(const PartialInjection&, const PartialInjection&) = default;
  friend auto operator<=>(const PartialInjection&, const PartialInjection&) = default;

 private:
  std::vector<int> map_;
};

/// "[1->2, 3->3]", "[]" for the empty map.
std::string to_string(const PartialInjection& f);

PartialInjection tau_of_word(const Word& w);

/// All elements of I_n, n <= 5, ordered by rank, then domain, then image.
std::vector<PartialInjection> enumerate_symmetric_inverse_monoid(int n);

}  // namespace imcm
