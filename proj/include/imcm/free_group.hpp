#pragma once

// Reduced words in a free group on letters numbered 1, 2, ...
// A letter is a signed int: +k is the k-th generator, -k its inverse.
// The same type carries x-words of the free representation and the
// s_{j,k}-words of combed pure braids (there the letter k means s_{j,k}).

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace imcm {

class FreeWord {
 public:
  FreeWord() = default;
  /// Freely reduces the input.
  explicit FreeWord(std::vector<int> letters);
  static FreeWord generator(int k, int sign = 1);

  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord& operator*=(const FreeWord& rhs);
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) {
    return lhs *= rhs;
  }
  FreeWord power(int exponent) const;

  /// Replaces x_k by images[k] (index 0 unused). Letters beyond the table
  /// are kept as they are.
  FreeWord substitute(std::span<const FreeWord> images) const;
  /// Sets every letter with keep[k] == false to 1.
  FreeWord killed(const std::vector<bool>& keep) const;
  /// Conjugation-invariant: the cyclic reduction rotated to its
  /// lexicographically least rotation.
  FreeWord cyclic_normal() const;
  int exponent_sum() const;
  int max_letter() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<int> letters_;
};

/// If w = c^-1 x c (reduced), returns c and the middle letter x.
/// Fails (returns false) when w is not a conjugate of a single letter.
bool split_conjugate(const FreeWord& w, int& middle, FreeWord& conjugator);

/// "x1 x2^-1 x1" with the given letter prefix; "1" for the empty word.
std::string to_string(const FreeWord& w, std::string_view prefix = "x");

}  // namespace imcm
