#pragma once

// Generator words for braid-like monoids over a fixed strand count.
//
// Composition convention used everywhere in this library: words are read
// left to right and a word is applied in reading order, so the product
// u * v means "first u, then v".

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace imcm {

/// Raised for any malformed word text; token() names the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::string token)
      : std::invalid_argument(message), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Two words (or elements) built over different strand counts were combined.
class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class LetterKind : std::uint8_t { sigma, sigma_inverse, epsilon };

struct Letter {
  LetterKind kind = LetterKind::sigma;
  int index = 1;

  static constexpr Letter sigma(int i) { return {LetterKind::sigma, i}; }
  static constexpr Letter sigma_inv(int i) {
    return {LetterKind::sigma_inverse, i};
  }
  static constexpr Letter eps(int i) { return {LetterKind::epsilon, i}; }

  constexpr bool is_epsilon() const { return kind == LetterKind::epsilon; }
  /// +1 for sigma, -1 for sigma inverse, 0 for epsilon.
  constexpr int exponent() const {
    switch (kind) {
      case LetterKind::sigma: return 1;
      case LetterKind::sigma_inverse: return -1;
      default: return 0;
    }
  }
  /// Throws std::domain_error for epsilon, which has no inverse.
  Letter inverse() const;
  bool valid_for_rank(int rank) const;

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

std::string to_string(Letter letter);

/// A finite sequence of letters over a fixed rank. The empty word is the
/// identity. Every letter is validated against the rank on insertion.
class Word {
 public:
  Word() = default;
  explicit Word(int rank);
  Word(int rank, std::vector<Letter> letters);

  int rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter letter);
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  bool has_epsilon() const;
  /// Group inverse; throws std::domain_error if an epsilon letter is present.
  Word inverse() const;
  /// Inverse in the inverse monoid: reversed, sigma letters inverted,
  /// epsilon letters kept (they are their own inverses).
  Word monoid_inverse() const;
  Word without_epsilon() const;
  Word power(int exponent) const;
  /// Explicit re-embedding into a rank >= rank(), shifting every index by
  /// offset. Never happens implicitly.
  Word embedded(int new_rank, int offset = 0) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int rank_ = 0;
  std::vector<Letter> letters_;
};

Word parse_word(std::string_view text, int rank);
std::string to_string(const Word& word);

/// Cancels adjacent sigma_i sigma_i^-1 pairs; epsilon letters never cancel.
Word free_reduce(const Word& word);

// Macros.
Word garside_delta(int rank);
/// sigma_1 sigma_2 ... sigma_{n-1}
Word sigma_product(int rank);
/// epsilon_i built from epsilon_1 by eps_{j+1} = s_j^a eps_j s_j^b, with the
/// default signs a = +1, b = -1.
Word eps_word(int i, int rank, int first_sign = 1, int second_sign = -1);
/// eps_{k+1} eps_{k+2} ... eps_n as atomic letters; empty when k == n.
Word eps_block(int k, int rank);
/// Dispatches on "Delta", "sigma-big", "eps(i)" and "eps-block(k)".
Word expand_macro(std::string_view name, int rank);

/// s_{i,j} = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1
Word expand_sij(int i, int j, int rank);
/// sigma_{k,l} = s_k^-1 ... s_{l-1}^-1, empty for k == l.
Word expand_coset(int k, int l, int rank);

}  // namespace imcm
