#include "imcm/gen_words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace imcm {

Letter Letter::inverse() const {
  switch (kind) {
    case LetterKind::sigma: return sigma_inv(index);
    case LetterKind::sigma_inverse: return sigma(index);
    default: throw std::domain_error("epsilon has no inverse");
  }
}

bool Letter::valid_for_rank(int rank) const {
  if (is_epsilon()) return index >= 1 && index <= rank;
  return index >= 1 && index <= rank - 1;
}

std::string to_string(Letter letter) {
  switch (letter.kind) {
    case LetterKind::sigma: return "s" + std::to_string(letter.index);
    case LetterKind::sigma_inverse:
      return "s" + std::to_string(letter.index) + "^-1";
    default: return "e" + std::to_string(letter.index);
  }
}

Word::Word(int rank) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
}

Word::Word(int rank, std::vector<Letter> letters) : Word(rank) {
  for (const Letter& l : letters) {
    if (!l.valid_for_rank(rank_))
      throw std::out_of_range("letter " + to_string(l) +
                              " out of range for rank " +
                              std::to_string(rank_));
  }
  letters_ = std::move(letters);
}

void Word::push_back(Letter letter) {
  if (!letter.valid_for_rank(rank_))
    throw std::out_of_range("letter " + to_string(letter) +
                            " out of range for rank " + std::to_string(rank_));
  letters_.push_back(letter);
}

Word& Word::operator*=(const Word& rhs) {
  if (rhs.rank_ != rank_)
    throw RankMismatch("cannot concatenate words of rank " +
                       std::to_string(rank_) + " and " +
                       std::to_string(rhs.rank_));
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

bool Word::has_epsilon() const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [](const Letter& l) { return l.is_epsilon(); });
}

Word Word::inverse() const {
  Word out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(it->inverse());
  return out;
}

Word Word::monoid_inverse() const {
  Word out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(it->is_epsilon() ? *it : it->inverse());
  return out;
}

Word Word::without_epsilon() const {
  Word out(rank_);
  for (const Letter& l : letters_)
    if (!l.is_epsilon()) out.letters_.push_back(l);
  return out;
}

Word Word::power(int exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  Word out(rank_);
  for (int i = 0; i < std::abs(exponent); ++i) out *= base;
  return out;
}

Word Word::embedded(int new_rank, int offset) const {
  if (new_rank < rank_ || offset < 0 || offset + rank_ > new_rank)
    throw std::out_of_range("invalid embedding of rank " +
                            std::to_string(rank_) + " into " +
                            std::to_string(new_rank));
  Word out(new_rank);
  out.letters_.reserve(letters_.size());
  for (Letter l : letters_) {
    l.index += offset;
    out.letters_.push_back(l);
  }
  return out;
}

std::string to_string(const Word& word) {
  std::string out;
  for (const Letter& l : word.letters()) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

Word free_reduce(const Word& word) {
  std::vector<Letter> stack;
  stack.reserve(word.size());
  for (const Letter& l : word.letters()) {
    if (!l.is_epsilon() && !stack.empty() && !stack.back().is_epsilon() &&
        stack.back().index == l.index && stack.back().kind != l.kind) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(word.rank(), std::move(stack));
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::out_of_range(what);
}

}  // namespace

Word garside_delta(int rank) {
  require(rank >= 0, "Delta needs rank >= 0");
  Word out(rank);
  for (int top = rank - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) out.push_back(Letter::sigma(i));
  return out;
}

Word sigma_product(int rank) {
  require(rank >= 0, "sigma-big needs rank >= 0");
  Word out(rank);
  for (int i = 1; i < rank; ++i) out.push_back(Letter::sigma(i));
  return out;
}

Word eps_word(int i, int rank, int first_sign, int second_sign) {
  require(i >= 1 && i <= rank, "eps(" + std::to_string(i) +
                                   ") out of range for rank " +
                                   std::to_string(rank));
  auto s = [](int j, int sign) {
    return sign > 0 ? Letter::sigma(j) : Letter::sigma_inv(j);
  };
  std::vector<Letter> letters{Letter::eps(1)};
  for (int j = 1; j < i; ++j) {
    letters.insert(letters.begin(), s(j, first_sign));
    letters.push_back(s(j, second_sign));
  }
  return Word(rank, std::move(letters));
}

Word eps_block(int k, int rank) {
  require(k >= 0 && k <= rank, "eps-block(" + std::to_string(k) +
                                   ") out of range for rank " +
                                   std::to_string(rank));
  Word out(rank);
  for (int i = k + 1; i <= rank; ++i) out.push_back(Letter::eps(i));
  return out;
}

Word expand_sij(int i, int j, int rank) {
  require(1 <= i && i < j && j <= rank,
          "s_{" + std::to_string(i) + "," + std::to_string(j) +
              "} invalid for rank " + std::to_string(rank));
  Word out(rank);
  for (int m = j - 1; m > i; --m) out.push_back(Letter::sigma(m));
  out.push_back(Letter::sigma(i));
  out.push_back(Letter::sigma(i));
  for (int m = i + 1; m < j; ++m) out.push_back(Letter::sigma_inv(m));
  return out;
}

Word expand_coset(int k, int l, int rank) {
  require(1 <= k && k <= l && l <= rank,
          "sigma_{" + std::to_string(k) + "," + std::to_string(l) +
              "} invalid for rank " + std::to_string(rank));
  Word out(rank);
  for (int m = k; m < l; ++m) out.push_back(Letter::sigma_inv(m));
  return out;
}

namespace {

std::optional<int> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// "i,j" -> pair; nullopt when malformed
std::optional<std::pair<int, int>> parse_pair(std::string_view s) {
  auto comma = s.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto a = parse_int(s.substr(0, comma));
  auto b = parse_int(s.substr(comma + 1));
  if (!a || !b) return std::nullopt;
  return std::pair{*a, *b};
}

Word expand_token(std::string_view token, int rank) {
  std::string_view name = token;
  int exponent = 1;
  bool has_exponent = false;
  if (auto caret = token.find('^'); caret != std::string_view::npos) {
    name = token.substr(0, caret);
    auto e = parse_int(token.substr(caret + 1));
    if (!e) throw ParseError("malformed exponent in token '" +
                                 std::string(token) + "'",
                             std::string(token));
    exponent = *e;
    has_exponent = true;
  }
  if (name.empty())
    throw ParseError("empty generator name in token '" + std::string(token) +
                         "'",
                     std::string(token));

  auto fail = [&](const std::string& why) -> Word {
    throw ParseError(why + " in token '" + std::string(token) + "'",
                     std::string(token));
  };

  const char head = name.front();
  const std::string_view rest = name.substr(1);
  const bool idempotent = head == 'e' || head == 'E';
  if (idempotent && has_exponent && exponent < 1)
    return fail("epsilon is not invertible; exponent must be >= 1");

  Word base(rank);
  try {
    switch (head) {
      case 's': {
        auto i = parse_int(rest);
        if (!i) return fail("malformed index");
        base = Word(rank, {Letter::sigma(*i)});
        break;
      }
      case 'e': {
        int i = 1;
        if (!rest.empty()) {
          auto parsed = parse_int(rest);
          if (!parsed) return fail("malformed index");
          i = *parsed;
        }
        base = Word(rank, {Letter::eps(i)});
        break;
      }
      case 'D':
        if (!rest.empty()) return fail("unknown generator");
        base = garside_delta(rank);
        break;
      case 'g':
        if (!rest.empty()) return fail("unknown generator");
        base = sigma_product(rank);
        break;
      case 'E': {
        auto k = parse_int(rest);
        if (!k) return fail("malformed index");
        base = eps_block(*k, rank);
        break;
      }
      case 'q': {
        auto p = parse_pair(rest);
        if (!p) return fail("malformed index pair");
        base = expand_sij(p->first, p->second, rank);
        break;
      }
      case 'c': {
        auto p = parse_pair(rest);
        if (!p) return fail("malformed index pair");
        base = expand_coset(p->first, p->second, rank);
        break;
      }
      default:
        return fail("unknown generator");
    }
  } catch (const std::out_of_range& e) {
    return fail(std::string("index out of range for rank ") +
                std::to_string(rank));
  }
  return base.power(exponent);
}

}  // namespace

Word parse_word(std::string_view text, int rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  Word out(rank);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    if (end > pos) out *= expand_token(text.substr(pos, end - pos), rank);
    pos = end;
  }
  return out;
}

Word expand_macro(std::string_view name, int rank) {
  auto argument = [&](std::string_view prefix) -> std::optional<int> {
    if (name.size() < prefix.size() + 2 || name.substr(0, prefix.size()) != prefix ||
        name[prefix.size()] != '(' || name.back() != ')')
      return std::nullopt;
    return parse_int(name.substr(prefix.size() + 1,
                                 name.size() - prefix.size() - 2));
  };
  if (name == "Delta") return garside_delta(rank);
  if (name == "sigma-big") return sigma_product(rank);
  if (auto k = argument("eps-block")) return eps_block(*k, rank);
  if (auto i = argument("eps")) return eps_word(*i, rank);
  throw std::invalid_argument("unknown macro '" + std::string(name) + "'");
}

}  // namespace imcm
