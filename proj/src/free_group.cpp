#include "imcm/free_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace imcm {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

}  // namespace

FreeWord::FreeWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int a : letters) {
    if (a == 0) throw std::invalid_argument("free letter 0 is not allowed");
    push_reduced(letters_, a);
  }
}

FreeWord FreeWord::generator(int k, int sign) {
  if (k <= 0) throw std::invalid_argument("free generators are numbered from 1");
  FreeWord w;
  w.letters_.push_back(sign < 0 ? -k : k);
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(-*it);
  return out;
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  for (int a : rhs.letters_) push_reduced(letters_, a);
  return *this;
}

FreeWord FreeWord::power(int exponent) const {
  const FreeWord base = exponent < 0 ? inverse() : *this;
  FreeWord out;
  for (int i = 0; i < std::abs(exponent); ++i) out *= base;
  return out;
}

FreeWord FreeWord::substitute(std::span<const FreeWord> images) const {
  FreeWord out;
  for (int a : letters_) {
    const auto k = static_cast<std::size_t>(std::abs(a));
    if (k >= images.size()) {
      push_reduced(out.letters_, a);
      continue;
    }
    const auto& img = images[k].letters_;
    if (a > 0) {
      for (int b : img) push_reduced(out.letters_, b);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it)
        push_reduced(out.letters_, -*it);
    }
  }
  return out;
}

FreeWord FreeWord::killed(const std::vector<bool>& keep) const {
  FreeWord out;
  for (int a : letters_) {
    const auto k = static_cast<std::size_t>(std::abs(a));
    if (k < keep.size() && !keep[k]) continue;
    push_reduced(out.letters_, a);
  }
  return out;
}

FreeWord FreeWord::cyclic_normal() const {
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<int> core(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                        letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  std::vector<int> best = core;
  for (std::size_t r = 1; r < core.size(); ++r) {
    std::rotate(core.begin(), core.begin() + 1, core.end());
    if (core < best) best = core;
  }
  FreeWord out;
  out.letters_ = std::move(best);
  return out;
}

int FreeWord::exponent_sum() const {
  int sum = 0;
  for (int a : letters_) sum += a > 0 ? 1 : -1;
  return sum;
}

int FreeWord::max_letter() const {
  int m = 0;
  for (int a : letters_) m = std::max(m, std::abs(a));
  return m;
}

bool split_conjugate(const FreeWord& w, int& middle, FreeWord& conjugator) {
  const auto letters = w.letters();
  if (letters.size() % 2 == 0) return false;
  const std::size_t half = letters.size() / 2;
  for (std::size_t i = 0; i < half; ++i)
    if (letters[i] != -letters[letters.size() - 1 - i]) return false;
  middle = letters[half];
  conjugator = FreeWord(std::vector<int>(
      letters.begin() + static_cast<std::ptrdiff_t>(half + 1), letters.end()));
  return true;
}

std::string to_string(const FreeWord& w, std::string_view prefix) {
  if (w.empty()) return "1";
  std::string out;
  for (int a : w.letters()) {
    if (!out.empty()) out += ' ';
    out += prefix;
    out += std::to_string(std::abs(a));
    if (a < 0) out += "^-1";
  }
  return out;
}

}  // namespace imcm
