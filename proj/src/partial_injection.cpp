#include "imcm/partial_injection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace imcm {

PartialInjection PartialInjection::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative rank");
  PartialInjection f;
  f.map_.resize(static_cast<std::size_t>(n));
  std::iota(f.map_.begin(), f.map_.end(), 1);
  return f;
}

PartialInjection PartialInjection::empty(int n) {
  if (n < 0) throw std::invalid_argument("negative rank");
  PartialInjection f;
  f.map_.assign(static_cast<std::size_t>(n), 0);
  return f;
}

PartialInjection PartialInjection::from_pairs(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  PartialInjection f = empty(n);
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw std::invalid_argument("pair out of range");
    auto& slot = f.map_[static_cast<std::size_t>(a - 1)];
    if (slot != 0 || hit[static_cast<std::size_t>(b)])
      throw std::invalid_argument("pairs do not form a partial injection");
    slot = b;
    hit[static_cast<std::size_t>(b)] = true;
  }
  return f;
}

PartialInjection PartialInjection::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) pairs.emplace_back(i, images[static_cast<std::size_t>(i - 1)]);
  return from_pairs(n, pairs);
}

PartialInjection PartialInjection::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("transposition index out of range");
  PartialInjection f = identity(n);
  std::swap(f.map_[static_cast<std::size_t>(i - 1)], f.map_[static_cast<std::size_t>(i)]);
  return f;
}

PartialInjection PartialInjection::restricted_identity(int n, const std::vector<int>& removed) {
  PartialInjection f = identity(n);
  for (int i : removed) {
    if (i < 1 || i > n) throw std::out_of_range("point out of range");
    f.map_[static_cast<std::size_t>(i - 1)] = 0;
  }
  return f;
}

std::vector<int> PartialInjection::domain() const {
  std::vector<int> out;
  for (int i = 1; i <= n(); ++i)
    if (defined(i)) out.push_back(i);
  return out;
}

std::vector<int> PartialInjection::image() const {
  std::vector<int> out;
  for (int b : map_)
    if (b != 0) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

int PartialInjection::rank() const {
  return static_cast<int>(std::count_if(map_.begin(), map_.end(), [](int b) { return b != 0; }));
}

PartialInjection PartialInjection::inverse() const {
  PartialInjection f = empty(n());
  for (int i = 1; i <= n(); ++i)
    if (int b = (*this)(i); b != 0) f.map_[static_cast<std::size_t>(b - 1)] = i;
  return f;
}

bool PartialInjection::is_idempotent() const {
  for (int i = 1; i <= n(); ++i)
    if (int b = (*this)(i); b != 0 && b != i) return false;
  return true;
}

PartialInjection compose(const PartialInjection& f, const PartialInjection& g) {
  if (f.n() != g.n())
    throw RankMismatch("cannot compose partial injections of rank " +
                       std::to_string(f.n()) + " and " + std::to_string(g.n()));
  PartialInjection h = PartialInjection::empty(f.n());
  for (int i = 1; i <= f.n(); ++i)
    if (int b = f(i); b != 0) h.map_[static_cast<std::size_t>(i - 1)] = g(b);
  return h;
}

std::string to_string(const PartialInjection& f) {
  std::string out = "[";
  for (int i : f.domain()) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(i) + "->" + std::to_string(f(i));
  }
  return out + "]";
}

PartialInjection tau_of_word(const Word& w) {
  const int n = w.rank();
  // where[s] = current position of the point that started at s, 0 once dead
  std::vector<int> where(static_cast<std::size_t>(n) + 1);
  std::vector<int> at(static_cast<std::size_t>(n) + 1);
  std::iota(where.begin(), where.end(), 0);
  std::iota(at.begin(), at.end(), 0);
  for (const Letter& l : w.letters()) {
    const auto i = static_cast<std::size_t>(l.index);
    if (l.is_epsilon()) {
      if (at[i] != 0) where[static_cast<std::size_t>(at[i])] = 0;
      at[i] = 0;
    } else {
      std::swap(at[i], at[i + 1]);
      if (at[i] != 0) where[static_cast<std::size_t>(at[i])] = l.index;
      if (at[i + 1] != 0) where[static_cast<std::size_t>(at[i + 1])] = l.index + 1;
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (int s = 1; s <= n; ++s)
    if (where[static_cast<std::size_t>(s)] != 0) pairs.emplace_back(s, where[static_cast<std::size_t>(s)]);
  return PartialInjection::from_pairs(n, pairs);
}

std::vector<PartialInjection> enumerate_symmetric_inverse_monoid(int n) {
  if (n < 0 || n > 5) throw std::out_of_range("enumeration of I_n needs 0 <= n <= 5");
  std::vector<PartialInjection> out;
  for (int k = 0; k <= n; ++k) {
    // subsets of size k as bitmasks, in increasing order of their sorted tuples
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(i + 1);
      if (static_cast<int>(s.size()) == k) subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end());
    for (const auto& dom : subsets)
      for (const auto& img : subsets) {
        std::vector<int> perm = img;
        do {
          std::vector<std::pair<int, int>> pairs;
          for (std::size_t t = 0; t < dom.size(); ++t) pairs.emplace_back(dom[t], perm[t]);
          out.push_back(PartialInjection::from_pairs(n, pairs));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
  }
  return out;
}

}  // namespace imcm
