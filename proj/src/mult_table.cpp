#include "imcm/mult_table.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace imcm {

MultiplicationTable::MultiplicationTable(std::vector<std::string> names, std::vector<int> products)
    : names_(std::move(names)), products_(std::move(products)) {
  const auto n = names_.size();
  if (products_.size() != n * n) throw std::invalid_argument("product table has the wrong size");
  for (int p : products_)
    if (p < 0 || static_cast<std::size_t>(p) >= n)
      throw std::invalid_argument("product index out of range");
}

std::optional<int> MultiplicationTable::identity() const {
  for (int e = 0; e < size(); ++e) {
    bool ok = true;
    for (int a = 0; a < size() && ok; ++a) ok = product(e, a) == a && product(a, e) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

bool MultiplicationTable::is_associative() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      const int ab = product(a, b);
      for (int c = 0; c < size(); ++c)
        if (product(ab, c) != product(a, product(b, c))) return false;
    }
  return true;
}

int MultiplicationTable::right_ideal_size(int a) const {
  std::set<int> seen;
  for (int x = 0; x < size(); ++x) seen.insert(product(a, x));
  return static_cast<int>(seen.size());
}

bool MultiplicationTable::is_central(int a) const {
  for (int x = 0; x < size(); ++x)
    if (product(a, x) != product(x, a)) return false;
  return true;
}

std::string MultiplicationTable::to_text() const {
  std::string out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      out += name(a) + " * " + name(b) + " = " + name(product(a, b)) + "\n";
  return out;
}

namespace {

struct Signature {
  bool idempotent;
  int ideal;
  bool central;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

class IsoSearch {
 public:
  IsoSearch(const MultiplicationTable& a, const MultiplicationTable& b) : a_(a), b_(b) {
    for (int x = 0; x < a.size(); ++x) sig_a_.push_back(signature(a, x));
    for (int x = 0; x < b.size(); ++x) sig_b_.push_back(signature(b, x));
    map_.assign(static_cast<std::size_t>(a.size()), -1);
    used_.assign(static_cast<std::size_t>(b.size()), false);
  }

  std::optional<std::vector<int>> run() {
    if (a_.size() != b_.size()) return std::nullopt;
    auto sa = sig_a_, sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    if (search()) return map_;
    return std::nullopt;
  }

 private:
  static Signature signature(const MultiplicationTable& t, int x) {
    return {t.is_idempotent(x), t.right_ideal_size(x), t.is_central(x)};
  }

  // Assigns x -> y and closes under products with everything already
  // assigned. Returns false on a contradiction; the trail records what to undo.
  bool assign(int x, int y, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> queue{{x, y}};
    while (!queue.empty()) {
      auto [p, q] = queue.back();
      queue.pop_back();
      const auto ps = static_cast<std::size_t>(p);
      if (map_[ps] != -1) {
        if (map_[ps] != q) return false;
        continue;
      }
      if (used_[static_cast<std::size_t>(q)] || sig_a_[ps] != sig_b_[static_cast<std::size_t>(q)])
        return false;
      map_[ps] = q;
      used_[static_cast<std::size_t>(q)] = true;
      trail.push_back(p);
      for (int r = 0; r < a_.size(); ++r) {
        const int mr = map_[static_cast<std::size_t>(r)];
        if (mr == -1) continue;
        queue.emplace_back(a_.product(p, r), b_.product(q, mr));
        queue.emplace_back(a_.product(r, p), b_.product(mr, q));
      }
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (int p : trail) {
      used_[static_cast<std::size_t>(map_[static_cast<std::size_t>(p)])] = false;
      map_[static_cast<std::size_t>(p)] = -1;
    }
  }

  bool search() {
    const auto it = std::find(map_.begin(), map_.end(), -1);
    if (it == map_.end()) return true;
    const int x = static_cast<int>(it - map_.begin());
    for (int y = 0; y < b_.size(); ++y) {
      if (used_[static_cast<std::size_t>(y)]) continue;
      std::vector<int> trail;
      if (assign(x, y, trail) && search()) return true;
      undo(trail);
    }
    return false;
  }

  const MultiplicationTable& a_;
  const MultiplicationTable& b_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> iso_check(const MultiplicationTable& a,
                                          const MultiplicationTable& b) {
  if (a.size() > 40 || b.size() > 40) throw std::invalid_argument("iso_check is limited to 40 elements");
  return IsoSearch(a, b).run();
}

}  // namespace imcm
