#pragma once

// Finite multiplication tables, used as exact oracles for small cases.

#include <optional>
#include <string>
#include <vector>

namespace imcm {

class MultiplicationTable {
 public:
  MultiplicationTable() = default;
  /// products[a * size + b] is the index of a * b.
  MultiplicationTable(std::vector<std::string> names, std::vector<int> products);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int a) const { return names_.at(static_cast<std::size_t>(a)); }
  const std::vector<std::string>& names() const { return names_; }
  int product(int a, int b) const {
    return products_[static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b)];
  }
  /// Index of the two-sided identity, if there is one.
  std::optional<int> identity() const;
  bool is_associative() const;
  bool is_idempotent(int a) const { return product(a, a) == a; }
  /// Number of distinct products a * x; an isomorphism invariant.
  int right_ideal_size(int a) const;
  bool is_central(int a) const;

  /// "a * b = c" lines in index order.
  std::string to_text() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> products_;
};

/// A product-preserving bijection from a to b (witness[i] is the image of
/// element i), or nothing. Sizes above 40 are rejected.
std::optional<std::vector<int>> iso_check(const MultiplicationTable& a,
                                          const MultiplicationTable& b);

}  // namespace imcm
