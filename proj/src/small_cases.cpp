#include "imcm/small_cases.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "imcm/parallel.hpp"
#include "imcm/partial_injection.hpp"
#include "imcm/sphere_nf.hpp"

namespace imcm {

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 1);
  if (k > n) return out;
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

MultiplicationTable table_from(const std::vector<std::string>& names,
                               const std::vector<PartialInjection>& elements) {
  std::map<PartialInjection, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<int>(i));
  std::vector<int> products;
  for (const auto& a : elements)
    for (const auto& b : elements) products.push_back(index.at(a * b));
  return MultiplicationTable(names, std::move(products));
}

}  // namespace

MonoidEnumeration enumerate_im0n(int n) {
  if (n < 0 || n > 3) throw std::out_of_range("enumerate_im0n needs 0 <= n <= 3");
  MonoidEnumeration out;
  for (int k = 0; k <= n; ++k) {
    const SphereEnumeration cores = enumerate_sphere(k, SphereFlavor::mcg);
    for (const auto& dom : subsets(n, k))
      for (const auto& img : subsets(n, k))
        for (const auto& core : cores.elements)
          out.elements.push_back(make_element(n, Flavor::sphere_mcg, dom, img, expand(core)));
  }
  std::map<std::string, int> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    names.push_back(to_string(out.elements[i]));
    if (!index.emplace(names.back(), static_cast<int>(i)).second)
      throw std::logic_error("duplicate element in enumeration");
  }
  const std::vector<PartialMCElement> products = product_table_parallel(out.elements);
  std::vector<int> cells;
  cells.reserve(products.size());
  for (const auto& p : products) cells.push_back(index.at(to_string(p)));
  out.table = MultiplicationTable(std::move(names), std::move(cells));
  return out;
}

MultiplicationTable symmetric_inverse_table(int n) {
  const auto elements = enumerate_symmetric_inverse_monoid(n);
  std::vector<std::string> names;
  for (const auto& f : elements) names.push_back(to_string(f));
  return table_from(names, elements);
}

MultiplicationTable symmetric_group_table(int n) {
  std::vector<PartialInjection> elements;
  for (const auto& f : enumerate_symmetric_inverse_monoid(n))
    if (f.is_total()) elements.push_back(f);
  std::vector<std::string> names;
  for (const auto& f : elements) names.push_back(to_string(f));
  return table_from(names, elements);
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 c;
  c.m = {a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
         a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]};
  return c;
}

std::string to_string(const Matrix2& a) {
  auto s = [](std::int64_t v) { return std::to_string(v); };
  return "[[" + s(a.m[0]) + "," + s(a.m[1]) + "],[" + s(a.m[2]) + "," + s(a.m[3]) + "]]";
}

Matrix2 rho(const Word& w) {
  if (w.rank() != 3) throw RankMismatch("rho is defined on three-strand words");
  if (w.has_epsilon()) throw std::invalid_argument("rho needs an epsilon-free word");
  static const Matrix2 s1{{1, 1, 0, 1}}, s1i{{1, -1, 0, 1}};
  static const Matrix2 s2{{1, 0, -1, 1}}, s2i{{1, 0, 1, 1}};
  Matrix2 acc;
  for (const Letter& l : w.letters()) {
    const bool pos = l.kind == LetterKind::sigma;
    acc = acc * (l.index == 1 ? (pos ? s1 : s1i) : (pos ? s2 : s2i));
  }
  return acc;
}

IM11Element IM11Element::full(const Word& braid) {
  if (braid.rank() != 3 || braid.has_epsilon())
    throw std::invalid_argument("full torus elements are three-strand braids");
  IM11Element e;
  e.payload_ = Braid{free_reduce(braid), phi_of_word(braid)};
  return e;
}

IM11Element IM11Element::empty(const Matrix2& a) {
  if (a.det() != 1) throw std::invalid_argument("matrix must have determinant 1");
  IM11Element e;
  e.payload_ = a;
  return e;
}

const Matrix2& IM11Element::matrix() const {
  if (is_full()) throw std::logic_error("full element has no matrix payload");
  return std::get<Matrix2>(payload_);
}

const Word& IM11Element::braid_word() const {
  if (!is_full()) throw std::logic_error("empty element has no braid payload");
  return std::get<Braid>(payload_).word;
}

const PartialFreeAutomorphism& IM11Element::braid_image() const {
  if (!is_full()) throw std::logic_error("empty element has no braid payload");
  return std::get<Braid>(payload_).phi;
}

IM11Element im11_multiply(const IM11Element& a, const IM11Element& b) {
  IM11Element out;
  if (a.is_full() && b.is_full()) {
    const auto& x = std::get<IM11Element::Braid>(a.payload_);
    const auto& y = std::get<IM11Element::Braid>(b.payload_);
    out.payload_ = IM11Element::Braid{free_reduce(x.word * y.word), compose_pfa(x.phi, y.phi)};
  } else if (a.is_full()) {
    out.payload_ = rho(a.braid_word()) * b.matrix();
  } else if (b.is_full()) {
    out.payload_ = a.matrix() * rho(b.braid_word());
  } else {
    out.payload_ = a.matrix() * b.matrix();
  }
  return out;
}

bool operator==(const IM11Element& a, const IM11Element& b) {
  if (a.is_full() != b.is_full()) return false;
  if (a.is_full()) return a.braid_image() == b.braid_image();
  return a.matrix() == b.matrix();
}

std::string to_string(const IM11Element& e) {
  if (e.is_full()) return "braid(" + to_string(e.braid_word()) + ")";
  return to_string(e.matrix());
}

}  // namespace imcm
