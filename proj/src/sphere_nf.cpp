#include "imcm/sphere_nf.hpp"

#include <map>
#include <stdexcept>

namespace imcm {

std::string_view to_string(SphereFlavor f) {
  return f == SphereFlavor::braid ? "sphere-braid" : "sphere-mcg";
}

namespace {

// In the sphere group, s_{j,n} equals a word in sigma_1 .. sigma_{n-2}:
//   s_{j,j+1} ... s_{j,n} = sigma_j ... sigma_{n-1} sigma_{n-1} ... sigma_j
// and sigma_{j-1}..sigma_1 sigma_1..sigma_{j-1} times that product is a
// conjugate of the sphere relator. Returned at rank n - 1.
Word sphere_substitute(int j, int n) {
  const int m = n - 1;
  Word before(m);
  for (int k = j + 1; k < n; ++k) before *= expand_sij(j, k, m);
  Word left(m);
  for (int i = j - 1; i >= 1; --i) left.push_back(Letter::sigma(i));
  for (int i = 1; i <= j - 1; ++i) left.push_back(Letter::sigma(i));
  return before.inverse() * left.inverse();
}

}  // namespace

SphereTail sphere_reduce(const Layers& disc_layers, int rank, SphereFlavor flavor) {
  const int n = rank;
  if (n <= 2) return {};
  if (static_cast<int>(disc_layers.size()) != n - 1)
    throw std::invalid_argument("sphere_reduce needs rank - 1 layers");
  const int m = n - 1;
  Word h(m);
  for (std::size_t idx = 0; idx < disc_layers.size(); ++idx) {
    const int j = static_cast<int>(idx) + 1;
    for (int a : disc_layers[idx].letters()) {
      const int k = a > 0 ? a : -a;
      const Word s = k < n ? expand_sij(j, k, m) : sphere_substitute(j, n);
      h *= a > 0 ? s : s.inverse();
    }
  }
  h = free_reduce(h);
  const int twist = comb_pure(h).back().exponent_sum();
  const Word full_twist = garside_delta(m).power(2);
  Layers reduced = comb_pure(free_reduce(h * full_twist.power(-twist)));
  if (!reduced.back().empty()) throw std::logic_error("top layer survived the twist absorption");
  reduced.pop_back();
  SphereTail tail;
  tail.layers = std::move(reduced);
  tail.delta = flavor == SphereFlavor::braid ? ((twist % 2) + 2) % 2 : 0;
  return tail;
}

MarkovNormalForm normal_form(const Word& w, SphereFlavor flavor) {
  if (w.has_epsilon()) throw std::invalid_argument("sphere normal form needs an epsilon-free word");
  MarkovNormalForm nf;
  nf.rank = w.rank();
  nf.flavor = flavor;
  if (nf.rank <= 1) return nf;
  CosetFactor cf = coset_factor(w);
  nf.cosets = std::move(cf.indices);
  SphereTail tail = sphere_reduce(comb_pure(cf.pure), nf.rank, flavor);
  nf.layers = std::move(tail.layers);
  nf.delta = tail.delta;
  return nf;
}

Word expand(const MarkovNormalForm& nf) {
  Word out = coset_word(nf.cosets, nf.rank) * expand_layers(nf.layers, nf.rank);
  if (nf.delta != 0) out *= garside_delta(nf.rank).power(2 * nf.delta);
  return out;
}

bool equal_sphere(const Word& w1, const Word& w2, SphereFlavor flavor) {
  if (w1.rank() != w2.rank())
    throw RankMismatch("cannot compare words of rank " + std::to_string(w1.rank()) + " and " +
                       std::to_string(w2.rank()));
  return normal_form(w1, flavor) == normal_form(w2, flavor);
}

MarkovNormalForm multiply(const MarkovNormalForm& a, const MarkovNormalForm& b) {
  if (a.rank != b.rank || a.flavor != b.flavor)
    throw RankMismatch("normal forms of different rank or flavor");
  return normal_form(expand(a) * expand(b), a.flavor);
}

MarkovNormalForm inverse(const MarkovNormalForm& a) {
  return normal_form(expand(a).inverse(), a.flavor);
}

MarkovNormalForm identity_form(int rank, SphereFlavor flavor) {
  return normal_form(Word(rank), flavor);
}

std::string to_string(const MarkovNormalForm& nf) {
  std::string out = "cosets=" + tuple_to_string(nf.cosets) + " layers=[" +
                    layers_to_string(nf.layers) + "]";
  if (nf.flavor == SphereFlavor::braid) out += " delta=" + std::to_string(nf.delta);
  return out;
}

SphereEnumeration enumerate_sphere(int rank, SphereFlavor flavor) {
  if (rank < 0 || rank > 3)
    throw std::out_of_range("sphere enumeration is finite only for rank <= 3");
  std::vector<std::vector<int>> tuples{{}};
  for (int j = 2; j <= rank; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples)
      for (int i = 1; i <= j; ++i) {
        auto u = t;
        u.push_back(i);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  const int deltas = flavor == SphereFlavor::braid && rank >= 3 ? 2 : 1;
  SphereEnumeration out;
  std::map<MarkovNormalForm, int> index;
  std::vector<std::string> names;
  for (const auto& t : tuples)
    for (int d = 0; d < deltas; ++d) {
      Word w = coset_word(t, rank) * garside_delta(rank).power(2 * d);
      MarkovNormalForm nf = normal_form(w, flavor);
      if (nf.cosets != t || nf.delta != d || !nf.layers.empty())
        throw std::logic_error("enumerated word did not normalize to itself");
      index.emplace(nf, static_cast<int>(out.elements.size()));
      names.push_back(to_string(nf));
      out.elements.push_back(std::move(nf));
    }
  const std::size_t size = out.elements.size();
  std::vector<int> products(size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      products[a * size + b] = index.at(multiply(out.elements[a], out.elements[b]));
  out.table = MultiplicationTable(std::move(names), std::move(products));
  return out;
}

}  // namespace imcm
