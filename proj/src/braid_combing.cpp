#include "imcm/braid_combing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "imcm/free_rep.hpp"
#include "imcm/partial_injection.hpp"

namespace imcm {

Word strand_delete(const Word& w, const std::vector<int>& dead) {
  const int n = w.rank();
  std::vector<bool> is_dead(static_cast<std::size_t>(n) + 1, false);
  for (int d : dead) {
    if (d < 1 || d > n) throw std::out_of_range("dead strand out of range");
    is_dead[static_cast<std::size_t>(d)] = true;
  }
  const int live = n - static_cast<int>(std::count(is_dead.begin(), is_dead.end(), true));
  std::vector<int> strand_at(static_cast<std::size_t>(n) + 1);
  std::iota(strand_at.begin(), strand_at.end(), 0);
  Word out(live);
  for (const Letter& l : w.letters()) {
    if (l.is_epsilon()) throw std::invalid_argument("strand_delete needs an epsilon-free word");
    const auto i = static_cast<std::size_t>(l.index);
    const int a = strand_at[i], b = strand_at[i + 1];
    if (!is_dead[static_cast<std::size_t>(a)] && !is_dead[static_cast<std::size_t>(b)]) {
      int index = 0;
      for (std::size_t p = 1; p <= i; ++p)
        if (!is_dead[static_cast<std::size_t>(strand_at[p])]) ++index;
      out.push_back({l.kind, index});
    }
    std::swap(strand_at[i], strand_at[i + 1]);
  }
  return out;
}

Word coset_word(const std::vector<int>& indices, int rank) {
  if (rank >= 1 && static_cast<int>(indices.size()) != rank - 1)
    throw std::invalid_argument("coset word needs rank - 1 indices");
  Word out(rank);
  for (int j = rank; j >= 2; --j) out *= expand_coset(indices[static_cast<std::size_t>(j - 2)], j, rank);
  return out;
}

CosetFactor coset_factor(const Word& w) {
  if (w.has_epsilon()) throw std::invalid_argument("coset_factor needs an epsilon-free word");
  const int n = w.rank();
  CosetFactor result;
  if (n < 2) {
    result.pure = free_reduce(w);
    return result;
  }
  const PartialInjection t = tau_of_word(w);
  std::vector<int> bound_for(static_cast<std::size_t>(n) + 1);
  for (int s = 1; s <= n; ++s) bound_for[static_cast<std::size_t>(t(s))] = s;
  std::vector<int> point_at(static_cast<std::size_t>(n) + 1);
  std::iota(point_at.begin(), point_at.end(), 0);
  result.indices.assign(static_cast<std::size_t>(n - 1), 0);
  for (int j = n; j >= 2; --j) {
    const int point = bound_for[static_cast<std::size_t>(j)];
    const auto q = std::find(point_at.begin(), point_at.end(), point) - point_at.begin();
    result.indices[static_cast<std::size_t>(j - 2)] = static_cast<int>(q);
    point_at.erase(point_at.begin() + q);
    point_at.insert(point_at.begin() + j, point);
  }
  const Word r = coset_word(result.indices, n);
  result.pure = free_reduce(r.inverse() * w);
  return result;
}

namespace {

// x_k written in y_k = (x_2 ... x_{k-1}) x_k (x_2 ... x_{k-1})^{-1}, k >= 2:
// x_k = (y_{k-1} ... y_2)^{-1} (y_k ... y_2).
FreeWord x_in_y(int k) {
  std::vector<int> letters;
  for (int i = 2; i <= k - 1; ++i) letters.push_back(-i);
  for (int i = k; i >= 2; --i) letters.push_back(i);
  return FreeWord(std::move(letters));
}

}  // namespace

Layers comb_pure(const Word& pure) {
  if (pure.has_epsilon()) throw std::invalid_argument("comb_pure needs an epsilon-free word");
  const int m = pure.rank();
  if (tau_of_word(pure) != PartialInjection::identity(m))
    throw std::invalid_argument("comb_pure needs a pure braid");
  if (m <= 1) return {};

  // pure = u * shift(rest), u in the free subgroup of strand 1.
  const Word rest = strand_delete(pure, {1});
  const Word u = free_reduce(pure * rest.embedded(m, 1).inverse());
  const FreeWord image = braid_image(u, 1);
  int middle = 0;
  FreeWord conj;
  if (!split_conjugate(image, middle, conj) || middle != 1)
    throw std::logic_error("pure braid does not conjugate x1");
  std::vector<bool> keep(static_cast<std::size_t>(m) + 1, true);
  keep[1] = false;
  const FreeWord reduced = conj.killed(keep);

  FreeWord in_y;
  for (int a : reduced.letters()) in_y *= a > 0 ? x_in_y(a) : x_in_y(-a).inverse();
  // The map u -> reduced is an anti-homomorphism; read the y-word backwards.
  std::vector<int> first(in_y.letters().rbegin(), in_y.letters().rend());

  Layers layers{FreeWord(std::move(first))};
  for (const FreeWord& layer : comb_pure(rest)) {
    std::vector<int> shifted;
    for (int a : layer.letters()) shifted.push_back(a > 0 ? a + 1 : a - 1);
    layers.emplace_back(std::move(shifted));
  }
  return layers;
}

Word expand_layers(const Layers& layers, int rank) {
  Word out(rank);
  for (std::size_t j = 0; j < layers.size(); ++j)
    for (int a : layers[j].letters()) {
      const Word s = expand_sij(static_cast<int>(j) + 1, a > 0 ? a : -a, rank);
      out *= a > 0 ? s : s.inverse();
    }
  return out;
}

std::string layers_to_string(const Layers& layers) {
  std::string out;
  for (std::size_t j = 0; j < layers.size(); ++j) {
    if (j > 0) out += '|';
    out += to_string(layers[j], "q" + std::to_string(j + 1) + ",");
  }
  return out;
}

DiscNormalForm disc_normal_form(const Word& w) {
  CosetFactor cf = coset_factor(w);
  return {w.rank(), std::move(cf.indices), comb_pure(cf.pure)};
}

Word expand(const DiscNormalForm& nf) {
  return coset_word(nf.cosets, nf.rank) * expand_layers(nf.layers, nf.rank);
}

std::string tuple_to_string(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string to_string(const DiscNormalForm& nf) {
  return "cosets=" + tuple_to_string(nf.cosets) + " layers=[" + layers_to_string(nf.layers) + "]";
}

}  // namespace imcm
