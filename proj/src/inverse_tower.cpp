#include "imcm/inverse_tower.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace imcm {

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::disc: return "disc";
    case Flavor::sphere_braid: return "sphere-braid";
    default: return "sphere-mcg";
  }
}

Flavor parse_flavor(std::string_view name) {
  if (name == "disc") return Flavor::disc;
  if (name == "sphere-braid") return Flavor::sphere_braid;
  if (name == "sphere-mcg") return Flavor::sphere_mcg;
  throw std::invalid_argument("unknown flavor '" + std::string(name) + "'");
}

Core core_of(const Word& w, Flavor flavor) {
  switch (flavor) {
    case Flavor::disc: return DiscCore{disc_normal_form(w), phi_of_word(w)};
    case Flavor::sphere_braid: return normal_form(w, SphereFlavor::braid);
    default: return normal_form(w, SphereFlavor::mcg);
  }
}

Word core_word(const Core& core) {
  return std::visit(
      [](const auto& c) -> Word {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, DiscCore>) {
          return expand(c.form);
        } else {
          return expand(c);
        }
      },
      core);
}

int core_rank(const Core& core) {
  if (const auto* d = std::get_if<DiscCore>(&core)) return d->form.rank;
  return std::get<MarkovNormalForm>(core).rank;
}

namespace {

bool strictly_increasing_in_range(const std::vector<int>& v, int n) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > n) return false;
    if (i > 0 && v[i - 1] >= v[i]) return false;
  }
  return true;
}

std::string core_to_string(const Core& core) {
  if (const auto* d = std::get_if<DiscCore>(&core)) return to_string(d->form);
  return to_string(std::get<MarkovNormalForm>(core));
}

}  // namespace

PartialMCElement::PartialMCElement(int n, Flavor flavor, std::vector<int> domain,
                                   std::vector<int> image, Core core)
    : n_(n), flavor_(flavor), domain_(std::move(domain)), image_(std::move(image)),
      core_(std::move(core)) {
  if (n_ < 0) throw std::invalid_argument("negative rank");
  if (domain_.size() != image_.size())
    throw std::invalid_argument("domain and image must have the same size");
  if (!strictly_increasing_in_range(domain_, n_) || !strictly_increasing_in_range(image_, n_))
    throw std::invalid_argument("domain and image must be increasing tuples in 1..n");
  if (core_rank(core_) != k()) throw std::invalid_argument("core rank must equal |domain|");
  const bool disc_core = std::holds_alternative<DiscCore>(core_);
  if (disc_core != (flavor_ == Flavor::disc))
    throw std::invalid_argument("core type does not match the flavor");
}

PartialInjection PartialMCElement::tau() const {
  const PartialInjection pi = tau_of_word(core_word(core_));
  std::vector<std::pair<int, int>> pairs;
  for (int m = 1; m <= k(); ++m)
    pairs.emplace_back(domain_[static_cast<std::size_t>(m - 1)],
                       image_[static_cast<std::size_t>(pi(m) - 1)]);
  return PartialInjection::from_pairs(n_, pairs);
}

std::string to_string(const PartialMCElement& e) {
  return "k=" + std::to_string(e.k()) + " dom=" + tuple_to_string(e.domain()) +
         " img=" + tuple_to_string(e.image()) + " core=" + core_to_string(e.core());
}

PartialMCElement make_element(int n, Flavor flavor, std::vector<int> domain,
                              std::vector<int> image, const Word& core) {
  if (core.rank() != static_cast<int>(domain.size()))
    throw RankMismatch("core word must have rank |domain|");
  return {n, flavor, std::move(domain), std::move(image), core_of(core, flavor)};
}

PartialMCElement identity_element(int n, Flavor flavor) { return normalize(Word(n), flavor); }

PartialMCElement empty_element(int n, Flavor flavor) {
  return normalize(eps_block(0, n), flavor);
}

PartialMCElement eps_element(int i, int n, Flavor flavor) {
  return normalize(Word(n, {Letter::eps(i)}), flavor);
}

PartialMCElement normalize(const Word& w, Flavor flavor) {
  const int n = w.rank();
  std::vector<int> strand_at(static_cast<std::size_t>(n) + 1);
  std::iota(strand_at.begin(), strand_at.end(), 0);
  std::vector<bool> dead(static_cast<std::size_t>(n) + 1, false);
  for (const Letter& l : w.letters()) {
    const auto i = static_cast<std::size_t>(l.index);
    if (l.is_epsilon()) {
      dead[static_cast<std::size_t>(strand_at[i])] = true;
    } else {
      std::swap(strand_at[i], strand_at[i + 1]);
    }
  }
  std::vector<int> domain, image, killed;
  for (int s = 1; s <= n; ++s) {
    if (dead[static_cast<std::size_t>(s)]) {
      killed.push_back(s);
    } else {
      domain.push_back(s);
    }
  }
  for (int p = 1; p <= n; ++p)
    if (!dead[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(p)])]) image.push_back(p);
  const Word core = strand_delete(w.without_epsilon(), killed);
  return {n, flavor, std::move(domain), std::move(image), core_of(core, flavor)};
}

namespace {

// Moves domain point d_m to position m for m = 1..k, passing over the others.
Word gather(const std::vector<int>& points, int n) {
  Word out(n);
  for (std::size_t m = 1; m <= points.size(); ++m)
    for (int i = points[m - 1] - 1; i >= static_cast<int>(m); --i) out.push_back(Letter::sigma(i));
  return out;
}

// Moves position m to image point j_m for m = k..1.
Word scatter(const std::vector<int>& points, int n) {
  Word out(n);
  for (std::size_t m = points.size(); m >= 1; --m)
    for (int i = static_cast<int>(m); i < points[m - 1]; ++i) out.push_back(Letter::sigma(i));
  return out;
}

}  // namespace

Word embed(const PartialMCElement& e) {
  const int n = e.n();
  const Word marker = eps_block(e.k(), n);
  return gather(e.domain(), n) * marker * core_word(e.core()).embedded(n) * marker *
         scatter(e.image(), n);
}

namespace {

void require_compatible(const PartialMCElement& a, const PartialMCElement& b) {
  if (a.n() != b.n() || a.flavor() != b.flavor())
    throw RankMismatch("elements of different rank or flavor: " + std::to_string(a.n()) + "/" +
                       std::string(to_string(a.flavor())) + " and " + std::to_string(b.n()) +
                       "/" + std::string(to_string(b.flavor())));
}

}  // namespace

PartialMCElement multiply(const PartialMCElement& a, const PartialMCElement& b) {
  require_compatible(a, b);
  return normalize(embed(a) * embed(b), a.flavor());
}

PartialMCElement inverse_elt(const PartialMCElement& e) {
  return make_element(e.n(), e.flavor(), e.image(), e.domain(), core_word(e.core()).inverse());
}

Factorization factorize(const PartialMCElement& e) {
  const int n = e.n();
  std::vector<int> missing;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(e.domain().begin(), e.domain().end(), i)) missing.push_back(i);
  Word idempotent(n);
  for (int i : missing) idempotent.push_back(Letter::eps(i));
  // gather() is a shuffle braid; closing with its inverse on the image side
  // leaves the complement strands uncrossed, so idempotents get a trivial group part.
  const Word group =
      gather(e.domain(), n) * core_word(e.core()).embedded(n) * gather(e.image(), n).inverse();
  return {normalize(idempotent, e.flavor()), normalize(group, e.flavor())};
}

bool is_brunnian(const PartialMCElement& e, int i) {
  if (i < 1 || i > e.n()) throw std::out_of_range("Brunnian index out of range");
  const PartialMCElement eps = eps_element(i, e.n(), e.flavor());
  return multiply(eps, e) == eps;
}

bool is_makanin(const PartialMCElement& e) {
  for (int i = 1; i <= e.n(); ++i)
    if (!is_brunnian(e, i)) return false;
  return true;
}

int abelian_modulus(int n) {
  if (n < 2) throw std::domain_error("abelianization is defined for n >= 2");
  return n % 2 == 0 ? 2 * (n - 1) : n - 1;
}

Abelianization abelianize(const Word& w) {
  Abelianization a;
  a.modulus = abelian_modulus(w.rank());
  a.eps = w.has_epsilon();
  if (!a.eps) {
    int sum = 0;
    for (const Letter& l : w.letters()) sum += l.exponent();
    a.residue = ((sum % a.modulus) + a.modulus) % a.modulus;
  }
  return a;
}

Abelianization combine(const Abelianization& a, const Abelianization& b) {
  if (a.modulus != b.modulus) throw RankMismatch("abelianizations of different rank");
  Abelianization out;
  out.modulus = a.modulus;
  out.eps = a.eps || b.eps;
  out.residue = out.eps ? 0 : (a.residue + b.residue) % a.modulus;
  return out;
}

std::string to_string(const Abelianization& a) {
  return std::string("(") + (a.eps ? "e" : "1") + ", " + std::to_string(a.residue) + " mod " +
         std::to_string(a.modulus) + ")";
}

bool in_center(const PartialMCElement& e) {
  if (e.flavor() != Flavor::sphere_mcg)
    throw std::invalid_argument("center membership is implemented for sphere-mcg only");
  if (e.k() == 0) return true;
  return e == identity_element(e.n(), e.flavor());
}

bool delta_shift_check(int n, int i, Flavor flavor) {
  if (i < 1 || i > n) throw std::out_of_range("index out of range");
  const Word delta = garside_delta(n);
  const Word lhs = Word(n, {Letter::eps(i)}) * delta;
  const Word rhs = delta * Word(n, {Letter::eps(n + 1 - i)});
  return normalize(lhs, flavor) == normalize(rhs, flavor);
}

Word eps_block_chain(int k, int n) {
  if (k < 0 || k >= n) throw std::out_of_range("eps_block_chain needs 0 <= k < n");
  Word out(n, {Letter::eps(n)});
  for (int m = 1; m <= n - k - 1; ++m) {
    for (int i = n - 1; i >= k + m; --i) out.push_back(Letter::sigma(i));
    out.push_back(Letter::eps(n));
  }
  return out;
}

}  // namespace imcm
