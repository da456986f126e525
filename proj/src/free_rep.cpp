#include "imcm/free_rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace imcm {

PartialFreeAutomorphism PartialFreeAutomorphism::identity(int n) {
  std::vector<FreeWord> images;
  for (int i = 1; i <= n; ++i) images.push_back(FreeWord::generator(i));
  return PartialFreeAutomorphism(PartialInjection::identity(n), std::move(images));
}

PartialFreeAutomorphism::PartialFreeAutomorphism(PartialInjection shadow,
                                                 std::vector<FreeWord> images)
    : shadow_(std::move(shadow)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != shadow_.n())
    throw std::invalid_argument("one image slot per generator is required");
  // Undefined slots are normalized so that equality is structural.
  for (int i = 1; i <= shadow_.n(); ++i)
    if (!shadow_.defined(i)) images_[static_cast<std::size_t>(i - 1)] = FreeWord();
}

const FreeWord& PartialFreeAutomorphism::image(int i) const {
  if (i < 1 || i > rank() || !defined(i))
    throw std::out_of_range("x" + std::to_string(i) + " is not in the domain");
  return images_[static_cast<std::size_t>(i - 1)];
}

PartialFreeAutomorphism phi_generator(Letter letter, int rank) {
  if (!letter.valid_for_rank(rank))
    throw std::out_of_range("letter " + to_string(letter) + " invalid for rank " +
                            std::to_string(rank));
  std::vector<FreeWord> images;
  for (int k = 1; k <= rank; ++k) images.push_back(FreeWord::generator(k));
  const int i = letter.index;
  auto x = [](int k, int sign = 1) { return FreeWord::generator(k, sign); };
  switch (letter.kind) {
    case LetterKind::sigma:
      images[static_cast<std::size_t>(i - 1)] = x(i + 1);
      images[static_cast<std::size_t>(i)] = x(i + 1, -1) * x(i) * x(i + 1);
      return {PartialInjection::transposition(rank, i), std::move(images)};
    case LetterKind::sigma_inverse:
      images[static_cast<std::size_t>(i)] = x(i);
      images[static_cast<std::size_t>(i - 1)] = x(i) * x(i + 1) * x(i, -1);
      return {PartialInjection::transposition(rank, i), std::move(images)};
    default:
      return {PartialInjection::restricted_identity(rank, {i}), std::move(images)};
  }
}

namespace {

std::vector<bool> membership(int n, const std::vector<int>& points) {
  std::vector<bool> keep(static_cast<std::size_t>(n) + 1, false);
  for (int p : points) keep[static_cast<std::size_t>(p)] = true;
  return keep;
}

}  // namespace

PartialFreeAutomorphism compose_pfa(const PartialFreeAutomorphism& f,
                                    const PartialFreeAutomorphism& g) {
  if (f.rank() != g.rank())
    throw RankMismatch("cannot compose automorphisms of rank " + std::to_string(f.rank()) +
                       " and " + std::to_string(g.rank()));
  const int n = f.rank();
  PartialInjection shadow = compose(f.shadow(), g.shadow());
  const std::vector<bool> in_g = membership(n, g.shadow().domain());
  const std::vector<bool> in_target = membership(n, shadow.image());
  std::vector<FreeWord> table(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k)
    if (g.defined(k)) table[static_cast<std::size_t>(k)] = g.image(k);
  std::vector<FreeWord> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    if (!shadow.defined(i)) continue;
    images[static_cast<std::size_t>(i - 1)] =
        f.image(i).killed(in_g).substitute(table).killed(in_target);
  }
  return {std::move(shadow), std::move(images)};
}

PartialFreeAutomorphism phi_of_word(const Word& w) {
  PartialFreeAutomorphism acc = PartialFreeAutomorphism::identity(w.rank());
  for (const Letter& l : w.letters()) acc = compose_pfa(acc, phi_generator(l, w.rank()));
  return acc;
}

bool ib_equal_disc(const Word& w1, const Word& w2) {
  if (w1.rank() != w2.rank())
    throw RankMismatch("cannot compare words of rank " + std::to_string(w1.rank()) +
                       " and " + std::to_string(w2.rank()));
  return phi_of_word(w1) == phi_of_word(w2);
}

FreeWord braid_image(const Word& w, int k) {
  const int n = w.rank();
  if (k < 1 || k > n) throw std::out_of_range("generator index out of range");
  // One substitution table per letter kind and index, built on demand.
  std::vector<std::vector<FreeWord>> tables(2 * static_cast<std::size_t>(n));
  FreeWord cur = FreeWord::generator(k);
  for (const Letter& l : w.letters()) {
    if (l.is_epsilon()) throw std::invalid_argument("braid_image needs an epsilon-free word");
    const std::size_t slot = 2 * static_cast<std::size_t>(l.index) +
                             (l.kind == LetterKind::sigma ? 0 : 1);
    auto& table = tables[slot - 2];
    if (table.empty()) {
      const PartialFreeAutomorphism g = phi_generator(l, n);
      table.resize(static_cast<std::size_t>(n) + 1);
      for (int j = 1; j <= n; ++j) table[static_cast<std::size_t>(j)] = g.image(j);
    }
    cur = cur.substitute(table);
  }
  return cur;
}

std::string to_string(const PartialFreeAutomorphism& f, std::string_view letter) {
  std::string out;
  for (int i = 1; i <= f.rank(); ++i) {
    if (i > 1) out += '\n';
    out += std::to_string(i) + " -> " + (f.defined(i) ? to_string(f.image(i), letter) : "_");
  }
  return out;
}

SpherePartialAutomorphism::SpherePartialAutomorphism(const PartialFreeAutomorphism& free_action)
    : shadow_(free_action.shadow()) {
  const int n = shadow_.n();
  const std::vector<int> live = shadow_.image();
  eliminated_ = live.empty() ? 0 : live.back();
  images_.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    if (shadow_.defined(i)) images_[static_cast<std::size_t>(i - 1)] = reduce(free_action.image(i));
}

FreeWord SpherePartialAutomorphism::reduce(const FreeWord& w) const {
  const int n = shadow_.n();
  const std::vector<int> live = shadow_.image();
  std::vector<bool> keep = membership(n, live);
  FreeWord out = w.killed(keep);
  if (eliminated_ == 0) return out;
  std::vector<FreeWord> table(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) table[static_cast<std::size_t>(k)] = FreeWord::generator(k);
  FreeWord rest;
  for (int k : live)
    if (k != eliminated_) rest *= FreeWord::generator(k);
  table[static_cast<std::size_t>(eliminated_)] = rest.inverse();
  return out.substitute(table);
}

const FreeWord& SpherePartialAutomorphism::image(int i) const {
  if (i < 1 || i > rank() || !shadow_.defined(i))
    throw std::out_of_range("u" + std::to_string(i) + " is not in the domain");
  return images_[static_cast<std::size_t>(i - 1)];
}

SpherePartialAutomorphism sphere_action_of_word(const Word& w) {
  return SpherePartialAutomorphism(phi_of_word(w));
}

std::string to_string(const SpherePartialAutomorphism& f) {
  std::string out;
  for (int i = 1; i <= f.rank(); ++i) {
    if (i > 1) out += '\n';
    out += std::to_string(i) + " -> " +
           (f.shadow().defined(i) ? to_string(f.image(i), "u") : "_");
  }
  if (f.eliminated() != 0) out += "\n(u" + std::to_string(f.eliminated()) + " eliminated)";
  return out;
}

std::string_view to_string(IOutVerdict v) {
  switch (v) {
    case IOutVerdict::equal: return "equal";
    case IOutVerdict::distinct: return "distinct";
    default: return "inconclusive";
  }
}

namespace {

bool conjugates(const SpherePartialAutomorphism& a1, const SpherePartialAutomorphism& a2,
                const std::vector<int>& domain, const FreeWord& c) {
  const FreeWord ci = c.inverse();
  return std::all_of(domain.begin(), domain.end(), [&](int i) {
    return ci * a1.image(i) * c == a2.image(i);
  });
}

}  // namespace

IOutResult iout_equal_verifier(const SpherePartialAutomorphism& a1,
                               const SpherePartialAutomorphism& a2, int bound) {
  if (a1.rank() != a2.rank())
    throw RankMismatch("cannot compare actions of rank " + std::to_string(a1.rank()) +
                       " and " + std::to_string(a2.rank()));
  IOutResult result;
  result.bound = bound;
  if (a1.shadow() != a2.shadow()) {
    result.verdict = IOutVerdict::distinct;
    return result;
  }
  const std::vector<int> domain = a1.shadow().domain();
  for (std::size_t x = 0; x < domain.size(); ++x) {
    if (a1.image(domain[x]).cyclic_normal() != a2.image(domain[x]).cyclic_normal()) {
      result.verdict = IOutVerdict::distinct;
      return result;
    }
    for (std::size_t y = x + 1; y < domain.size(); ++y) {
      const FreeWord p1 = a1.image(domain[x]) * a1.image(domain[y]);
      const FreeWord p2 = a2.image(domain[x]) * a2.image(domain[y]);
      if (p1.cyclic_normal() != p2.cyclic_normal()) {
        result.verdict = IOutVerdict::distinct;
        return result;
      }
    }
  }

  std::vector<int> alphabet;
  for (int k : a1.shadow().image())
    if (k != a1.eliminated()) {
      alphabet.push_back(k);
      alphabet.push_back(-k);
    }
  // Breadth-first over reduced conjugators, shortest first.
  std::vector<FreeWord> layer{FreeWord()};
  for (int len = 0; len <= bound; ++len) {
    for (const FreeWord& c : layer)
      if (conjugates(a1, a2, domain, c)) {
        result.verdict = IOutVerdict::equal;
        result.conjugator = c;
        return result;
      }
    if (len == bound) break;
    std::vector<FreeWord> next;
    for (const FreeWord& c : layer)
      for (int a : alphabet) {
        if (!c.empty() && c.letters().back() == -a) continue;
        next.push_back(c * FreeWord(std::vector<int>{a}));
      }
    layer = std::move(next);
  }
  result.verdict = IOutVerdict::inconclusive;
  return result;
}

}  // namespace imcm
