#include "imcm/relations.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace imcm {

namespace {

constexpr std::array<std::pair<Presentation, std::string_view>, 14> kNames{{
    {Presentation::disc_braid, "disc-braid"},
    {Presentation::disc_inverse, "disc-inverse"},
    {Presentation::sphere_braid, "sphere-braid"},
    {Presentation::sphere_mcg, "sphere-mcg"},
    {Presentation::sphere_inverse_braid, "sphere-inverse-braid"},
    {Presentation::sphere_inverse_mcg, "sphere-inverse-mcg"},
    {Presentation::symmetric_inverse, "symmetric-inverse"},
    {Presentation::braid_two_generator, "braid-two-generator"},
    {Presentation::disc_inverse_balanced, "disc-inverse-balanced"},
    {Presentation::disc_inverse_two_generator, "disc-inverse-two-generator"},
    {Presentation::sphere_mcg_two_generator, "sphere-mcg-two-generator"},
    {Presentation::sphere_inverse_mcg_balanced, "sphere-inverse-mcg-balanced"},
    {Presentation::sphere_inverse_mcg_two_generator,
     "sphere-inverse-mcg-two-generator"},
    {Presentation::pure_braid, "pure-braid"},
}};

// Small builder so relation lists read close to their textbook form.
class Builder {
 public:
  Builder(int rank, std::vector<Relation>& out) : n_(rank), out_(out) {}

  Word s(int i) const { return Word(n_, {Letter::sigma(i)}); }
  Word si(int i) const { return Word(n_, {Letter::sigma_inv(i)}); }
  Word e(int i = 1) const { return Word(n_, {Letter::eps(i)}); }
  Word one() const { return Word(n_); }
  Word big() const { return sigma_product(n_); }
  Word q(int i, int j) const { return expand_sij(i, j, n_); }

  void add(std::string family, Word lhs, Word rhs) {
    out_.push_back({std::move(family), std::move(lhs), std::move(rhs)});
  }
  // a = b = c = ... as consecutive pairs
  void chain(const std::string& family, std::vector<Word> words) {
    for (std::size_t i = 1; i < words.size(); ++i) add(family, words[i - 1], words[i]);
  }

  int n() const { return n_; }

 private:
  int n_;
  std::vector<Relation>& out_;
};

void group_axioms(Builder& b) {
  for (int i = 1; i < b.n(); ++i)
    b.chain("inverse-pair", {b.s(i) * b.si(i), b.one(), b.si(i) * b.s(i)});
}

void braid(Builder& b) {
  for (int i = 1; i < b.n(); ++i) {
    for (int j = i + 2; j < b.n(); ++j)
      b.add("far-commute", b.s(i) * b.s(j), b.s(j) * b.s(i));
    if (i + 1 < b.n())
      b.add("braid", b.s(i) * b.s(i + 1) * b.s(i),
            b.s(i + 1) * b.s(i) * b.s(i + 1));
  }
}

// Relations in sigma_1 and sigma = s1 ... s_{n-1}.
void braid_two_generator(Builder& b) {
  const Word S = b.big();
  const Word s1 = b.s(1);
  for (int i = 2; 2 * i <= b.n(); ++i) {
    Word conj = S.power(i) * s1 * S.power(-i);
    b.add("two-generator-commute", s1 * conj, conj * s1);
  }
  b.add("two-generator-twist", S.power(b.n()), (S * s1).power(b.n() - 1));
  b.chain("inverse-pair", {S * S.inverse(), b.one(), S.inverse() * S});
}

// Idempotent relations with the single generator eps = eps_1.
void inverse_single_eps(Builder& b, bool symmetric) {
  const Word e = b.e();
  const Word s1 = b.s(1);
  for (int i = 2; i < b.n(); ++i) b.add("eps-commute", e * b.s(i), b.s(i) * e);
  b.chain("eps-crossing", {e * s1 * e, s1 * e * s1 * e, e * s1 * e * s1});
  if (symmetric) {
    b.add("eps-idempotent", e, e * e);
  } else {
    b.chain("eps-idempotent", {e, e * e, e * s1 * s1, s1 * s1 * e});
  }
}

void inverse_balanced(Builder& b) {
  const int n = b.n();
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1)
        b.add("eps-commute", b.e(j) * b.s(i), b.s(i) * b.e(j));
  for (int i = 1; i < n; ++i) {
    b.add("eps-shift", b.e(i) * b.s(i), b.s(i) * b.e(i + 1));
    b.add("eps-shift", b.e(i + 1) * b.s(i), b.s(i) * b.e(i));
  }
  for (int i = 1; i <= n; ++i) b.add("eps-idempotent", b.e(i), b.e(i) * b.e(i));
  for (int i = 1; i < n; ++i) {
    const Word sq = b.s(i) * b.s(i);
    b.chain("eps-absorb-square",
            {b.e(i + 1) * sq, sq * b.e(i + 1), b.e(i + 1)});
    const Word pair = b.e(i) * b.e(i + 1);
    b.chain("eps-pair-absorb", {pair * b.s(i), b.s(i) * pair, pair});
  }
}

void inverse_two_generator(Builder& b) {
  const Word S = b.big();
  const Word s1 = b.s(1);
  const Word e = b.e();
  b.chain("inverse-pair", {s1 * b.si(1), b.one(), b.si(1) * s1});
  for (int i = 1; i <= b.n() - 2; ++i) {
    Word conj = S.power(i) * s1 * S.power(-i);
    b.add("eps-commute", e * conj, conj * e);
  }
  b.chain("eps-crossing", {e * s1 * e, s1 * e * s1 * e, e * s1 * e * s1});
  b.chain("eps-idempotent", {e, e * e, e * s1 * s1, s1 * s1 * e});
}

void sphere_relation(Builder& b) {
  Word w(b.n());
  for (int i = 1; i < b.n() - 1; ++i) w *= b.s(i);
  w *= b.s(b.n() - 1) * b.s(b.n() - 1);
  for (int i = b.n() - 2; i >= 1; --i) w *= b.s(i);
  b.add("sphere", w, b.one());
}

void full_twist_trivial(Builder& b) {
  b.add("full-twist", b.big().power(b.n()), b.one());
}

void sphere_mcg_two_generator(Builder& b) {
  b.add("rotation-order", b.big().power(b.n()), b.one());
  b.add("complement-twist", (b.si(1) * b.big()).power(b.n() - 1), b.one());
}

void pure_braid(Builder& b) {
  const int n = b.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          // disjoint (j < k) or nested (k < l < j)
          if (j < k || l < j)
            b.add("pure-commute", b.q(i, j) * b.q(k, l), b.q(k, l) * b.q(i, j));
        }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const Word a = b.q(i, j), c = b.q(i, k), d = b.q(j, k);
        b.add("pure-triangle", a * c * d, c * d * a);
        b.add("pure-triangle", c * d * a, d * a * c);
        for (int l = k + 1; l <= n; ++l) {
          const Word f = b.q(j, l);
          b.add("pure-conjugate", c * d * f * d.inverse(),
                d * f * d.inverse() * c);
        }
      }
}

}  // namespace

std::string_view to_string(Presentation p) {
  for (const auto& [value, name] : kNames)
    if (value == p) return name;
  return "unknown";
}

Presentation parse_presentation(std::string_view name) {
  for (const auto& [value, text] : kNames)
    if (text == name) return value;
  throw std::invalid_argument("unknown presentation '" + std::string(name) + "'");
}

std::vector<Presentation> all_presentations() {
  std::vector<Presentation> out;
  for (const auto& entry : kNames) out.push_back(entry.first);
  return out;
}

RelationSet relations(Presentation presentation, int rank) {
  if (rank < 2) throw std::invalid_argument("relations need rank >= 2");
  RelationSet set{presentation, rank, {}};
  Builder b(rank, set.pairs);
  switch (presentation) {
    case Presentation::disc_braid:
      braid(b);
      break;
    case Presentation::disc_inverse:
      group_axioms(b);
      braid(b);
      inverse_single_eps(b, false);
      break;
    case Presentation::sphere_braid:
      braid(b);
      sphere_relation(b);
      break;
    case Presentation::sphere_mcg:
      braid(b);
      sphere_relation(b);
      full_twist_trivial(b);
      break;
    case Presentation::sphere_inverse_braid:
      group_axioms(b);
      braid(b);
      sphere_relation(b);
      inverse_single_eps(b, false);
      break;
    case Presentation::sphere_inverse_mcg:
      group_axioms(b);
      braid(b);
      sphere_relation(b);
      full_twist_trivial(b);
      inverse_single_eps(b, false);
      break;
    case Presentation::symmetric_inverse:
      for (int i = 1; i < rank; ++i)
        b.add("involution", b.s(i) * b.s(i), b.one());
      braid(b);
      inverse_single_eps(b, true);
      break;
    case Presentation::braid_two_generator:
      braid_two_generator(b);
      break;
    case Presentation::disc_inverse_balanced:
      group_axioms(b);
      braid(b);
      inverse_balanced(b);
      break;
    case Presentation::disc_inverse_two_generator:
      braid_two_generator(b);
      inverse_two_generator(b);
      break;
    case Presentation::sphere_mcg_two_generator:
      braid_two_generator(b);
      sphere_mcg_two_generator(b);
      break;
    case Presentation::sphere_inverse_mcg_balanced:
      group_axioms(b);
      braid(b);
      sphere_relation(b);
      full_twist_trivial(b);
      inverse_balanced(b);
      break;
    case Presentation::sphere_inverse_mcg_two_generator:
      braid_two_generator(b);
      inverse_two_generator(b);
      sphere_mcg_two_generator(b);
      break;
    case Presentation::pure_braid:
      pure_braid(b);
      break;
  }
  return set;
}

bool RelationReport::all_passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const RelationOutcome& o) { return o.passed; });
}

std::size_t RelationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(),
                    [](const RelationOutcome& o) { return !o.passed; }));
}

RelationReport check_relations(const RelationSet& rels, const WordEquality& eq) {
  RelationReport report{rels.presentation, rels.rank, {}};
  report.outcomes.reserve(rels.pairs.size());
  for (const Relation& r : rels.pairs)
    report.outcomes.push_back(
        {r.family, to_string(r.lhs), to_string(r.rhs), eq(r.lhs, r.rhs)});
  return report;
}

}  // namespace imcm
