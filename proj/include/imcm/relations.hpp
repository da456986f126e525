#pragma once

// Defining relations of the presentations handled by the library, as data.
// Every equality engine is certified against these lists; nothing here
// rewrites words.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "imcm/gen_words.hpp"

namespace imcm {

enum class Presentation {
  // The seven principal flavors.
  disc_braid,            // Artin braid relations
  disc_inverse,          // braid relations + idempotent eps = eps_1 relations
  sphere_braid,          // braid relations + sphere relation
  sphere_mcg,            // sphere braid relations + full twist is trivial
  sphere_inverse_braid,  // sphere braid + inverse braid relations
  sphere_inverse_mcg,    // sphere mcg + inverse braid relations
  symmetric_inverse,     // involutive sigma_i + idempotent relations
  // Alternative presentations of the same objects.
  braid_two_generator,           // sigma_1 and sigma = s1 ... s_{n-1}
  disc_inverse_balanced,         // eps_1 ... eps_n as generators
  disc_inverse_two_generator,    // sigma_1, sigma, eps
  sphere_mcg_two_generator,      // sigma_1, sigma with sigma^n = 1
  sphere_inverse_mcg_balanced,   // sphere mcg + balanced idempotent relations
  sphere_inverse_mcg_two_generator,
  pure_braid,                    // relations among the s_{i,j}
};

std::string_view to_string(Presentation p);
/// Accepts the names printed by to_string (e.g. "sphere-inverse-mcg").
Presentation parse_presentation(std::string_view name);
std::vector<Presentation> all_presentations();

struct Relation {
  std::string family;
  Word lhs;
  Word rhs;
};

struct RelationSet {
  Presentation presentation = Presentation::disc_braid;
  int rank = 0;
  std::vector<Relation> pairs;
};

/// Requires rank >= 2.
RelationSet relations(Presentation presentation, int rank);

using WordEquality = std::function<bool(const Word&, const Word&)>;

struct RelationOutcome {
  std::string family;
  std::string lhs;
  std::string rhs;
  bool passed = false;
};

struct RelationReport {
  Presentation presentation = Presentation::disc_braid;
  int rank = 0;
  std::vector<RelationOutcome> outcomes;

  bool all_passed() const;
  std::size_t failures() const;
};

RelationReport check_relations(const RelationSet& rels, const WordEquality& eq);

}  // namespace imcm
