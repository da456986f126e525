#include "imcm/engines.hpp"

#include "imcm/free_rep.hpp"
#include "imcm/inverse_tower.hpp"
#include "imcm/partial_injection.hpp"
#include "imcm/sphere_nf.hpp"

namespace imcm {

namespace {

enum class Engine { free_images, sphere_braid, sphere_mcg, tower_braid, tower_mcg, points };

Engine engine_of(Presentation p) {
  switch (p) {
    case Presentation::sphere_braid: return Engine::sphere_braid;
    case Presentation::sphere_mcg:
    case Presentation::sphere_mcg_two_generator: return Engine::sphere_mcg;
    case Presentation::sphere_inverse_braid: return Engine::tower_braid;
    case Presentation::sphere_inverse_mcg:
    case Presentation::sphere_inverse_mcg_balanced:
    case Presentation::sphere_inverse_mcg_two_generator: return Engine::tower_mcg;
    case Presentation::symmetric_inverse: return Engine::points;
    default: return Engine::free_images;
  }
}

}  // namespace

WordEquality equality_engine(Presentation p) {
  switch (engine_of(p)) {
    case Engine::sphere_braid:
      return [](const Word& a, const Word& b) { return equal_sphere(a, b, SphereFlavor::braid); };
    case Engine::sphere_mcg:
      return [](const Word& a, const Word& b) { return equal_sphere(a, b, SphereFlavor::mcg); };
    case Engine::tower_braid:
      return [](const Word& a, const Word& b) {
        return normalize(a, Flavor::sphere_braid) == normalize(b, Flavor::sphere_braid);
      };
    case Engine::tower_mcg:
      return [](const Word& a, const Word& b) {
        return normalize(a, Flavor::sphere_mcg) == normalize(b, Flavor::sphere_mcg);
      };
    case Engine::points:
      return [](const Word& a, const Word& b) { return tau_of_word(a) == tau_of_word(b); };
    default:
      return [](const Word& a, const Word& b) { return ib_equal_disc(a, b); };
  }
}

std::string_view engine_name(Presentation p) {
  switch (engine_of(p)) {
    case Engine::sphere_braid: return "sphere normal form (braid)";
    case Engine::sphere_mcg: return "sphere normal form (mcg)";
    case Engine::tower_braid: return "partial element normal form (sphere-braid)";
    case Engine::tower_mcg: return "partial element normal form (sphere-mcg)";
    case Engine::points: return "point map";
    default: return "free group images";
  }
}

RelationReport certify(Presentation p, int rank) {
  return check_relations(relations(p, rank), equality_engine(p));
}

}  // namespace imcm
