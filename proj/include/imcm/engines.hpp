#pragma once

// Which decision procedure certifies which presentation.

#include "imcm/relations.hpp"

namespace imcm {

/// Free-group images for the disc presentations and pure braid relations,
/// sphere normal forms for the sphere groups, element normal forms for the
/// inverse monoids over the sphere, and the point map for the symmetric
/// inverse monoid.
WordEquality equality_engine(Presentation p);
std::string_view engine_name(Presentation p);

RelationReport certify(Presentation p, int rank);

}  // namespace imcm
