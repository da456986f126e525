#pragma once

// Batch kernels. Each has a plain serial version kept as the reference the
// OpenMP version is tested against; results are identical and in the same
// order.

#include <vector>

#include "imcm/gen_words.hpp"
#include "imcm/inverse_tower.hpp"

namespace imcm {

std::vector<PartialMCElement> normalize_batch_serial(const std::vector<Word>& words, Flavor flavor);
std::vector<PartialMCElement> normalize_batch_parallel(const std::vector<Word>& words,
                                                       Flavor flavor);

/// All products a * b, row-major.
std::vector<PartialMCElement> product_table_serial(const std::vector<PartialMCElement>& elements);
std::vector<PartialMCElement> product_table_parallel(
    const std::vector<PartialMCElement>& elements);

/// Worker threads the parallel kernels would use; 1 without OpenMP.
int parallel_threads();

}  // namespace imcm
