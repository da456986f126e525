#include "imcm/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace imcm {

std::vector<PartialMCElement> normalize_batch_serial(const std::vector<Word>& words, Flavor flavor) {
  std::vector<PartialMCElement> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(normalize(w, flavor));
  return out;
}

std::vector<PartialMCElement> normalize_batch_parallel(const std::vector<Word>& words,
                                                       Flavor flavor) {
  std::vector<PartialMCElement> out(words.size());
  const auto count = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = normalize(words[static_cast<std::size_t>(i)], flavor);
  return out;
}

std::vector<PartialMCElement> product_table_serial(const std::vector<PartialMCElement>& elements) {
  std::vector<PartialMCElement> out;
  out.reserve(elements.size() * elements.size());
  for (const auto& a : elements)
    for (const auto& b : elements) out.push_back(multiply(a, b));
  return out;
}

std::vector<PartialMCElement> product_table_parallel(
    const std::vector<PartialMCElement>& elements) {
  const std::size_t n = elements.size();
  std::vector<PartialMCElement> out(n * n);
  const auto cells = static_cast<std::ptrdiff_t>(n * n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t c = 0; c < cells; ++c) {
    const auto cell = static_cast<std::size_t>(c);
    out[cell] = multiply(elements[cell / n], elements[cell % n]);
  }
  return out;
}

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace imcm
