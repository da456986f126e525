#include "random_words.hpp"

namespace testing {

imcm::Word WordSource::word(int rank, int max_length, double eps_rate) {
  imcm::Word w(rank);
  const int length = uniform(0, max_length);
  for (int i = 0; i < length; ++i) {
    const bool eps = eps_rate > 0 && rank >= 1 && (rank < 2 || coin(eps_rate));
    if (eps) {
      w.push_back(imcm::Letter::eps(uniform(1, rank)));
    } else if (rank >= 2) {
      const int index = uniform(1, rank - 1);
      w.push_back(coin(0.5) ? imcm::Letter::sigma(index) : imcm::Letter::sigma_inv(index));
    }
  }
  return w;
}

imcm::PartialMCElement WordSource::element(int rank, imcm::Flavor flavor, int max_length) {
  return imcm::normalize(word(rank, max_length, 0.15), flavor);
}

imcm::IM11Element WordSource::im11(int max_length) {
  if (coin(0.5)) return imcm::IM11Element::full(braid(3, max_length));
  // Products of the generator images cover a good spread of SL_2(Z).
  return imcm::IM11Element::empty(imcm::rho(braid(3, max_length)));
}

}  // namespace testing
