#include "repring/lambdaring/ringinv.hpp"

#include "repring/lambdaring/adams.hpp"

#include <stdexcept>
#include <vector>

namespace repring {

Int order_from_ring(const CharacterTable& t) {
  const ConjPtr& conj = t.classes;
  Int best = 0;
  for (std::size_t c = 0; c < conj->num_classes(); ++c) {
    const std::size_t cinv = conj->inverse_class(c);
    bool all_rational = true;
    Int denom_lcm = 1;
    for (std::size_t j = 0; j < t.size() && all_rational; ++j) {
      const Cyclotomic& v = t.irreducibles[j].values[cinv];
      if (!v.is_rational()) {
        all_rational = false;
        break;
      }
      const Rational coeff =
          v.as_rational() / Rational(conj->centralizer_orders[c]);
      denom_lcm = lcm_int(denom_lcm, rational_den(coeff));
    }
    if (all_rational && denom_lcm > best) best = denom_lcm;
  }
  return best;
}

long long exponent_from_ring(const CharacterTable& t) {
  long long window = 0;
  for (long d : t.degrees) window += static_cast<long long>(d) * d;

  std::vector<Mat<Int>> mats;  // mats[k-1] holds the k-th matrix
  mats.reserve(static_cast<std::size_t>(2 * window));
  for (long long k = 1; k <= 2 * window; ++k) {
    mats.push_back(adams_matrix(t, k));
  }

  for (long long f = 1; f <= window; ++f) {
    bool periodic = true;
    for (long long k = 1; k <= window && periodic; ++k) {
      periodic = (mats[static_cast<std::size_t>(k + f - 1)] ==
                  mats[static_cast<std::size_t>(k - 1)]);
    }
    if (periodic) return f;
  }
  throw std::logic_error("exponent recovery failed");
}

}  // namespace repring
