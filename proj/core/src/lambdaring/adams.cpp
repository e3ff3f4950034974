#include "repring/lambdaring/adams.hpp"

#include <stdexcept>

namespace repring {

Mat<Int> adams_matrix(const CharacterTable& t, long long k) {
  const ConjPtr& conj = t.classes;
  const std::size_t r = t.size();
  Mat<Int> m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    ClassFunction powered;
    powered.classes = conj;
    powered.values.reserve(r);
    for (std::size_t c = 0; c < conj->num_classes(); ++c) {
      powered.values.push_back(
          t.irreducibles[i].values[conj->power_class(c, k)]);
    }
    const auto coeffs = decompose(t, powered);
    for (std::size_t j = 0; j < r; ++j) m(i, j) = coeffs[j];
  }
  return m;
}

std::vector<Int> apply_operation(const Mat<Int>& m,
                                 const std::vector<Int>& coeffs) {
  if (coeffs.size() != m.rows()) {
    throw std::invalid_argument("coefficient count mismatch");
  }
  std::vector<Int> out(m.cols(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[j] += coeffs[i] * m(i, j);
    }
  }
  return out;
}

Int fs_indicator(const CharacterTable& t, long long k, std::size_t j) {
  return adams_matrix(t, k)(j, 0);
}

const Mat<Int>& RepRing::adams(long long k) const {
  auto it = cache_.find(k);
  if (it == cache_.end()) {
    it = cache_.emplace(k, adams_matrix(table_, k)).first;
  }
  return it->second;
}

std::vector<Int> RepRing::psi(long long k, const std::vector<Int>& x) const {
  return apply_operation(adams(k), x);
}

std::vector<Int> RepRing::unit() const {
  std::vector<Int> u(rank(), Int(0));
  u[0] = 1;
  return u;
}

}  // namespace repring
