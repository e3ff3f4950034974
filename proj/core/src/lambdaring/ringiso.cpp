#include "repring/lambdaring/ringiso.hpp"

#include "repring/lambdaring/adams.hpp"

#include <algorithm>
#include <numeric>

namespace repring {

std::vector<std::vector<std::vector<Int>>> structure_constants(
    const CharacterTable& t) {
  const std::size_t r = t.size();
  std::vector<std::vector<std::vector<Int>>> n(
      r, std::vector<std::vector<Int>>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      n[i][j] = decompose(t, t.irreducibles[i] * t.irreducibles[j]);
    }
  }
  return n;
}

std::vector<std::vector<std::size_t>> based_ring_isomorphisms(
    const CharacterTable& t1, const CharacterTable& t2) {
  std::vector<std::vector<std::size_t>> out;
  if (t1.size() != t2.size()) return out;
  const std::size_t r = t1.size();
  const auto n1 = structure_constants(t1);
  const auto n2 = structure_constants(t2);

  std::vector<std::size_t> pi(r);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    if (pi[0] != 0) continue;
    bool match = true;
    for (std::size_t i = 0; i < r && match; ++i) {
      for (std::size_t j = 0; j < r && match; ++j) {
        for (std::size_t k = 0; k < r && match; ++k) {
          match = (n1[i][j][k] == n2[pi[i]][pi[j]][pi[k]]);
        }
      }
    }
    if (match) out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

bool commutes_with_adams(const CharacterTable& t1, const CharacterTable& t2,
                         const std::vector<std::size_t>& pi, long long k) {
  const auto m1 = adams_matrix(t1, k);
  const auto m2 = adams_matrix(t2, k);
  for (std::size_t i = 0; i < t1.size(); ++i) {
    for (std::size_t j = 0; j < t1.size(); ++j) {
      if (m1(i, j) != m2(pi[i], pi[j])) return false;
    }
  }
  return true;
}

}  // namespace repring
