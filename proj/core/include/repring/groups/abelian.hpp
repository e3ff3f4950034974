#pragma once

#include "repring/exact/qmodz.hpp"
#include "repring/groups/subgroups.hpp"

#include <cstddef>
#include <vector>

namespace repring {

/// Invariant-factor decomposition of a finite abelian group: local
/// generators g_1, ..., g_m of orders d_1 | d_2 | ... | d_m with every
/// element writing uniquely as a product of generator powers.
struct AbelianStructure {
  SubgroupTable subgroup;
  std::vector<std::size_t> invariant_factors;      // ascending divisibility
  std::vector<std::size_t> generators;             // local element indices
  std::vector<std::vector<std::size_t>> coords;    // local elem -> exponents

  std::size_t rank() const { return invariant_factors.size(); }
  std::size_t order() const { return subgroup.elements.size(); }
};

/// Computes the decomposition by repeatedly splitting off a maximal-order
/// element (deterministic: smallest local index among maximal orders, and
/// the lexicographically first complement). Throws
/// std::invalid_argument("not abelian") for non-abelian input.
AbelianStructure abelian_structure(const SubgroupTable& h);

/// Evaluates the character with the given generator exponents at a local
/// element: sum of phi[i] * coords[i] / d_i in Q/Z.
QmodZ character_eval(const AbelianStructure& a,
                     const std::vector<long long>& phi,
                     std::size_t local_element);

}  // namespace repring
