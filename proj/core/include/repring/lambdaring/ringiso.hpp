#pragma once

#include "repring/chartab/chartable.hpp"
#include "repring/exact/rational.hpp"

#include <cstddef>
#include <vector>

namespace repring {

/// Structure constants of the representation ring: n[i][j][k] is the
/// multiplicity of irreducible k in the product of irreducibles i and j.
std::vector<std::vector<std::vector<Int>>> structure_constants(
    const CharacterTable& t);

/// All bijections of basis elements (as permutations pi with pi[0] = 0,
/// matching the trivial characters) under which the structure constants of
/// t1 transport to those of t2. Exhaustive search over permutations; the
/// tables must have equal size for a nonempty result.
std::vector<std::vector<std::size_t>> based_ring_isomorphisms(
    const CharacterTable& t1, const CharacterTable& t2);

/// Whether the bijection pi also intertwines the k-th power operations:
/// M1(i, j) == M2(pi[i], pi[j]) for all i, j.
bool commutes_with_adams(const CharacterTable& t1, const CharacterTable& t2,
                         const std::vector<std::size_t>& pi, long long k);

}  // namespace repring
