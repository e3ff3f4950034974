#pragma once

#include "repring/chartab/classfun.hpp"
#include "repring/exact/rational.hpp"
#include "repring/groups/group.hpp"

#include <cstddef>
#include <vector>

namespace repring {

/// The full set of irreducible characters of a finite group, with exact
/// cyclotomic values. Rows are sorted canonically: by degree ascending,
/// then by the value-ordering of compare_values applied class by class
/// (classes in their canonical order); the trivial character is row 0.
struct CharacterTable {
  ConjPtr classes;
  std::vector<ClassFunction> irreducibles;
  std::vector<long> degrees;

  const GroupPtr& group() const { return classes->group; }
  std::size_t size() const { return irreducibles.size(); }
};

/// Exact character table via class-matrix eigenvector computation over a
/// suitable prime field followed by an exact cyclotomic lift. Works for any
/// finite group given by its table. Throws std::runtime_error("splitting
/// failed") only if the eigenspace refinement cannot separate characters
/// (which does not happen for correct group tables).
CharacterTable character_table(const GroupPtr& g);

/// Direct construction for abelian groups from the invariant-factor
/// decomposition; same canonical row order as character_table. Throws
/// std::invalid_argument("not abelian").
CharacterTable abelian_character_table(const GroupPtr& g);

/// Coefficients of f in the basis of irreducibles. Throws
/// std::domain_error("non-integral coefficient ...") when f is not a
/// virtual character.
std::vector<Int> decompose(const CharacterTable& t, const ClassFunction& f);

/// Linear combination of irreducibles with integer coefficients.
ClassFunction combination(const CharacterTable& t,
                          const std::vector<Int>& coeffs);

/// Product in the representation ring: decompose(combination(a) *
/// combination(b)).
std::vector<Int> ring_multiply(const CharacterTable& t,
                               const std::vector<Int>& a,
                               const std::vector<Int>& b);

}  // namespace repring
