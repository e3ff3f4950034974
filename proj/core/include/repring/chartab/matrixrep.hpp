#pragma once

#include "repring/chartab/chartable.hpp"
#include "repring/exact/cyclotomic.hpp"
#include "repring/exact/matrix.hpp"
#include "repring/groups/extension.hpp"
#include "repring/groups/group.hpp"

#include <cstddef>
#include <vector>

namespace repring {

/// An explicit matrix representation: one exact cyclotomic matrix per group
/// element, indexed like the group.
struct MatrixRep {
  GroupPtr group;
  std::size_t dimension = 0;
  std::vector<Mat<Cyclotomic>> images;  // one per element
};

/// The 1x1 representation carrying an entry of the character table. Throws
/// std::invalid_argument("not one-dimensional") when the chosen row has
/// degree greater than one.
MatrixRep one_dimensional_rep(const CharacterTable& t, std::size_t index);

/// Monomial representation induced from a character of a normal abelian
/// subgroup. The character is given by its exponents `phi` against the
/// generators of ext.a_structure; the dimension equals the quotient order,
/// and the coset transversal is ext.section.
MatrixRep induced_rep(const ExtensionData& ext,
                      const std::vector<long long>& phi);

/// Checks the homomorphism property on every pair of elements and that the
/// identity maps to the identity matrix.
bool is_representation(const MatrixRep& rep);

/// Trace character of a representation on the given conjugacy classes
/// (which must belong to rep.group).
ClassFunction character_of(const MatrixRep& rep, const ConjPtr& classes);

}  // namespace repring
