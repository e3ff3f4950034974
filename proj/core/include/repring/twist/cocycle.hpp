#pragma once

#include "repring/exact/matrix.hpp"
#include "repring/exact/qmodz.hpp"
#include "repring/groups/extension.hpp"
#include "repring/twist/dualgroup.hpp"

#include <cstddef>
#include <vector>

namespace repring {

/// Conjugation action of the quotient Q on the normal abelian subgroup A
/// and the induced action on the character group of A.
///
/// on_subgroup[q] permutes local elements of A (a -> t a t^{-1} for any
/// representative t of the coset q); on_dual[q] permutes character indices
/// by (q . phi)(a) = phi(q^{-1} a).
struct QAction {
  std::vector<std::vector<std::size_t>> on_subgroup;
  std::vector<std::vector<std::size_t>> on_dual;
};

/// Builds the quotient action for an extension; the dual group must belong
/// to the same abelian structure.
QAction q_action(const ExtensionData& ext, const DualGroup& dual);

/// Checks the 2-cocycle identity
///   alpha(phi, psi) + alpha(phi psi, chi) = alpha(psi, chi) + alpha(phi, psi chi)
/// on every triple of characters.
bool is_cocycle(const DualGroup& dual, const Mat<QmodZ>& alpha);

/// Checks bi-additivity of a pairing table in both arguments.
bool is_bi_additive(const DualGroup& dual, const Mat<QmodZ>& s);

/// Checks that the diagonal of a pairing vanishes.
bool is_alternating(const DualGroup& dual, const Mat<QmodZ>& s);

/// The skew form s(phi, psi) = alpha(phi, psi) - alpha(psi, phi): the
/// invariant that classifies alpha up to coboundary.
Mat<QmodZ> skew(const Mat<QmodZ>& alpha);

/// Reindexes a table by a permutation of characters applied to both
/// arguments: result(i, j) = table(sigma[i], sigma[j]).
Mat<QmodZ> transport(const Mat<QmodZ>& table,
                     const std::vector<std::size_t>& sigma);

/// True when phi -> s(phi, .) has trivial kernel.
bool is_nondegenerate(const DualGroup& dual, const Mat<QmodZ>& s);

/// True when the skew form of alpha is fixed by every quotient element,
/// i.e. the cohomology class of alpha is Q-invariant.
bool is_invariant_class(const ExtensionData& ext, const DualGroup& dual,
                        const QAction& action, const Mat<QmodZ>& alpha);

/// A 2-cocycle with prescribed skew form, built from a symplectic-style
/// splitting of the dual group into hyperbolic pairs. The input pairing
/// must be alternating, bi-additive and nondegenerate.
Mat<QmodZ> standard_cocycle(const DualGroup& dual, const Mat<QmodZ>& s);

/// One standard cocycle per Q-invariant nondegenerate alternating pairing
/// on the dual of A, in a deterministic order. Requires |A| <= 64.
std::vector<Mat<QmodZ>> enumerate_invariant_nondegenerate(
    const ExtensionData& ext);

}  // namespace repring
