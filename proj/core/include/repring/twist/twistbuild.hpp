#pragma once

#include "repring/chartab/chartable.hpp"
#include "repring/chartab/classfun.hpp"
#include "repring/twist/cocycle.hpp"

#include <cstddef>
#include <vector>

namespace repring {

/// A complete twist of a group G built from a 2-cocycle on the character
/// group of a normal abelian subgroup A: the solved 1-cochain family z
/// (one per quotient element, normalized to vanish on the fixed characters
/// of that element), the induced A-valued 2-cocycle b on the quotient, and
/// the twisted group G_b living on the same underlying set as G.
struct TwistData {
  ExtensionData ext;
  DualGroup dual;
  QAction action;
  Mat<QmodZ> alpha;
  std::vector<std::vector<QmodZ>> z;        // [quotient][character]
  std::vector<std::vector<std::size_t>> b;  // [p][q] -> parent element of A
  GroupPtr twisted;
};

/// Solves z(q) + q-shifted z(q) coboundary equations: for each quotient
/// element q, finds z with z(phi) + z(psi) - z(phi psi) =
/// (q.alpha - alpha)(phi, psi) on all pairs, then normalizes z to vanish
/// on the characters fixed by q. Throws std::runtime_error("coboundary
/// system unsolvable") when no solution exists.
std::vector<std::vector<QmodZ>> solve_z(const ExtensionData& ext,
                                        const DualGroup& dual,
                                        const QAction& action,
                                        const Mat<QmodZ>& alpha);

/// The A-valued 2-cocycle b(p, q) determined by
///   b(p, q)(phi) = z(pq)(phi) - z(p)(phi) - z(q)(p^{-1} phi);
/// each such function must be a character of the dual group and is returned
/// as the matching parent element of A. Throws
/// std::invalid_argument("not a character") or ("no matching element").
std::vector<std::vector<std::size_t>> cocycle_b(
    const ExtensionData& ext, const DualGroup& dual, const QAction& action,
    const std::vector<std::vector<QmodZ>>& z);

/// The group with multiplication g *_b h = b(gbar, hbar) g h on the same
/// underlying set and labels as the original; fully validated.
GroupPtr twisted_group(const ExtensionData& ext,
                       const std::vector<std::vector<std::size_t>>& b);

/// Runs the full pipeline: validates alpha (cocycle identity, invariant
/// class), solves and normalizes z, derives b, builds the twisted group.
TwistData make_twist(ExtensionData ext, Mat<QmodZ> alpha);

/// Same pipeline with a caller-supplied z family, which is validated
/// against the coboundary equations and the normalization convention.
TwistData make_twist_with_z(ExtensionData ext, Mat<QmodZ> alpha,
                            std::vector<std::vector<QmodZ>> z);

/// The twisted character of chi as a function on the underlying set:
/// for each element g, sums the z-corrected isotypic traces over the
/// characters of A fixed by the coset of g.
std::vector<Cyclotomic> twisted_character(const TwistData& twist,
                                          const ClassFunction& chi);

/// k-th power of g under the twisted multiplication (k >= 0).
std::size_t twisted_power(const TwistData& twist, std::size_t g, long long k);

/// The element d of A with (twisted k-th power of g) = d * g^k in the
/// original group, returned as a parent element index.
std::size_t power_discrepancy(const TwistData& twist, std::size_t g,
                              long long k);

/// Outcome of comparing one Adams-operation matrix across two character
/// tables whose irreducibles agree pointwise as functions on a shared
/// underlying set.
struct AdamsComparison {
  std::vector<std::size_t> matching;  // row of `original` -> row of `other`
  bool equal = false;
  Mat<Int> difference;                // original minus matched other
};

/// Matches irreducibles of the two tables by pointwise equality on the
/// underlying set and compares the k-th Adams matrices under that
/// matching. Throws std::runtime_error("no character matching") when the
/// tables do not correspond.
AdamsComparison compare_adams(const CharacterTable& original,
                              const CharacterTable& other, long long k);

/// Adams matrix of an abelian group's table twisted by a symmetry pairing:
/// row phi maps to phi^k with sign given by (k - 1) * s(phi, phi). The
/// pairing is indexed by table rows and must be alternating and
/// bi-additive, which forces the result to coincide with the plain Adams
/// matrix.
Mat<Int> twisted_adams_abelian(const CharacterTable& table,
                               const Mat<QmodZ>& pairing, long long k);

}  // namespace repring
