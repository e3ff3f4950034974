#pragma once

#include "repring/chartab/chartable.hpp"
#include "repring/exact/rational.hpp"

namespace repring {

/// Recovers the group order from ring data: for every basis evaluation
/// point the primitive-idempotent coefficient vector lies in the
/// irreducible basis with cyclotomic coefficients; over the points where
/// all coefficients are rational, the largest least common multiple of
/// their denominators equals the order (the evaluation at the identity
/// always attains it).
Int order_from_ring(const CharacterTable& t);

/// Recovers the group exponent as the minimal period of the family of
/// power operations: the smallest f >= 1 with psi^{k+f} = psi^k for all
/// k >= 1. The matrices are compared over a window of length sum(degree^2)
/// (= the order), which covers a full period, so the result is exact.
long long exponent_from_ring(const CharacterTable& t);

}  // namespace repring
