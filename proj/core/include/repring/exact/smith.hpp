#pragma once

#include "repring/exact/matrix.hpp"
#include "repring/exact/qmodz.hpp"
#include "repring/exact/rational.hpp"

#include <optional>
#include <vector>

namespace repring {

/// Smith normal form u * a * v == d with u, v unimodular and d diagonal
/// with nonnegative entries d1 | d2 | ... (zeros trailing).
struct SmithDecomposition {
  Mat<Int> u;
  Mat<Int> v;
  Mat<Int> d;
};

SmithDecomposition smith_normal_form(const Mat<Int>& a);

/// Solves a * x == r over Q/Z, where a is an integer matrix acting on
/// column vectors of Q/Z entries. Returns one solution (free coordinates
/// set to zero) or std::nullopt when no solution exists.
std::optional<std::vector<QmodZ>> solve_mod(const Mat<Int>& a,
                                            const std::vector<QmodZ>& r);

}  // namespace repring
