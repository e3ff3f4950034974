#pragma once

#include "repring/chartab/matrixrep.hpp"
#include "repring/exact/cyclotomic.hpp"
#include "repring/exact/matrix.hpp"

namespace repring {

/// Evaluates trace((a^T kron b^{kron k}) * (I kron P)) by direct
/// enumeration of the tensor basis, where P cyclically permutes the k
/// tensor factors (first factor moves to the end). For square a, b this
/// equals trace(a) * trace(b^k); the function does not use that shortcut.
/// Requires k >= 1 and rows(a) * rows(b)^k <= 4096; throws
/// std::invalid_argument otherwise ("k must be positive" /
/// "dimension cap exceeded" / "cyclic trace: not square").
Cyclotomic cyclic_tensor_trace(const Mat<Cyclotomic>& a,
                               const Mat<Cyclotomic>& b, long k);

/// Trace of the cyclic-rotation operator on the invariants of
/// hom(rho_j, rho_i^{tensor k}), computed as the group average of
/// cyclic_tensor_trace(rho_j(g^{-1}), rho_i(g), k). This equals entry
/// (i, j) of the k-th power-operation matrix, giving a matrix-level route
/// to the same numbers. The same dimension cap applies to
/// dim(rho_j) * dim(rho_i)^k.
Cyclotomic hom_cyclic_trace(const MatrixRep& rho_i, const MatrixRep& rho_j,
                            long k);

}  // namespace repring
