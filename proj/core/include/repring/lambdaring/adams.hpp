#pragma once

#include "repring/chartab/chartable.hpp"
#include "repring/exact/matrix.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace repring {

/// Matrix of the k-th power operation on the representation ring in the
/// basis of irreducible characters: row i is the decomposition of the
/// operation applied to irreducible i, so coefficient vectors transform as
/// c -> c * M. Computed directly from the definition for any integer k
/// (negative k uses inverse powers); no periodicity shortcut is taken.
/// Throws std::domain_error if a coefficient fails to be a rational
/// integer (which cannot happen for a true character table).
Mat<Int> adams_matrix(const CharacterTable& t, long long k);

/// Row-vector action: result_j = sum_i coeffs_i * m(i, j).
std::vector<Int> apply_operation(const Mat<Int>& m,
                                 const std::vector<Int>& coeffs);

/// Coefficient of the trivial character in the k-th power operation applied
/// to irreducible j; for k = 2 this is the classical indicator telling
/// real/complex/quaternionic type (+1/0/-1) apart.
Int fs_indicator(const CharacterTable& t, long long k, std::size_t j);

/// A representation ring with cached power-operation matrices and the
/// derived exterior-power operations.
class RepRing {
 public:
  explicit RepRing(CharacterTable table) : table_(std::move(table)) {}

  const CharacterTable& table() const { return table_; }
  std::size_t rank() const { return table_.size(); }

  /// Cached power-operation matrix for any integer k.
  const Mat<Int>& adams(long long k) const;

  /// k-th power operation applied to a coefficient vector.
  std::vector<Int> psi(long long k, const std::vector<Int>& x) const;

  /// n-th exterior-power operation via the Newton recursion
  ///   n * lambda^n(x) = sum_{i=1}^{n} (-1)^{i-1} lambda^{n-i}(x) * psi^i(x).
  /// Throws std::domain_error("non-integral lambda coefficient") if the
  /// division fails (which cannot happen for genuine virtual characters).
  std::vector<Int> lambda(long n, const std::vector<Int>& x) const;

  /// Coefficient vector of the unit (the trivial character).
  std::vector<Int> unit() const;

 private:
  CharacterTable table_;
  mutable std::map<long long, Mat<Int>> cache_;
};

}  // namespace repring
