#pragma once

#include "repring/groups/abelian.hpp"

#include <cstddef>
#include <vector>

namespace repring {

/// The character group of a finite abelian group, enumerated canonically.
///
/// Characters are stored as exponent vectors against the invariant-factor
/// generators: the character with exponents (e_1, ..., e_m) sends a local
/// element with coordinates (c_1, ..., c_m) to sum of e_i * c_i / d_i in
/// Q/Z. The enumeration runs in mixed radix over the invariant factors with
/// the last coordinate varying fastest, so index 0 is the trivial
/// character.
struct DualGroup {
  AbelianStructure structure;
  std::vector<std::vector<long long>> characters;

  std::size_t size() const { return characters.size(); }

  /// Value of character phi at a local element of the underlying subgroup.
  QmodZ eval(std::size_t phi, std::size_t local_element) const;

  /// Canonical index of the character with the given exponent vector
  /// (entries are reduced modulo the invariant factors).
  std::size_t index_of(const std::vector<long long>& exponents) const;

  /// Index of the product character phi * psi.
  std::size_t multiply(std::size_t phi, std::size_t psi) const;

  /// Index of the inverse character.
  std::size_t inverse(std::size_t phi) const;

  /// Index of phi^k (k may be negative or zero).
  std::size_t power(std::size_t phi, long long k) const;

  /// Additive order of the character in the dual group.
  long long character_order(std::size_t phi) const;
};

/// Enumerates the full character group of the given abelian structure.
DualGroup dual_group(AbelianStructure structure);

}  // namespace repring
