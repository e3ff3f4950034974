#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace repring {

/// A finite group given by its full multiplication table. The identity is
/// always stored at index 0 (constructors relabel if necessary).
struct GroupTable {
  std::string name;
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> mul;
  std::vector<std::size_t> inv;
  std::vector<std::string> labels;

  std::size_t product(std::size_t a, std::size_t b) const { return mul[a][b]; }
  std::size_t inverse(std::size_t a) const { return inv[a]; }
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Validates a multiplication table and wraps it as a group: checks shape,
/// associativity (Light's test against a greedy generating set), the
/// existence of a two-sided identity and of inverses. Throws
/// std::invalid_argument with one of:
///   "malformed multiplication table"
///   "not associative at (i,j,k)"
///   "no identity"
///   "no inverse for i"
/// When `labels` is empty, elements are labeled g0, g1, ....
GroupPtr make_group(std::string name,
                    std::vector<std::vector<std::size_t>> mul,
                    std::vector<std::string> labels = {});

/// The subgroup of Sym(degree) generated by the given permutations
/// (images; gens[g][x] is where generator g sends x). Elements are indexed
/// in breadth-first discovery order starting from the identity, composing
/// generators on the right. Throws std::invalid_argument ("malformed
/// permutation") or std::runtime_error ("order exceeds limit").
GroupPtr from_permutations(std::string name, std::size_t degree,
                           const std::vector<std::vector<std::size_t>>& gens,
                           std::size_t limit = 10000);

/// Multiplicative order of element `a`.
std::size_t element_order(const GroupTable& g, std::size_t a);

/// a^k for any integer k (negative exponents use the inverse).
std::size_t power(const GroupTable& g, std::size_t a, long long k);

/// Direct product; element (a, b) has index a * |B| + b.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

/// Cyclic group of order n, labels 1, g, g^2, ....
GroupPtr cyclic_group(std::size_t n);

/// Elementary abelian group of order 4, labels 1, a, b, ab.
GroupPtr klein_group();

/// Dihedral group of the given (even, >= 2) order. Order 8 uses the
/// presentation by three involutions x, y, q with y central, q x q = x y
/// (indices: x^i y^j q^k at i + 2j + 4k); other orders use rotations and
/// reflections r^i s^j.
GroupPtr dihedral_group(std::size_t order);

/// Quaternion group of order 8: 1, -1, i, -i, j, -j, k, -k.
GroupPtr quaternion_group();

}  // namespace repring
