#pragma once

#include "repring/groups/group.hpp"

#include <cstddef>
#include <vector>

namespace repring {

/// A subgroup presented both as a sorted list of parent element indices and
/// as a standalone group table (local index i corresponds to elements[i];
/// local 0 is the identity).
struct SubgroupTable {
  GroupPtr parent;
  std::vector<std::size_t> elements;         // sorted parent indices
  GroupPtr table;                            // standalone group on the subset
  std::vector<std::size_t> local_of_parent;  // parent index -> local (or npos)

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t local(std::size_t parent_index) const {
    return local_of_parent[parent_index];
  }
};

/// Closure of a subset under multiplication (hence a subgroup for finite
/// groups); always contains the identity.
std::vector<std::size_t> closure(const GroupTable& g,
                                 std::vector<std::size_t> seed);

/// Wraps a multiplicatively closed subset as a SubgroupTable. Throws
/// std::invalid_argument("H not closed") otherwise.
SubgroupTable subgroup_from_elements(const GroupPtr& g,
                                     std::vector<std::size_t> elements);

/// The whole group viewed as a subgroup of itself.
SubgroupTable full_subgroup(const GroupPtr& g);

/// All subgroups as sorted element lists, ordered by (size, lexicographic).
std::vector<std::vector<std::size_t>> all_subgroups(const GroupPtr& g);

/// All normal abelian subgroups (including the trivial one, and the whole
/// group when abelian), ordered by (size, lexicographic).
std::vector<std::vector<std::size_t>> normal_abelian_subgroups(
    const GroupPtr& g);

bool is_normal(const GroupTable& g, const std::vector<std::size_t>& elements);
bool is_abelian_subset(const GroupTable& g,
                       const std::vector<std::size_t>& elements);

/// Elements commuting with everything.
std::vector<std::size_t> center(const GroupTable& g);

}  // namespace repring
