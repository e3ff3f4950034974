#pragma once

#include "repring/groups/abelian.hpp"
#include "repring/groups/subgroups.hpp"

#include <cstddef>
#include <vector>

namespace repring {

/// A group presented as an extension 1 -> A -> G -> Q -> 1 with A normal
/// abelian: the subgroup with its invariant-factor structure, the quotient
/// group, and a section choosing one representative per coset (the smallest
/// element index; the identity coset gets the identity).
struct ExtensionData {
  GroupPtr g;
  SubgroupTable a;
  AbelianStructure a_structure;
  GroupPtr quotient;
  std::vector<std::size_t> section;     // quotient index -> parent element
  std::vector<std::size_t> projection;  // parent element -> quotient index
};

/// Builds the extension data for a normal abelian subgroup given by parent
/// element indices. Throws std::invalid_argument("not normal") or
/// ("not abelian").
ExtensionData make_extension(const GroupPtr& g,
                             std::vector<std::size_t> a_elements);

}  // namespace repring
