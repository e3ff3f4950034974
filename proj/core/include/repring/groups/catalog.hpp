#pragma once

#include "repring/groups/group.hpp"

#include <string>
#include <vector>

namespace repring {

/// Builds a group from a case-insensitive preset name: C<n> (cyclic),
/// Klein, D<even order> (dihedral), Q8, S3, or any 'x'-separated direct
/// product of those, e.g. "C2xC4" or "D8xC2". Throws
/// std::invalid_argument("unknown group name") for unparseable names and
/// std::runtime_error("order exceeds limit") when the result would be
/// larger than limit_order.
GroupPtr catalog_group(const std::string& name,
                       std::size_t limit_order = 10000);

/// The named entries exercised by the verification suite.
const std::vector<std::string>& catalog_names();

}  // namespace repring
