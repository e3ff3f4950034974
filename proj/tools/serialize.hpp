#pragma once

#include "repring/chartab/chartable.hpp"
#include "repring/exact/cyclotomic.hpp"
#include "repring/exact/matrix.hpp"
#include "repring/exact/qmodz.hpp"
#include "repring/groups/group.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace repring::cli {

/// Int as a JSON number when it fits in 64 bits, else a decimal string.
nlohmann::json json_int(const Int& v);

/// Cyclotomic as {"coeffs": [[exponent, "num/den"], ...], "order": n} with
/// coefficients sorted by exponent.
nlohmann::json json_cyclotomic(const Cyclotomic& x);

nlohmann::json json_int_matrix(const Mat<Int>& m);
nlohmann::json json_int_vector(const std::vector<Int>& v);
nlohmann::json json_qmodz_matrix(const Mat<QmodZ>& m);

/// Group as {"labels": [...], "mul": [[...]], "name": str, "order": n}.
nlohmann::json json_group(const GroupTable& g);

/// Character table exactly in the documented output shape:
/// {"group": name, "classes": [{"order", "rep", "size"}, ...],
///  "irreducibles": [{"degree", "values": [...]}, ...]}.
nlohmann::json json_table(const CharacterTable& t);

/// Loads a group from either supported file shape:
///   {"name", "order", "mul", "labels"?}  — explicit multiplication table
///   {"name", "degree", "perm_gens"}      — permutation generators
/// Throws std::invalid_argument on malformed content and
/// std::runtime_error("order exceeds limit") past the cap.
GroupPtr group_from_json(const nlohmann::json& j, std::size_t limit_order);

}  // namespace repring::cli
