#include "serialize.hpp"

#include "repring/groups/conjugacy.hpp"

#include <limits>
#include <stdexcept>

namespace repring::cli {

nlohmann::json json_int(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return to_int64(v);
  return v.str();
}

nlohmann::json json_cyclotomic(const Cyclotomic& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [exponent, value] : x.coeffs()) {
    coeffs.push_back({exponent, format_rational(value)});
  }
  return {{"coeffs", std::move(coeffs)}, {"order", x.order()}};
}

nlohmann::json json_int_matrix(const Mat<Int>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json json_int_vector(const std::vector<Int>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(json_int(x));
  return out;
}

nlohmann::json json_qmodz_matrix(const Mat<QmodZ>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(format_qmodz(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json json_group(const GroupTable& g) {
  return {{"labels", g.labels},
          {"mul", g.mul},
          {"name", g.name},
          {"order", g.order}};
}

nlohmann::json json_table(const CharacterTable& t) {
  const ConjugacyData& c = *t.classes;
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const std::size_t rep = c.representatives[i];
    classes.push_back({{"order", c.element_orders[rep]},
                       {"rep", c.group->labels[rep]},
                       {"size", c.classes[i].size()}});
  }
  nlohmann::json irreducibles = nlohmann::json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : t.irreducibles[i].values) {
      values.push_back(json_cyclotomic(v));
    }
    irreducibles.push_back(
        {{"degree", t.degrees[i]}, {"values", std::move(values)}});
  }
  return {{"classes", std::move(classes)},
          {"group", c.group->name},
          {"irreducibles", std::move(irreducibles)}};
}

GroupPtr group_from_json(const nlohmann::json& j, std::size_t limit_order) {
  if (!j.is_object() || !j.contains("name")) {
    throw std::invalid_argument("group file: missing \"name\"");
  }
  const std::string name = j.at("name").get<std::string>();

  if (j.contains("perm_gens")) {
    const auto degree = j.at("degree").get<std::size_t>();
    const auto gens =
        j.at("perm_gens").get<std::vector<std::vector<std::size_t>>>();
    return from_permutations(name, degree, gens, limit_order);
  }

  if (!j.contains("mul")) {
    throw std::invalid_argument(
        "group file: expected \"mul\" or \"perm_gens\"");
  }
  auto mul = j.at("mul").get<std::vector<std::vector<std::size_t>>>();
  if (j.contains("order") &&
      j.at("order").get<std::size_t>() != mul.size()) {
    throw std::invalid_argument(
        "group file: \"order\" disagrees with the table size");
  }
  if (mul.size() > limit_order) {
    throw std::runtime_error("order exceeds limit");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
  }
  return make_group(name, std::move(mul), std::move(labels));
}

}  // namespace repring::cli
