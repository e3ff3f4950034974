#include "repring/groups/catalog.hpp"

#include <cctype>
#include <stdexcept>

namespace repring {

namespace {

std::string lowered(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

// Parses the numeric tail of "c<n>" / "d<n>" atoms.
std::size_t numeric_tail(const std::string& atom) {
  if (atom.size() < 2) throw std::invalid_argument("unknown group name");
  std::size_t value = 0;
  for (std::size_t i = 1; i < atom.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(atom[i]))) {
      throw std::invalid_argument("unknown group name");
    }
    value = value * 10 + static_cast<std::size_t>(atom[i] - '0');
    if (value > 1000000) throw std::invalid_argument("unknown group name");
  }
  if (value == 0) throw std::invalid_argument("unknown group name");
  return value;
}

GroupPtr atom_group(const std::string& atom) {
  if (atom == "klein") return klein_group();
  if (atom == "q8") return quaternion_group();
  if (atom == "s3") return from_permutations("S3", 3, {{1, 2, 0}, {1, 0, 2}});
  if (!atom.empty() && atom[0] == 'c') return cyclic_group(numeric_tail(atom));
  if (!atom.empty() && atom[0] == 'd') {
    const std::size_t order = numeric_tail(atom);
    if (order % 2 != 0) throw std::invalid_argument("unknown group name");
    return dihedral_group(order);
  }
  throw std::invalid_argument("unknown group name");
}

}  // namespace

GroupPtr catalog_group(const std::string& name, std::size_t limit_order) {
  const std::string text = lowered(name);
  if (text.empty()) throw std::invalid_argument("unknown group name");

  GroupPtr result;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t split = text.find('x', start);
    const std::string atom = text.substr(
        start, split == std::string::npos ? std::string::npos : split - start);
    if (atom.empty()) throw std::invalid_argument("unknown group name");
    const GroupPtr factor = atom_group(atom);
    result = result ? direct_product(result, factor) : factor;
    if (result->order > limit_order) {
      throw std::runtime_error("order exceeds limit");
    }
    if (split == std::string::npos) break;
    start = split + 1;
  }
  return result;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "C1", "C2",  "C3",  "C4",  "C5",    "C6", "C7",
      "C8", "C9",  "C10", "C11", "C12",   "Klein",
      "D8", "Q8",  "S3",  "C2xC4", "C2xC2xC2", "D8xC2"};
  return names;
}

}  // namespace repring
