#include "repring/chartab/classfun.hpp"

#include <stdexcept>

namespace repring {

namespace {

void require_same_classes(const ClassFunction& a, const ClassFunction& b) {
  if (a.classes == b.classes &&
      a.values.size() == b.values.size()) {
    return;
  }
  if (a.classes && b.classes && a.classes->group == b.classes->group &&
      a.classes->classes == b.classes->classes) {
    return;
  }
  throw std::invalid_argument("class function mismatch");
}

}  // namespace

ClassFunction ClassFunction::operator+(const ClassFunction& other) const {
  require_same_classes(*this, other);
  ClassFunction out{classes, values};
  for (std::size_t c = 0; c < values.size(); ++c) {
    out.values[c] += other.values[c];
  }
  return out;
}

ClassFunction ClassFunction::operator-(const ClassFunction& other) const {
  require_same_classes(*this, other);
  ClassFunction out{classes, values};
  for (std::size_t c = 0; c < values.size(); ++c) {
    out.values[c] -= other.values[c];
  }
  return out;
}

ClassFunction ClassFunction::operator*(const ClassFunction& other) const {
  require_same_classes(*this, other);
  ClassFunction out{classes, values};
  for (std::size_t c = 0; c < values.size(); ++c) {
    out.values[c] *= other.values[c];
  }
  return out;
}

ClassFunction ClassFunction::scaled(const Cyclotomic& factor) const {
  ClassFunction out{classes, values};
  for (auto& v : out.values) v *= factor;
  return out;
}

bool ClassFunction::operator==(const ClassFunction& other) const {
  if (values.size() != other.values.size()) return false;
  for (std::size_t c = 0; c < values.size(); ++c) {
    if (values[c] != other.values[c]) return false;
  }
  return true;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  const auto& conj = *a.classes;
  Cyclotomic sum;
  for (std::size_t c = 0; c < a.values.size(); ++c) {
    const Cyclotomic term = a.values[c] * conjugate(b.values[c]);
    sum += term * Cyclotomic(Rational(conj.classes[c].size()));
  }
  return sum * Cyclotomic(Rational(1, conj.group->order));
}

ClassFunction restrict_function(const ClassFunction& f,
                                const SubgroupTable& h) {
  ClassFunction out;
  out.classes = conjugacy_data(h.table);
  out.values.reserve(out.classes->num_classes());
  for (std::size_t c = 0; c < out.classes->num_classes(); ++c) {
    const std::size_t parent_elem =
        h.elements[out.classes->representatives[c]];
    out.values.push_back(f.at_element(parent_elem));
  }
  return out;
}

}  // namespace repring
