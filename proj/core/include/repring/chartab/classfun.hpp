#pragma once

#include "repring/exact/cyclotomic.hpp"
#include "repring/groups/conjugacy.hpp"
#include "repring/groups/subgroups.hpp"

#include <cstddef>
#include <vector>

namespace repring {

/// A function on conjugacy classes with cyclotomic values.
struct ClassFunction {
  ConjPtr classes;
  std::vector<Cyclotomic> values;  // one per class

  const Cyclotomic& at_class(std::size_t c) const { return values[c]; }
  const Cyclotomic& at_element(std::size_t elem) const {
    return values[classes->class_of[elem]];
  }

  ClassFunction operator+(const ClassFunction& other) const;
  ClassFunction operator-(const ClassFunction& other) const;
  ClassFunction operator*(const ClassFunction& other) const;  // pointwise
  ClassFunction scaled(const Cyclotomic& factor) const;

  bool operator==(const ClassFunction& other) const;
  bool operator!=(const ClassFunction& other) const { return !(*this == other); }
};

/// Hermitian inner product (1/|G|) sum over classes of
/// |C| * a(C) * conj(b(C)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

/// Restriction to a subgroup, as a class function on the subgroup's own
/// conjugacy classes.
ClassFunction restrict_function(const ClassFunction& f,
                                const SubgroupTable& h);

}  // namespace repring
