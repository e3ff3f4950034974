#pragma once

#include "repring/groups/group.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace repring {

/// Conjugacy classes of a finite group, in canonical order: classes are
/// sorted by their smallest element index, so the identity class is always
/// class 0; elements within a class are sorted ascending.
struct ConjugacyData {
  GroupPtr group;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;           // element -> class index
  std::vector<std::size_t> representatives;    // smallest element per class
  std::vector<std::size_t> centralizer_orders;
  std::vector<std::size_t> element_orders;     // per element
  std::size_t exponent = 1;                    // lcm of element orders

  std::size_t num_classes() const { return classes.size(); }

  /// Class containing rep^k for the class representative (well defined:
  /// conjugation commutes with powers). Accepts any integer k.
  std::size_t power_class(std::size_t cls, long long k) const;

  /// Class containing the inverses of a class.
  std::size_t inverse_class(std::size_t cls) const;
};

using ConjPtr = std::shared_ptr<const ConjugacyData>;

ConjPtr conjugacy_data(const GroupPtr& g);

}  // namespace repring
