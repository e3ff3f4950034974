#include "repring/groups/conjugacy.hpp"

#include <algorithm>
#include <numeric>

namespace repring {

std::size_t ConjugacyData::power_class(std::size_t cls, long long k) const {
  return class_of[power(*group, representatives[cls], k)];
}

std::size_t ConjugacyData::inverse_class(std::size_t cls) const {
  return class_of[group->inverse(representatives[cls])];
}

ConjPtr conjugacy_data(const GroupPtr& g) {
  const std::size_t n = g->order;
  auto data = std::make_shared<ConjugacyData>();
  data->group = g;
  data->class_of.assign(n, n);
  data->element_orders.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    data->element_orders[i] = element_order(*g, i);
  }
  // Scanning elements in ascending order makes classes sorted by their
  // minimum member, with the identity class first.
  for (std::size_t i = 0; i < n; ++i) {
    if (data->class_of[i] != n) continue;
    const std::size_t cls = data->classes.size();
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t c = g->mul[g->mul[x][i]][g->inv[x]];
      if (data->class_of[c] == n) {
        data->class_of[c] = cls;
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    data->representatives.push_back(members.front());
    data->centralizer_orders.push_back(n / members.size());
    data->classes.push_back(std::move(members));
  }
  std::size_t exp = 1;
  for (std::size_t i = 0; i < n; ++i) {
    exp = std::lcm(exp, data->element_orders[i]);
  }
  data->exponent = exp;
  return data;
}

}  // namespace repring
