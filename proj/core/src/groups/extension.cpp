#include "repring/groups/extension.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace repring {

ExtensionData make_extension(const GroupPtr& g,
                             std::vector<std::size_t> a_elements) {
  ExtensionData ext;
  ext.g = g;
  ext.a = subgroup_from_elements(g, std::move(a_elements));
  if (!is_normal(*g, ext.a.elements)) {
    throw std::invalid_argument("not normal");
  }
  if (!is_abelian_subset(*g, ext.a.elements)) {
    throw std::invalid_argument("not abelian");
  }
  ext.a_structure = abelian_structure(ext.a);

  // Left cosets xA, keyed by their sorted member list; ordering cosets by
  // smallest member puts the identity coset (which contains 0) first.
  const std::size_t n = g->order;
  std::map<std::size_t, std::vector<std::size_t>> coset_by_min;
  std::vector<std::size_t> coset_min_of(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> coset;
    coset.reserve(ext.a.elements.size());
    for (std::size_t a : ext.a.elements) coset.push_back(g->mul[x][a]);
    std::sort(coset.begin(), coset.end());
    coset_min_of[x] = coset.front();
    coset_by_min.emplace(coset.front(), std::move(coset));
  }
  std::vector<std::size_t> reps;
  reps.reserve(coset_by_min.size());
  for (const auto& [min_elem, members] : coset_by_min) {
    (void)members;
    reps.push_back(min_elem);  // ascending: identity coset first
  }
  const std::size_t q_order = reps.size();
  std::map<std::size_t, std::size_t> index_of_min;
  for (std::size_t i = 0; i < q_order; ++i) index_of_min.emplace(reps[i], i);

  ext.projection.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    ext.projection[x] = index_of_min.at(coset_min_of[x]);
  }
  ext.section = reps;

  std::vector<std::vector<std::size_t>> qmul(q_order,
                                             std::vector<std::size_t>(q_order));
  std::vector<std::string> qlabels(q_order);
  for (std::size_t i = 0; i < q_order; ++i) {
    qlabels[i] = g->labels[reps[i]];
    for (std::size_t j = 0; j < q_order; ++j) {
      qmul[i][j] = ext.projection[g->mul[reps[i]][reps[j]]];
    }
  }
  ext.quotient = make_group(g->name + "/A", std::move(qmul),
                            std::move(qlabels));
  return ext;
}

}  // namespace repring
