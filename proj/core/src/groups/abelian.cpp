#include "repring/groups/abelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace repring {

AbelianStructure abelian_structure(const SubgroupTable& h) {
  const GroupPtr local = h.table;
  const std::size_t n = local->order;
  std::vector<std::size_t> everything(n);
  for (std::size_t i = 0; i < n; ++i) everything[i] = i;
  if (!is_abelian_subset(*local, everything)) {
    throw std::invalid_argument("not abelian");
  }

  const auto subs = all_subgroups(local);

  // Split off a maximal-order cyclic factor until only the identity is
  // left. Extraction order gives descending factors; the stored convention
  // is ascending divisibility, so both lists get reversed at the end.
  std::vector<std::size_t> current = everything;
  std::vector<std::size_t> gens_desc;
  std::vector<std::size_t> factors_desc;
  while (current.size() > 1) {
    std::size_t best = 0, best_ord = 1;
    for (std::size_t idx : current) {
      const std::size_t ord = element_order(*local, idx);
      if (ord > best_ord) {
        best = idx;
        best_ord = ord;
      }
    }
    const auto t = closure(*local, {best});
    const std::size_t want = current.size() / best_ord;
    const std::vector<std::size_t>* chosen = nullptr;
    for (const auto& b : subs) {
      if (b.size() != want) continue;
      if (!std::includes(current.begin(), current.end(), b.begin(),
                         b.end())) {
        continue;
      }
      bool trivial_meet = true;
      for (std::size_t e : b) {
        if (e != 0 && std::binary_search(t.begin(), t.end(), e)) {
          trivial_meet = false;
          break;
        }
      }
      // Size and trivial intersection force b * <x> to be all of current.
      if (trivial_meet) {
        chosen = &b;
        break;
      }
    }
    if (!chosen) throw std::logic_error("complement search failed");
    gens_desc.push_back(best);
    factors_desc.push_back(best_ord);
    current = *chosen;
  }

  AbelianStructure out;
  out.subgroup = h;
  out.generators.assign(gens_desc.rbegin(), gens_desc.rend());
  out.invariant_factors.assign(factors_desc.rbegin(), factors_desc.rend());

  // Enumerate generator exponent tuples (last coordinate fastest) and
  // record the coordinates of each element; the map must be a bijection.
  const std::size_t m = out.generators.size();
  out.coords.assign(n, {});
  std::vector<bool> hit(n, false);
  std::vector<std::size_t> exps(m, 0);
  while (true) {
    std::size_t elem = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t rep = 0; rep < exps[i]; ++rep) {
        elem = local->mul[elem][out.generators[i]];
      }
    }
    if (hit[elem]) throw std::logic_error("coordinate map not injective");
    hit[elem] = true;
    out.coords[elem] = exps;
    // Increment mixed-radix counter, last index fastest.
    bool done = (m == 0);
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (++exps[pos] < out.invariant_factors[pos]) break;
      exps[pos] = 0;
      if (pos == 0) done = true;  // carried past the leading digit
    }
    if (done) break;
  }
  for (bool h2 : hit) {
    if (!h2) throw std::logic_error("coordinate map not surjective");
  }
  return out;
}

QmodZ character_eval(const AbelianStructure& a,
                     const std::vector<long long>& phi,
                     std::size_t local_element) {
  if (phi.size() != a.rank()) {
    throw std::invalid_argument("character exponent count mismatch");
  }
  QmodZ acc;
  const auto& coords = a.coords[local_element];
  for (std::size_t i = 0; i < a.rank(); ++i) {
    const long long num =
        phi[i] * static_cast<long long>(coords[i]);
    acc = acc + QmodZ::of(num, static_cast<long long>(a.invariant_factors[i]));
  }
  return acc;
}

}  // namespace repring
