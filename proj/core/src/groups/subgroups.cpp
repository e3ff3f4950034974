#include "repring/groups/subgroups.hpp"

#include "repring/groups/conjugacy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace repring {

std::vector<std::size_t> closure(const GroupTable& g,
                                 std::vector<std::size_t> seed) {
  std::vector<bool> in(g.order, false);
  std::vector<std::size_t> members = {0};
  in[0] = true;
  for (std::size_t s : seed) {
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
    }
  }
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::size_t p = g.mul[members[head]][members[i]];
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
      const std::size_t q = g.mul[members[i]][members[head]];
      if (!in[q]) {
        in[q] = true;
        members.push_back(q);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

SubgroupTable subgroup_from_elements(const GroupPtr& g,
                                     std::vector<std::size_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (elements.empty() || elements.front() != 0) {
    throw std::invalid_argument("H not closed");
  }
  SubgroupTable sub;
  sub.local_of_parent.assign(g->order, SubgroupTable::npos);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] >= g->order) throw std::invalid_argument("H not closed");
    sub.local_of_parent[elements[i]] = i;
  }
  const std::size_t m = elements.size();
  std::vector<std::vector<std::size_t>> mul(m, std::vector<std::size_t>(m));
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = g->labels[elements[i]];
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t p = g->mul[elements[i]][elements[j]];
      const std::size_t local = sub.local_of_parent[p];
      if (local == SubgroupTable::npos) {
        throw std::invalid_argument("H not closed");
      }
      mul[i][j] = local;
    }
  }
  sub.parent = g;
  sub.elements = std::move(elements);
  sub.table = make_group(g->name + ":sub" + std::to_string(m),
                         std::move(mul), std::move(labels));
  return sub;
}

SubgroupTable full_subgroup(const GroupPtr& g) {
  std::vector<std::size_t> all(g->order);
  for (std::size_t i = 0; i < g->order; ++i) all[i] = i;
  return subgroup_from_elements(g, std::move(all));
}

namespace {

std::vector<std::vector<std::size_t>> sorted_unique(
    std::set<std::vector<std::size_t>> found) {
  std::vector<std::vector<std::size_t>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(),
            [](const std::vector<std::size_t>& a,
               const std::vector<std::size_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> all_subgroups(const GroupPtr& g) {
  std::set<std::vector<std::size_t>> found;
  std::vector<std::vector<std::size_t>> frontier = {closure(*g, {})};
  found.insert(frontier.front());
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const auto current = frontier[head];
    for (std::size_t x = 0; x < g->order; ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      auto seed = current;
      seed.push_back(x);
      auto bigger = closure(*g, std::move(seed));
      if (found.insert(bigger).second) frontier.push_back(std::move(bigger));
    }
  }
  return sorted_unique(std::move(found));
}

std::vector<std::vector<std::size_t>> normal_abelian_subgroups(
    const GroupPtr& g) {
  const auto conj = conjugacy_data(g);
  // Normal subgroups are exactly closures of unions of conjugacy classes;
  // breadth-first over adjoining one class at a time reaches all of them.
  std::set<std::vector<std::size_t>> found;
  std::vector<std::vector<std::size_t>> frontier = {closure(*g, {})};
  found.insert(frontier.front());
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const auto current = frontier[head];
    for (const auto& cls : conj->classes) {
      if (std::binary_search(current.begin(), current.end(), cls.front())) {
        continue;
      }
      auto seed = current;
      seed.insert(seed.end(), cls.begin(), cls.end());
      auto bigger = closure(*g, std::move(seed));
      if (found.insert(bigger).second) frontier.push_back(std::move(bigger));
    }
  }
  std::set<std::vector<std::size_t>> abelian;
  for (const auto& h : found) {
    if (is_abelian_subset(*g, h)) abelian.insert(h);
  }
  return sorted_unique(std::move(abelian));
}

bool is_normal(const GroupTable& g, const std::vector<std::size_t>& elements) {
  for (std::size_t h : elements) {
    for (std::size_t x = 0; x < g.order; ++x) {
      const std::size_t c = g.mul[g.mul[x][h]][g.inv[x]];
      if (!std::binary_search(elements.begin(), elements.end(), c)) {
        return false;
      }
    }
  }
  return true;
}

bool is_abelian_subset(const GroupTable& g,
                       const std::vector<std::size_t>& elements) {
  for (std::size_t a : elements) {
    for (std::size_t b : elements) {
      if (g.mul[a][b] != g.mul[b][a]) return false;
    }
  }
  return true;
}

std::vector<std::size_t> center(const GroupTable& g) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < g.order; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order && central; ++b) {
      central = g.mul[a][b] == g.mul[b][a];
    }
    if (central) out.push_back(a);
  }
  return out;
}

}  // namespace repring
