#include "repring/groups/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace repring {

namespace {

std::vector<std::size_t> default_labels_size(std::size_t n,
                                             std::vector<std::string>* out) {
  out->reserve(n);
  for (std::size_t i = 0; i < n; ++i) out->push_back("g" + std::to_string(i));
  return {};
}

// Greedy generating set: repeatedly adjoin the smallest element outside the
// closure of the current generators.
std::vector<std::size_t> greedy_generators(
    const std::vector<std::vector<std::size_t>>& mul, std::size_t identity) {
  const std::size_t n = mul.size();
  std::vector<std::size_t> gens;
  std::vector<bool> in_closure(n, false);
  in_closure[identity] = true;
  std::size_t known = 1;
  while (known < n) {
    std::size_t next = 0;
    while (in_closure[next]) ++next;
    gens.push_back(next);
    // Recompute the closure from scratch (tables here are tiny).
    std::fill(in_closure.begin(), in_closure.end(), false);
    in_closure[identity] = true;
    std::vector<std::size_t> frontier = {identity};
    for (std::size_t g : gens) {
      if (!in_closure[g]) {
        in_closure[g] = true;
        frontier.push_back(g);
      }
    }
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      for (std::size_t g : gens) {
        const std::size_t p = mul[frontier[head]][g];
        if (!in_closure[p]) {
          in_closure[p] = true;
          frontier.push_back(p);
        }
      }
    }
    known = frontier.size();
  }
  return gens;
}

std::string cycle_notation(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  std::string out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = perm[x];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

GroupPtr make_group(std::string name,
                    std::vector<std::vector<std::size_t>> mul,
                    std::vector<std::string> labels) {
  const std::size_t n = mul.size();
  if (n == 0) throw std::invalid_argument("malformed multiplication table");
  for (const auto& row : mul) {
    if (row.size() != n) {
      throw std::invalid_argument("malformed multiplication table");
    }
    for (std::size_t v : row) {
      if (v >= n) throw std::invalid_argument("malformed multiplication table");
    }
  }
  if (labels.empty()) {
    default_labels_size(n, &labels);
  } else if (labels.size() != n) {
    throw std::invalid_argument("label count does not match order");
  }

  // Identity first: Light's test needs a base point for closures anyway.
  std::size_t identity = n;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = mul[e][x] == x && mul[x][e] == x;
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity == n) throw std::invalid_argument("no identity");

  // Light's associativity test: checking (a*b)*c == a*(b*c) for b ranging
  // over a generating set suffices.
  for (std::size_t b : greedy_generators(mul, identity)) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
          throw std::invalid_argument(
              "not associative at (" + std::to_string(a) + "," +
              std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }

  std::vector<std::size_t> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (mul[i][j] == identity && mul[j][i] == identity) {
        inv[i] = j;
        break;
      }
    }
    if (inv[i] == n) {
      throw std::invalid_argument("no inverse for " + std::to_string(i));
    }
  }

  if (identity != 0) {
    // Relabel by the transposition (0 identity) so index 0 is the identity.
    const auto sigma = [&](std::size_t x) {
      if (x == 0) return identity;
      if (x == identity) return std::size_t{0};
      return x;
    };
    std::vector<std::vector<std::size_t>> mul2(
        n, std::vector<std::size_t>(n));
    std::vector<std::size_t> inv2(n);
    std::vector<std::string> labels2(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mul2[i][j] = sigma(mul[sigma(i)][sigma(j)]);
      }
      inv2[i] = sigma(inv[sigma(i)]);
      labels2[i] = labels[sigma(i)];
    }
    mul = std::move(mul2);
    inv = std::move(inv2);
    labels = std::move(labels2);
  }

  auto g = std::make_shared<GroupTable>();
  g->name = std::move(name);
  g->order = n;
  g->mul = std::move(mul);
  g->inv = std::move(inv);
  g->labels = std::move(labels);
  return g;
}

GroupPtr from_permutations(std::string name, std::size_t degree,
                           const std::vector<std::vector<std::size_t>>& gens,
                           std::size_t limit) {
  for (const auto& p : gens) {
    if (p.size() != degree) throw std::invalid_argument("malformed permutation");
    std::vector<bool> hit(degree, false);
    for (std::size_t v : p) {
      if (v >= degree || hit[v]) {
        throw std::invalid_argument("malformed permutation");
      }
      hit[v] = true;
    }
  }

  std::vector<std::size_t> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;

  // Breadth-first enumeration: follow each known element by each generator
  // (applied first), so indices are stable for fixed generator lists.
  std::vector<std::vector<std::size_t>> elems = {id};
  std::map<std::vector<std::size_t>, std::size_t> index = {{id, 0}};
  const auto compose = [&](const std::vector<std::size_t>& outer,
                           const std::vector<std::size_t>& inner) {
    std::vector<std::size_t> out(degree);
    for (std::size_t x = 0; x < degree; ++x) out[x] = outer[inner[x]];
    return out;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : gens) {
      const auto next = compose(elems[head], s);
      if (index.emplace(next, elems.size()).second) {
        elems.push_back(next);
        if (elems.size() > limit) {
          throw std::runtime_error("order exceeds limit");
        }
      }
    }
  }

  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      mul[a][b] = index.at(compose(elems[a], elems[b]));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(cycle_notation(p));
  return make_group(std::move(name), std::move(mul), std::move(labels));
}

std::size_t element_order(const GroupTable& g, std::size_t a) {
  std::size_t x = a, ord = 1;
  while (x != 0) {
    x = g.mul[x][a];
    ++ord;
  }
  return ord;
}

std::size_t power(const GroupTable& g, std::size_t a, long long k) {
  const long long ord = static_cast<long long>(element_order(g, a));
  long long r = k % ord;
  if (r < 0) r += ord;
  std::size_t out = 0;
  for (long long i = 0; i < r; ++i) out = g.mul[out][a];
  return out;
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t na = a->order, nb = b->order;
  const std::size_t n = na * nb;
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ia = i / nb, ib = i % nb;
    labels[i] = "(" + a->labels[ia] + "," + b->labels[ib] + ")";
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ja = j / nb, jb = j % nb;
      mul[i][j] = a->mul[ia][ja] * nb + b->mul[ib][jb];
    }
  }
  return make_group(a->name + "x" + b->name, std::move(mul),
                    std::move(labels));
}

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be >= 1");
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  }
  return make_group("C" + std::to_string(n), std::move(mul),
                    std::move(labels));
}

GroupPtr klein_group() {
  std::vector<std::vector<std::size_t>> mul(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) mul[i][j] = i ^ j;
  }
  return make_group("Klein", std::move(mul), {"1", "a", "b", "ab"});
}

GroupPtr dihedral_group(std::size_t order) {
  if (order < 2 || order % 2 != 0) {
    throw std::invalid_argument("dihedral group order must be even and >= 2");
  }
  if (order == 8) {
    // Presentation by involutions x, y, q with y central and q x q = x y;
    // element x^i y^j q^k sits at index i + 2j + 4k.
    const auto idx = [](std::size_t i, std::size_t j, std::size_t k) {
      return i + 2 * j + 4 * k;
    };
    std::vector<std::vector<std::size_t>> mul(8, std::vector<std::size_t>(8));
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t k = 0; k < 2; ++k) {
          for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
              for (std::size_t c = 0; c < 2; ++c) {
                mul[idx(i, j, k)][idx(a, b, c)] =
                    idx((i + a) % 2, (j + b + k * a) % 2, (k + c) % 2);
              }
            }
          }
        }
      }
    }
    return make_group("D8", std::move(mul),
                      {"1", "x", "y", "xy", "q", "xq", "yq", "xyq"});
  }
  const std::size_t m = order / 2;
  const auto idx = [m](std::size_t i, std::size_t j) { return i + m * j; };
  std::vector<std::vector<std::size_t>> mul(order,
                                            std::vector<std::size_t>(order));
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const std::string rot =
          i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
      labels[idx(i, j)] = j == 0 ? (i == 0 ? "1" : rot) : rot + "s";
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
          const std::size_t rot_part =
              j == 0 ? (i + a) % m : (i + m - a % m) % m;
          mul[idx(i, j)][idx(a, b)] = idx(rot_part, (j + b) % 2);
        }
      }
    }
  }
  return make_group("D" + std::to_string(order), std::move(mul),
                    std::move(labels));
}

GroupPtr quaternion_group() {
  // Units 1, i, j, k with signs: index 2u + s, s = 1 for the negative.
  static const std::size_t prod_u[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const std::size_t sign_u[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<std::size_t>> mul(8, std::vector<std::size_t>(8));
  for (std::size_t u1 = 0; u1 < 4; ++u1) {
    for (std::size_t s1 = 0; s1 < 2; ++s1) {
      for (std::size_t u2 = 0; u2 < 4; ++u2) {
        for (std::size_t s2 = 0; s2 < 2; ++s2) {
          const std::size_t u = prod_u[u1][u2];
          const std::size_t s = (s1 + s2 + sign_u[u1][u2]) % 2;
          mul[2 * u1 + s1][2 * u2 + s2] = 2 * u + s;
        }
      }
    }
  }
  return make_group("Q8", std::move(mul),
                    {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

}  // namespace repring
