#include "repring/twist/cocycle.hpp"

#include "repring/exact/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace repring {

namespace {

// Exponent vector of the character a -> phi(q^{-1} a), recovered from its
// values on the invariant-factor generators.
std::vector<long long> acted_exponents(const DualGroup& dual,
                                       const std::vector<std::size_t>& inverse_action,
                                       std::size_t phi) {
  const auto& factors = dual.structure.invariant_factors;
  std::vector<long long> exps(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::size_t gen = dual.structure.generators[i];
    const QmodZ value = dual.eval(phi, inverse_action[gen]);
    const Rational scaled = value.value() * Int(factors[i]);
    if (!is_integer(scaled)) {
      throw std::logic_error("character value has incompatible order");
    }
    exps[i] = to_int64(rational_num(scaled));
  }
  return exps;
}

}  // namespace

QAction q_action(const ExtensionData& ext, const DualGroup& dual) {
  const GroupTable& g = *ext.g;
  const GroupTable& q = *ext.quotient;
  const std::size_t na = ext.a.elements.size();

  QAction action;
  action.on_subgroup.resize(q.order);
  for (std::size_t i = 0; i < q.order; ++i) {
    const std::size_t t = ext.section[i];
    auto& row = action.on_subgroup[i];
    row.resize(na);
    for (std::size_t la = 0; la < na; ++la) {
      const std::size_t moved =
          g.mul[g.mul[t][ext.a.elements[la]]][g.inv[t]];
      const std::size_t local = ext.a.local(moved);
      if (local >= na) {
        throw std::logic_error("conjugation left the normal subgroup");
      }
      row[la] = local;
    }
  }

  action.on_dual.resize(q.order);
  for (std::size_t i = 0; i < q.order; ++i) {
    const auto& inverse_action = action.on_subgroup[q.inv[i]];
    auto& row = action.on_dual[i];
    row.resize(dual.size());
    for (std::size_t phi = 0; phi < dual.size(); ++phi) {
      row[phi] = dual.index_of(acted_exponents(dual, inverse_action, phi));
    }
  }
  return action;
}

bool is_cocycle(const DualGroup& dual, const Mat<QmodZ>& alpha) {
  const std::size_t n = dual.size();
  if (alpha.rows() != n || alpha.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ij = dual.multiply(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const QmodZ lhs = alpha(i, j) + alpha(ij, k);
        const QmodZ rhs = alpha(j, k) + alpha(i, dual.multiply(j, k));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool is_bi_additive(const DualGroup& dual, const Mat<QmodZ>& s) {
  const std::size_t n = dual.size();
  if (s.rows() != n || s.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ij = dual.multiply(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (s(ij, k) != s(i, k) + s(j, k)) return false;
        if (s(k, ij) != s(k, i) + s(k, j)) return false;
      }
    }
  }
  return true;
}

bool is_alternating(const DualGroup& dual, const Mat<QmodZ>& s) {
  const std::size_t n = dual.size();
  if (s.rows() != n || s.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!s(i, i).is_zero()) return false;
  }
  return true;
}

Mat<QmodZ> skew(const Mat<QmodZ>& alpha) {
  Mat<QmodZ> out(alpha.rows(), alpha.cols());
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    for (std::size_t j = 0; j < alpha.cols(); ++j) {
      out(i, j) = alpha(i, j) - alpha(j, i);
    }
  }
  return out;
}

Mat<QmodZ> transport(const Mat<QmodZ>& table,
                     const std::vector<std::size_t>& sigma) {
  Mat<QmodZ> out(table.rows(), table.cols());
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      out(i, j) = table(sigma[i], sigma[j]);
    }
  }
  return out;
}

bool is_nondegenerate(const DualGroup& dual, const Mat<QmodZ>& s) {
  const std::size_t n = dual.size();
  for (std::size_t i = 1; i < n; ++i) {
    bool trivial = true;
    for (std::size_t j = 0; j < n && trivial; ++j) {
      if (!s(i, j).is_zero()) trivial = false;
    }
    if (trivial) return false;
  }
  return true;
}

bool is_invariant_class(const ExtensionData& ext, const DualGroup& dual,
                        const QAction& action, const Mat<QmodZ>& alpha) {
  (void)dual;
  const Mat<QmodZ> base = skew(alpha);
  for (std::size_t q = 0; q < ext.quotient->order; ++q) {
    const auto& sigma = action.on_dual[ext.quotient->inv[q]];
    if (skew(transport(alpha, sigma)) != base) return false;
  }
  return true;
}

namespace {

// Hyperbolic pair: s(p, r) generates a cyclic group of the same order as p.
struct HyperbolicPair {
  std::size_t p = 0;
  std::size_t r = 0;
  QmodZ value;       // s(p, r)
  long long order = 1;
};

// Solves u * step == target for u in [0, order); the target always lies in
// the cyclic group generated by step when the pairing is nondegenerate.
long long discrete_ratio(const QmodZ& target, const QmodZ& step,
                         long long order) {
  QmodZ acc;
  for (long long u = 0; u < order; ++u) {
    if (acc == target) return u;
    acc = acc + step;
  }
  throw std::logic_error("coordinate extraction failed");
}

}  // namespace

Mat<QmodZ> standard_cocycle(const DualGroup& dual, const Mat<QmodZ>& s) {
  if (!is_bi_additive(dual, s) || !is_alternating(dual, s)) {
    throw std::invalid_argument("pairing is not alternating bi-additive");
  }
  if (!is_nondegenerate(dual, s)) {
    throw std::invalid_argument("pairing is degenerate");
  }
  const std::size_t n = dual.size();

  // Peel off hyperbolic pairs until only the trivial character remains.
  std::vector<HyperbolicPair> pairs;
  std::vector<std::size_t> remaining;
  for (std::size_t i = 0; i < n; ++i) remaining.push_back(i);
  while (remaining.size() > 1) {
    HyperbolicPair pair;
    long long best = 0;
    for (const std::size_t i : remaining) {
      const long long order = dual.character_order(i);
      if (order > best) {
        best = order;
        pair.p = i;
      }
    }
    pair.order = best;
    bool found = false;
    for (const std::size_t j : remaining) {
      if (to_int64(s(pair.p, j).order()) == best) {
        pair.r = j;
        pair.value = s(pair.p, j);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("hyperbolic pair extraction failed");
    std::vector<std::size_t> next;
    for (const std::size_t i : remaining) {
      if (s(pair.p, i).is_zero() && s(pair.r, i).is_zero()) {
        next.push_back(i);
      }
    }
    pairs.push_back(pair);
    remaining = std::move(next);
  }

  // Coordinates of every character along each pair, read off through the
  // pairing itself: s(phi, r) = u * s(p, r) and s(p, phi) = v * s(p, r).
  Mat<QmodZ> alpha(n, n);
  for (const auto& pair : pairs) {
    std::vector<long long> coord_p(n), coord_r(n);
    for (std::size_t phi = 0; phi < n; ++phi) {
      coord_p[phi] = discrete_ratio(s(phi, pair.r), pair.value, pair.order);
      coord_r[phi] = discrete_ratio(s(pair.p, phi), pair.value, pair.order);
    }
    const QmodZ reversed = s(pair.r, pair.p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        alpha(i, j) = alpha(i, j) + reversed * Int(coord_r[i] * coord_p[j]);
      }
    }
  }

  if (skew(alpha) != s) {
    throw std::logic_error("standard cocycle does not reproduce the pairing");
  }
  return alpha;
}

std::vector<Mat<QmodZ>> enumerate_invariant_nondegenerate(
    const ExtensionData& ext) {
  if (ext.a.elements.size() > 64) {
    throw std::invalid_argument("subgroup too large");
  }
  const DualGroup dual = dual_group(ext.a_structure);
  const QAction action = q_action(ext, dual);
  const std::size_t n = dual.size();
  const std::size_t rank = dual.structure.invariant_factors.size();

  // Pairings are determined by their values on generator pairs i < j; the
  // value on (g_i, g_j) ranges over the cyclic group of order
  // gcd(d_i, d_j).
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<long long> moduli;
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      slots.emplace_back(i, j);
      moduli.push_back(std::gcd(
          static_cast<long long>(dual.structure.invariant_factors[i]),
          static_cast<long long>(dual.structure.invariant_factors[j])));
    }
  }

  std::vector<Mat<QmodZ>> out;
  std::vector<long long> choice(slots.size(), 0);
  while (true) {
    // Assemble the pairing from the generator values.
    Mat<QmodZ> s(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      const auto& ea = dual.characters[a];
      for (std::size_t b = 0; b < n; ++b) {
        const auto& eb = dual.characters[b];
        QmodZ acc;
        for (std::size_t t = 0; t < slots.size(); ++t) {
          const auto [i, j] = slots[t];
          const QmodZ base = QmodZ::of(choice[t], moduli[t]);
          acc = acc + base * Int(ea[i] * eb[j] - ea[j] * eb[i]);
        }
        s(a, b) = acc;
      }
    }

    bool keep = is_nondegenerate(dual, s);
    if (keep) {
      for (std::size_t q = 0; q < ext.quotient->order && keep; ++q) {
        if (transport(s, action.on_dual[q]) != s) keep = false;
      }
    }
    if (keep) out.push_back(standard_cocycle(dual, s));

    // Mixed-radix advance over the generator values, last slot fastest.
    bool wrapped = true;
    for (std::size_t t = slots.size(); t-- > 0;) {
      if (++choice[t] < moduli[t]) {
        wrapped = false;
        break;
      }
      choice[t] = 0;
    }
    if (wrapped) break;
  }
  return out;
}

}  // namespace repring
