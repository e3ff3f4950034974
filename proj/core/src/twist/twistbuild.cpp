#include "repring/twist/twistbuild.hpp"

#include "repring/exact/smith.hpp"
#include "repring/lambdaring/adams.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace repring {

namespace {

// Parent element of A whose evaluation character agrees with `values` on
// the listed character indices; npos when none does.
std::size_t matching_element(const ExtensionData& ext, const DualGroup& dual,
                             const std::vector<std::size_t>& characters,
                             const std::vector<QmodZ>& values) {
  const std::size_t na = ext.a.elements.size();
  for (std::size_t la = 0; la < na; ++la) {
    bool ok = true;
    for (std::size_t t = 0; t < characters.size() && ok; ++t) {
      if (dual.eval(characters[t], la) != values[t]) ok = false;
    }
    if (ok) return la;
  }
  return SubgroupTable::npos;
}

// Right-hand side of the coboundary system for one quotient element:
// (q.alpha - alpha)(phi, psi) with (q.alpha)(phi, psi) =
// alpha(q^{-1} phi, q^{-1} psi).
QmodZ coboundary_rhs(const Mat<QmodZ>& alpha,
                     const std::vector<std::size_t>& sigma, std::size_t i,
                     std::size_t j) {
  return alpha(sigma[i], sigma[j]) - alpha(i, j);
}

void check_solution(const DualGroup& dual, const Mat<QmodZ>& alpha,
                    const std::vector<std::size_t>& sigma,
                    const std::vector<QmodZ>& z, const char* what) {
  const std::size_t n = dual.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const QmodZ lhs = z[i] + z[j] - z[dual.multiply(i, j)];
      if (lhs != coboundary_rhs(alpha, sigma, i, j)) {
        throw std::logic_error(what);
      }
    }
  }
}

}  // namespace

std::vector<std::vector<QmodZ>> solve_z(const ExtensionData& ext,
                                        const DualGroup& dual,
                                        const QAction& action,
                                        const Mat<QmodZ>& alpha) {
  const std::size_t n = dual.size();
  const std::size_t nq = ext.quotient->order;
  std::vector<std::vector<QmodZ>> out(nq, std::vector<QmodZ>(n));

  for (std::size_t q = 1; q < nq; ++q) {
    const auto& sigma = action.on_dual[ext.quotient->inv[q]];

    // One equation per pair: z(phi) + z(psi) - z(phi psi) = rhs(phi, psi).
    Mat<Int> system(n * n, n);
    std::vector<QmodZ> rhs(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = i * n + j;
        system(row, i) += 1;
        system(row, j) += 1;
        system(row, dual.multiply(i, j)) -= 1;
        rhs[row] = coboundary_rhs(alpha, sigma, i, j);
      }
    }
    auto solved = solve_mod(system, rhs);
    if (!solved) throw std::runtime_error("coboundary system unsolvable");
    std::vector<QmodZ> z = std::move(*solved);

    // Normalize: subtract the evaluation character of an element of A that
    // matches z on the characters fixed by q, so the normalized z vanishes
    // there. Such an element exists because the restriction to the fixed
    // characters is additive.
    std::vector<std::size_t> fixed;
    for (std::size_t phi = 0; phi < n; ++phi) {
      if (action.on_dual[q][phi] == phi) fixed.push_back(phi);
    }
    for (const std::size_t i : fixed) {
      for (const std::size_t j : fixed) {
        if (z[i] + z[j] != z[dual.multiply(i, j)]) {
          throw std::logic_error("fixed-character restriction is not additive");
        }
      }
    }
    std::vector<QmodZ> fixed_values;
    fixed_values.reserve(fixed.size());
    for (const std::size_t phi : fixed) fixed_values.push_back(z[phi]);
    const std::size_t shift =
        matching_element(ext, dual, fixed, fixed_values);
    if (shift == SubgroupTable::npos) {
      throw std::logic_error("normalization failed");
    }
    for (std::size_t phi = 0; phi < n; ++phi) {
      z[phi] = z[phi] - dual.eval(phi, shift);
    }

    check_solution(dual, alpha, sigma, z,
                   "normalized solution lost the coboundary property");
    for (const std::size_t phi : fixed) {
      if (!z[phi].is_zero()) {
        throw std::logic_error("normalization left a nonzero fixed value");
      }
    }
    out[q] = std::move(z);
  }
  return out;
}

std::vector<std::vector<std::size_t>> cocycle_b(
    const ExtensionData& ext, const DualGroup& dual, const QAction& action,
    const std::vector<std::vector<QmodZ>>& z) {
  const GroupTable& g = *ext.g;
  const GroupTable& quot = *ext.quotient;
  const std::size_t n = dual.size();
  const std::size_t nq = quot.order;

  std::vector<std::size_t> all_characters(n);
  for (std::size_t phi = 0; phi < n; ++phi) all_characters[phi] = phi;

  std::vector<std::vector<std::size_t>> b(nq, std::vector<std::size_t>(nq));
  for (std::size_t p = 0; p < nq; ++p) {
    const auto& shift = action.on_dual[quot.inv[p]];
    for (std::size_t q = 0; q < nq; ++q) {
      const std::size_t pq = quot.mul[p][q];
      std::vector<QmodZ> w(n);
      for (std::size_t phi = 0; phi < n; ++phi) {
        w[phi] = z[pq][phi] - z[p][phi] - z[q][shift[phi]];
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (w[dual.multiply(i, j)] != w[i] + w[j]) {
            throw std::invalid_argument("not a character");
          }
        }
      }
      const std::size_t local = matching_element(ext, dual, all_characters, w);
      if (local == SubgroupTable::npos) {
        throw std::invalid_argument("no matching element");
      }
      b[p][q] = ext.a.elements[local];
    }
  }

  // Twisted 2-cocycle identity with the conjugation action of the quotient.
  for (std::size_t p = 0; p < nq; ++p) {
    const std::size_t t = ext.section[p];
    for (std::size_t q = 0; q < nq; ++q) {
      for (std::size_t r = 0; r < nq; ++r) {
        const std::size_t lhs = g.mul[b[p][q]][b[quot.mul[p][q]][r]];
        const std::size_t acted = g.mul[g.mul[t][b[q][r]]][g.inv[t]];
        const std::size_t rhs = g.mul[acted][b[p][quot.mul[q][r]]];
        if (lhs != rhs) {
          throw std::logic_error("induced cochain is not a cocycle");
        }
      }
    }
  }
  for (std::size_t q = 0; q < nq; ++q) {
    if (b[0][q] != 0 || b[q][0] != 0) {
      throw std::logic_error("induced cocycle is not normalized");
    }
  }
  return b;
}

GroupPtr twisted_group(const ExtensionData& ext,
                       const std::vector<std::vector<std::size_t>>& b) {
  const GroupTable& g = *ext.g;
  std::vector<std::vector<std::size_t>> mul(
      g.order, std::vector<std::size_t>(g.order));
  for (std::size_t x = 0; x < g.order; ++x) {
    const std::size_t px = ext.projection[x];
    for (std::size_t y = 0; y < g.order; ++y) {
      mul[x][y] = g.mul[b[px][ext.projection[y]]][g.mul[x][y]];
    }
  }
  return make_group(g.name + "_b", std::move(mul), g.labels);
}

namespace {

void validate_alpha(const ExtensionData& ext, const DualGroup& dual,
                    const QAction& action, const Mat<QmodZ>& alpha) {
  if (alpha.rows() != dual.size() || alpha.cols() != dual.size()) {
    throw std::invalid_argument("cocycle table has wrong size");
  }
  if (!is_cocycle(dual, alpha)) {
    throw std::invalid_argument("cocycle identity violated");
  }
  if (!is_invariant_class(ext, dual, action, alpha)) {
    throw std::invalid_argument("cohomology class is not invariant");
  }
}

TwistData assemble(ExtensionData ext, DualGroup dual, QAction action,
                   Mat<QmodZ> alpha, std::vector<std::vector<QmodZ>> z) {
  TwistData twist;
  twist.ext = std::move(ext);
  twist.dual = std::move(dual);
  twist.action = std::move(action);
  twist.alpha = std::move(alpha);
  twist.z = std::move(z);
  twist.b = cocycle_b(twist.ext, twist.dual, twist.action, twist.z);
  twist.twisted = twisted_group(twist.ext, twist.b);
  return twist;
}

}  // namespace

TwistData make_twist(ExtensionData ext, Mat<QmodZ> alpha) {
  DualGroup dual = dual_group(ext.a_structure);
  QAction action = q_action(ext, dual);
  validate_alpha(ext, dual, action, alpha);
  auto z = solve_z(ext, dual, action, alpha);
  return assemble(std::move(ext), std::move(dual), std::move(action),
                  std::move(alpha), std::move(z));
}

TwistData make_twist_with_z(ExtensionData ext, Mat<QmodZ> alpha,
                            std::vector<std::vector<QmodZ>> z) {
  DualGroup dual = dual_group(ext.a_structure);
  QAction action = q_action(ext, dual);
  validate_alpha(ext, dual, action, alpha);

  const std::size_t n = dual.size();
  const std::size_t nq = ext.quotient->order;
  if (z.size() != nq) {
    throw std::invalid_argument("cochain family has wrong size");
  }
  for (const auto& row : z) {
    if (row.size() != n) {
      throw std::invalid_argument("cochain family has wrong size");
    }
  }
  for (std::size_t q = 0; q < nq; ++q) {
    const auto& sigma = action.on_dual[ext.quotient->inv[q]];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const QmodZ lhs = z[q][i] + z[q][j] - z[q][dual.multiply(i, j)];
        if (lhs != coboundary_rhs(alpha, sigma, i, j)) {
          throw std::invalid_argument(
              "z does not satisfy the coboundary equation");
        }
      }
    }
    for (std::size_t phi = 0; phi < n; ++phi) {
      if (action.on_dual[q][phi] == phi && !z[q][phi].is_zero()) {
        throw std::invalid_argument(
            "z is not normalized on fixed characters");
      }
    }
  }
  return assemble(std::move(ext), std::move(dual), std::move(action),
                  std::move(alpha), std::move(z));
}

std::vector<Cyclotomic> twisted_character(const TwistData& twist,
                                          const ClassFunction& chi) {
  const GroupTable& g = *twist.ext.g;
  if (chi.classes->group != twist.ext.g) {
    throw std::invalid_argument("class data does not match the group");
  }
  const std::size_t chars = twist.dual.size();
  const std::size_t na = twist.ext.a.elements.size();
  const Cyclotomic scale(Rational(1, static_cast<long>(na)));

  std::vector<Cyclotomic> values(g.order);
  for (std::size_t elem = 0; elem < g.order; ++elem) {
    const std::size_t q = twist.ext.projection[elem];
    Cyclotomic acc;
    for (std::size_t phi = 0; phi < chars; ++phi) {
      if (twist.action.on_dual[q][phi] != phi) continue;
      const Cyclotomic correction =
          root_of_unity(-twist.z[q][twist.action.on_dual[q][phi]]);
      Cyclotomic isotypic;
      for (std::size_t la = 0; la < na; ++la) {
        isotypic += root_of_unity(-twist.dual.eval(phi, la)) *
                    chi.at_element(g.mul[elem][twist.ext.a.elements[la]]);
      }
      acc += correction * isotypic;
    }
    values[elem] = (acc * scale).minimal_form();
  }
  return values;
}

std::size_t twisted_power(const TwistData& twist, std::size_t g,
                          long long k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const GroupTable& tg = *twist.twisted;
  std::size_t acc = 0;
  for (long long t = 0; t < k; ++t) acc = tg.mul[acc][g];
  return acc;
}

std::size_t power_discrepancy(const TwistData& twist, std::size_t g,
                              long long k) {
  const GroupTable& orig = *twist.ext.g;
  const std::size_t twisted = twisted_power(twist, g, k);
  const std::size_t plain = power(orig, g, k);
  const std::size_t d = orig.mul[twisted][orig.inv[plain]];
  if (twist.ext.a.local(d) == SubgroupTable::npos) {
    throw std::logic_error("power discrepancy left the subgroup");
  }
  return d;
}

AdamsComparison compare_adams(const CharacterTable& original,
                              const CharacterTable& other, long long k) {
  const std::size_t order = original.group()->order;
  if (other.group()->order != order || original.size() != other.size()) {
    throw std::runtime_error("no character matching");
  }

  AdamsComparison result;
  result.matching.resize(original.size());
  std::vector<bool> used(other.size(), false);
  for (std::size_t i = 0; i < original.size(); ++i) {
    std::size_t found = other.size();
    for (std::size_t j = 0; j < other.size(); ++j) {
      if (used[j]) continue;
      bool same = true;
      for (std::size_t e = 0; e < order && same; ++e) {
        if (original.irreducibles[i].at_element(e) !=
            other.irreducibles[j].at_element(e)) {
          same = false;
        }
      }
      if (same) {
        found = j;
        break;
      }
    }
    if (found == other.size()) {
      throw std::runtime_error("no character matching");
    }
    used[found] = true;
    result.matching[i] = found;
  }

  const Mat<Int> mine = adams_matrix(original, k);
  const Mat<Int> theirs = adams_matrix(other, k);
  result.difference = Mat<Int>(original.size(), original.size());
  result.equal = true;
  for (std::size_t i = 0; i < original.size(); ++i) {
    for (std::size_t j = 0; j < original.size(); ++j) {
      result.difference(i, j) =
          mine(i, j) - theirs(result.matching[i], result.matching[j]);
      if (result.difference(i, j) != 0) result.equal = false;
    }
  }
  return result;
}

Mat<Int> twisted_adams_abelian(const CharacterTable& table,
                               const Mat<QmodZ>& pairing, long long k) {
  const std::size_t m = table.size();
  for (const auto& d : table.degrees) {
    if (d != 1) throw std::invalid_argument("not abelian");
  }
  if (pairing.rows() != m || pairing.cols() != m) {
    throw std::invalid_argument("pairing size mismatch");
  }

  const std::size_t classes = table.classes->classes.size();
  auto find_row = [&](const std::vector<Cyclotomic>& values) {
    for (std::size_t t = 0; t < m; ++t) {
      if (table.irreducibles[t].values == values) return t;
    }
    throw std::logic_error("row product is not a row");
  };

  std::vector<std::vector<std::size_t>> mult(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Cyclotomic> product(classes);
      for (std::size_t c = 0; c < classes; ++c) {
        product[c] = table.irreducibles[i].values[c] *
                     table.irreducibles[j].values[c];
      }
      mult[i][j] = find_row(product);
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t t = 0; t < m; ++t) {
        if (pairing(mult[i][j], t) != pairing(i, t) + pairing(j, t) ||
            pairing(t, mult[i][j]) != pairing(t, i) + pairing(t, j)) {
          throw std::invalid_argument("pairing is not bi-additive");
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!pairing(i, i).is_zero()) {
      throw std::invalid_argument("pairing is not alternating");
    }
  }

  Mat<Int> out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    // Walk the cyclic group generated by row i to land on its k-th power.
    std::vector<std::size_t> cycle{0};
    std::size_t cursor = mult[0][i];
    while (cursor != 0) {
      cycle.push_back(cursor);
      cursor = mult[cursor][i];
    }
    const long long span = static_cast<long long>(cycle.size());
    const std::size_t target =
        cycle[static_cast<std::size_t>(((k % span) + span) % span)];

    const QmodZ phase = pairing(i, i) * Int(k - 1);
    Int entry;
    if (phase.is_zero()) {
      entry = 1;
    } else if (phase == QmodZ::of(1, 2)) {
      entry = -1;
    } else {
      throw std::domain_error("non-integral twisted operation");
    }
    out(i, target) = entry;
  }
  return out;
}

}  // namespace repring
