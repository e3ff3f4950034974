#include "repring/chartab/chartable.hpp"

#include "repring/groups/abelian.hpp"
#include "repring/groups/subgroups.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace repring {

namespace {

using i64 = long long;

i64 powm(i64 a, i64 e, i64 p) {
  i64 out = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) out = (out * a) % p;
    a = (a * a) % p;
    e >>= 1;
  }
  return out;
}

i64 invm(i64 a, i64 p) { return powm((a % p + p) % p, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Smallest prime p == 1 mod exponent with p > 2 * sqrt(order). Such a prime
// never divides the group order: the exponent is divisible by every prime
// factor of the order, and p exceeds the exponent.
i64 choose_prime(i64 exponent, i64 order) {
  for (i64 p = exponent + 1;; p += exponent) {
    if (p <= 2) continue;
    if (p * p <= 4 * order) continue;
    if (is_prime(p)) return p;
  }
}

i64 primitive_root(i64 p) {
  std::vector<i64> prime_factors;
  i64 m = p - 1;
  for (i64 q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      prime_factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 q : prime_factors) {
      if (powm(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

using Vec = std::vector<i64>;
using Dense = std::vector<Vec>;

Vec mat_apply(const Dense& m, const Vec& v, i64 p) {
  const std::size_t r = m.size();
  Vec out(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    i64 acc = 0;
    for (std::size_t j = 0; j < r; ++j) {
      acc = (acc + m[i][j] * v[j]) % p;
    }
    out[i] = acc;
  }
  return out;
}

// Solves basis * c = w over F_p where the columns of `basis` (each a length-r
// vector) are linearly independent and w lies in their span.
Vec solve_coords(const std::vector<Vec>& basis, const Vec& w, i64 p) {
  const std::size_t r = w.size();
  const std::size_t d = basis.size();
  Dense aug(r, Vec(d + 1, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = basis[j][i];
    aug[i][d] = w[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_of_col(d, r);
  for (std::size_t col = 0; col < d && row < r; ++col) {
    std::size_t sel = row;
    while (sel < r && aug[sel][col] == 0) ++sel;
    if (sel == r) continue;
    std::swap(aug[sel], aug[row]);
    const i64 inv = invm(aug[row][col], p);
    for (std::size_t j = col; j <= d; ++j) {
      aug[row][j] = (aug[row][j] * inv) % p;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      const i64 f = aug[i][col];
      for (std::size_t j = col; j <= d; ++j) {
        aug[i][j] = ((aug[i][j] - f * aug[row][j]) % p + p) % p;
      }
    }
    pivot_of_col[col] = row;
    ++row;
  }
  Vec c(d, 0);
  for (std::size_t col = 0; col < d; ++col) {
    if (pivot_of_col[col] == r) {
      throw std::logic_error("dependent basis in eigenspace refinement");
    }
    c[col] = aug[pivot_of_col[col]][d];
  }
  return c;
}

// Kernel basis of a square matrix over F_p.
std::vector<Vec> nullspace(Dense m, i64 p) {
  const std::size_t d = m.size();
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < d; ++col) {
    std::size_t sel = row;
    while (sel < d && m[sel][col] == 0) ++sel;
    if (sel == d) continue;
    std::swap(m[sel], m[row]);
    const i64 inv = invm(m[row][col], p);
    for (std::size_t j = col; j < d; ++j) m[row][j] = (m[row][j] * inv) % p;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const i64 f = m[i][col];
      for (std::size_t j = col; j < d; ++j) {
        m[i][j] = ((m[i][j] - f * m[row][j]) % p + p) % p;
      }
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(d, false);
  for (std::size_t c : pivot_col_of_row) is_pivot[c] = true;
  std::vector<Vec> kernel;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    Vec v(d, 0);
    v[free] = 1;
    for (std::size_t rix = 0; rix < pivot_col_of_row.size(); ++rix) {
      const i64 val = m[rix][free];
      v[pivot_col_of_row[rix]] = (p - val) % p;
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

struct Space {
  std::vector<Vec> basis;  // vectors of length r
};

// Splits a space into the eigenspaces of (the restriction of) m.
std::vector<Space> split_space(const Space& sp, const Dense& m, i64 p) {
  const std::size_t dim = sp.basis.size();
  if (dim <= 1) return {sp};
  const std::size_t r = sp.basis.front().size();
  Dense coords(dim, Vec(dim, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    const Vec w = mat_apply(m, sp.basis[j], p);
    const Vec c = solve_coords(sp.basis, w, p);
    for (std::size_t i = 0; i < dim; ++i) coords[i][j] = c[i];
  }
  std::vector<Space> out;
  std::size_t total = 0;
  for (i64 lambda = 0; lambda < p; ++lambda) {
    Dense shifted = coords;
    for (std::size_t i = 0; i < dim; ++i) {
      shifted[i][i] = ((shifted[i][i] - lambda) % p + p) % p;
    }
    const auto kernel = nullspace(std::move(shifted), p);
    if (kernel.empty()) continue;
    Space sub;
    for (const auto& k : kernel) {
      Vec v(r, 0);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t x = 0; x < r; ++x) {
          v[x] = (v[x] + k[i] * sp.basis[i][x]) % p;
        }
      }
      sub.basis.push_back(std::move(v));
    }
    total += sub.basis.size();
    out.push_back(std::move(sub));
    if (total == dim) break;
  }
  if (total != dim) {
    throw std::logic_error("non-diagonalizable restriction");
  }
  return out;
}

bool all_one_dimensional(const std::vector<Space>& spaces) {
  return std::all_of(spaces.begin(), spaces.end(),
                     [](const Space& s) { return s.basis.size() == 1; });
}

struct RowKey {
  long degree;
  const ClassFunction* row;
};

void sort_rows_canonically(std::vector<ClassFunction>& rows,
                           std::vector<long>& degrees) {
  std::vector<std::size_t> idx(rows.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    for (std::size_t c = 0; c < rows[a].values.size(); ++c) {
      const int cmp = compare_values(rows[a].values[c], rows[b].values[c]);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  });
  std::vector<ClassFunction> rows2;
  std::vector<long> degrees2;
  rows2.reserve(rows.size());
  degrees2.reserve(rows.size());
  for (std::size_t i : idx) {
    rows2.push_back(std::move(rows[i]));
    degrees2.push_back(degrees[i]);
  }
  rows = std::move(rows2);
  degrees = std::move(degrees2);
}

}  // namespace

CharacterTable character_table(const GroupPtr& g) {
  const ConjPtr conj = conjugacy_data(g);
  const std::size_t r = conj->num_classes();
  const std::size_t n = g->order;
  const i64 e = static_cast<i64>(conj->exponent);
  const i64 p = choose_prime(e, static_cast<i64>(n));

  // Class-sum multiplication matrices over F_p: entry (k, m) of matrix i
  // counts elements x in class i with x^{-1} * rep_m in class k; the shared
  // eigenvectors carry the normalized character values.
  std::vector<Dense> cmats(r, Dense(r, Vec(r, 0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t m = 0; m < r; ++m) {
      const std::size_t z = conj->representatives[m];
      for (std::size_t x : conj->classes[i]) {
        const std::size_t k = conj->class_of[g->mul[g->inv[x]][z]];
        cmats[i][k][m] += 1;
      }
    }
  }

  std::vector<Space> spaces(1);
  spaces[0].basis.resize(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) spaces[0].basis[i][i] = 1;
  for (std::size_t i = 1; i < r && !all_one_dimensional(spaces); ++i) {
    std::vector<Space> next;
    for (const auto& sp : spaces) {
      auto parts = split_space(sp, cmats[i], p);
      for (auto& part : parts) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (!all_one_dimensional(spaces)) {
    // Deterministically seeded random combinations as a fallback refiner.
    std::mt19937 rng(12345);
    std::uniform_int_distribution<i64> coeff(0, p - 1);
    for (int attempt = 0; attempt < 64 && !all_one_dimensional(spaces);
         ++attempt) {
      Dense combo(r, Vec(r, 0));
      for (std::size_t i = 1; i < r; ++i) {
        const i64 c = coeff(rng);
        for (std::size_t a = 0; a < r; ++a) {
          for (std::size_t b = 0; b < r; ++b) {
            combo[a][b] = (combo[a][b] + c * cmats[i][a][b]) % p;
          }
        }
      }
      std::vector<Space> next;
      for (const auto& sp : spaces) {
        auto parts = split_space(sp, combo, p);
        for (auto& part : parts) next.push_back(std::move(part));
      }
      spaces = std::move(next);
    }
    if (!all_one_dimensional(spaces)) {
      throw std::runtime_error("splitting failed");
    }
  }

  const i64 root = primitive_root(p);
  const i64 z = powm(root, (p - 1) / e, p);  // fixed primitive e-th root

  std::vector<ClassFunction> rows;
  std::vector<long> degrees;
  rows.reserve(r);
  degrees.reserve(r);
  for (const auto& sp : spaces) {
    Vec u = sp.basis.front();
    if (u[0] == 0) throw std::logic_error("eigenvector vanishes at identity");
    const i64 norm = invm(u[0], p);
    for (auto& x : u) x = (x * norm) % p;

    i64 s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t kinv = conj->inverse_class(k);
      const i64 csize = static_cast<i64>(conj->classes[k].size());
      s = (s + u[k] * u[kinv] % p * invm(csize, p)) % p;
    }
    const i64 d2 = (static_cast<i64>(n) % p) * invm(s, p) % p;
    i64 degree = 0;
    for (i64 d = 1; 2 * d < p; ++d) {
      if (d * d % p == d2 && static_cast<i64>(n) % d == 0) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw std::logic_error("degree recovery failed");

    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k) {
      const i64 csize = static_cast<i64>(conj->classes[k].size());
      chi[k] = degree * u[k] % p * invm(csize, p) % p;
    }

    // Exact lift class by class: recover the multiset of eigenvalue
    // exponents by a discrete Fourier transform over F_p.
    ClassFunction row;
    row.classes = conj;
    row.values.resize(r);
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t rep = conj->representatives[k];
      const i64 nk = static_cast<i64>(conj->element_orders[rep]);
      const i64 zk_inv = invm(powm(z, e / nk, p), p);
      std::map<long, Rational> coeffs;
      i64 total = 0;
      for (i64 m = 0; m < nk; ++m) {
        i64 acc = 0;
        for (i64 t = 0; t < nk; ++t) {
          const std::size_t cls =
              conj->class_of[power(*g, rep, t)];
          acc = (acc + chi[cls] * powm(zk_inv, m * t % nk, p)) % p;
        }
        const i64 c = acc * invm(nk, p) % p;
        if (c > degree) {
          throw std::logic_error("eigenvalue multiplicity out of range");
        }
        total += c;
        if (c != 0) coeffs.emplace(static_cast<long>(m), Rational(c));
      }
      if (total != degree) {
        throw std::logic_error("eigenvalue multiplicities do not sum to the "
                               "degree");
      }
      row.values[k] =
          Cyclotomic(static_cast<long>(nk), coeffs).minimal_form();
    }
    rows.push_back(std::move(row));
    degrees.push_back(static_cast<long>(degree));
  }

  i64 degree_sq_sum = 0;
  for (long d : degrees) degree_sq_sum += static_cast<i64>(d) * d;
  if (degree_sq_sum != static_cast<i64>(n)) {
    throw std::logic_error("degree sum mismatch");
  }

  sort_rows_canonically(rows, degrees);
  return CharacterTable{conj, std::move(rows), std::move(degrees)};
}

CharacterTable abelian_character_table(const GroupPtr& g) {
  std::vector<std::size_t> everything(g->order);
  for (std::size_t i = 0; i < g->order; ++i) everything[i] = i;
  if (!is_abelian_subset(*g, everything)) {
    throw std::invalid_argument("not abelian");
  }
  const ConjPtr conj = conjugacy_data(g);
  const auto astr = abelian_structure(full_subgroup(g));
  const std::size_t m = astr.rank();

  std::vector<ClassFunction> rows;
  std::vector<long> degrees;
  std::vector<long long> phi(m, 0);
  while (true) {
    ClassFunction row;
    row.classes = conj;
    row.values.reserve(conj->num_classes());
    for (std::size_t c = 0; c < conj->num_classes(); ++c) {
      // Classes are singletons; local and parent indices agree for the full
      // subgroup.
      row.values.push_back(
          root_of_unity(character_eval(astr, phi, conj->representatives[c])));
    }
    rows.push_back(std::move(row));
    degrees.push_back(1);

    bool done = (m == 0);
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (static_cast<std::size_t>(++phi[pos]) <
          astr.invariant_factors[pos]) {
        break;
      }
      phi[pos] = 0;
      if (pos == 0) done = true;
    }
    if (done) break;
  }

  sort_rows_canonically(rows, degrees);
  return CharacterTable{conj, std::move(rows), std::move(degrees)};
}

std::vector<Int> decompose(const CharacterTable& t, const ClassFunction& f) {
  const auto& conj = *t.classes;
  const std::size_t r = t.size();
  std::vector<Int> out(r);
  for (std::size_t j = 0; j < r; ++j) {
    Cyclotomic acc;
    for (std::size_t c = 0; c < conj.num_classes(); ++c) {
      const Cyclotomic term =
          f.values[c] * t.irreducibles[j].values[conj.inverse_class(c)];
      acc += term * Cyclotomic(Rational(conj.classes[c].size()));
    }
    acc *= Cyclotomic(Rational(1, conj.group->order));
    if (!acc.is_rational() || !is_integer(acc.as_rational())) {
      throw std::domain_error("non-integral coefficient at irreducible " +
                              std::to_string(j));
    }
    out[j] = rational_num(acc.as_rational());
  }
  return out;
}

ClassFunction combination(const CharacterTable& t,
                          const std::vector<Int>& coeffs) {
  if (coeffs.size() != t.size()) {
    throw std::invalid_argument("coefficient count mismatch");
  }
  ClassFunction out;
  out.classes = t.classes;
  out.values.assign(t.classes->num_classes(), Cyclotomic());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    const Cyclotomic factor{Rational(coeffs[j])};
    for (std::size_t c = 0; c < out.values.size(); ++c) {
      out.values[c] += t.irreducibles[j].values[c] * factor;
    }
  }
  return out;
}

std::vector<Int> ring_multiply(const CharacterTable& t,
                               const std::vector<Int>& a,
                               const std::vector<Int>& b) {
  return decompose(t, combination(t, a) * combination(t, b));
}

}  // namespace repring
