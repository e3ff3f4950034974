#include "repring/exact/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace repring {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

SmithDecomposition smith_normal_form(const Mat<Int>& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Mat<Int> d = a;
  Mat<Int> u = Mat<Int>::identity(m);
  Mat<Int> v = Mat<Int>::identity(n);

  const auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(u(i, c), u(j, c));
  };
  const auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) std::swap(d(r, i), d(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(v(r, i), v(r, j));
  };
  // row[dst] += f * row[src], mirrored on u so u*a*v == d stays invariant.
  const auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t c = 0; c < n; ++c) d(dst, c) += f * d(src, c);
    for (std::size_t c = 0; c < m; ++c) u(dst, c) += f * u(src, c);
  };
  const auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t r = 0; r < m; ++r) d(r, dst) += f * d(r, src);
    for (std::size_t r = 0; r < n; ++r) v(r, dst) += f * v(r, src);
  };

  for (std::size_t t = 0; t < m && t < n; ++t) {
    // Bring the submatrix entry of smallest absolute value to the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (d(i, j) == 0) continue;
        if (!found || abs_int(d(i, j)) < abs_int(d(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);

    while (true) {
      bool changed = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Int q = d(i, t) / d(t, t);
        if (q != 0) add_row(i, t, -q);
        if (d(i, t) != 0) {
          swap_rows(i, t);
          changed = true;
          break;
        }
      }
      if (changed) continue;
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Int q = d(t, j) / d(t, t);
        if (q != 0) add_col(j, t, -q);
        if (d(t, j) != 0) {
          swap_cols(j, t);
          changed = true;
          break;
        }
      }
      if (changed) continue;
      // Pivot row and column are clear; enforce that the pivot divides the
      // remaining submatrix before moving on (gives the divisor chain).
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n && divides; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            add_row(t, i, Int(1));
            divides = false;
          }
        }
      }
      if (divides) break;
    }

    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < m; ++c) u(t, c) = -u(t, c);
    }
  }

  return SmithDecomposition{std::move(u), std::move(v), std::move(d)};
}

std::optional<std::vector<QmodZ>> solve_mod(const Mat<Int>& a,
                                            const std::vector<QmodZ>& r) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (r.size() != m) {
    throw std::invalid_argument("solve_mod: right-hand side size mismatch");
  }
  const SmithDecomposition snf = smith_normal_form(a);

  // a x = r  <=>  d y = u r with x = v y.
  std::vector<QmodZ> s(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) s[i] = s[i] + r[j] * snf.u(i, j);
  }
  std::vector<QmodZ> y(n);
  for (std::size_t i = 0; i < m; ++i) {
    const Int di = (i < n) ? snf.d(i, i) : Int(0);
    if (di != 0) {
      y[i] = QmodZ(s[i].value() / Rational(di));
    } else if (!s[i].is_zero()) {
      return std::nullopt;
    }
  }
  std::vector<QmodZ> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) x[i] = x[i] + y[j] * snf.v(i, j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    QmodZ acc;
    for (std::size_t j = 0; j < n; ++j) acc = acc + x[j] * a(i, j);
    if (acc != r[i]) throw std::logic_error("solve_mod: verification failed");
  }
  return x;
}

}  // namespace repring
