#include "repring/exact/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace repring {

namespace {

std::vector<long> divisors_of(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact division of integer polynomials by a monic divisor; coefficient i is
// the coefficient of x^i. Throws if the division leaves a remainder.
std::vector<Int> poly_divide_exact(std::vector<Int> num,
                                   const std::vector<Int>& den) {
  if (den.empty() || den.back() != 1) {
    throw std::logic_error("poly_divide_exact: divisor not monic");
  }
  if (num.size() < den.size()) {
    throw std::logic_error("poly_divide_exact: degree underflow");
  }
  std::vector<Int> quot(num.size() - den.size() + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Int c = num[i + den.size() - 1];
    quot[i] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
  }
  for (const Int& c : num) {
    if (c != 0) throw std::logic_error("poly_divide_exact: remainder");
  }
  return quot;
}

// Coefficients of the n-th cyclotomic polynomial, cached for the process
// lifetime (the library is single-threaded by design).
const std::vector<Int>& cyclotomic_poly(long n) {
  static std::map<long, std::vector<Int>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Int> poly(static_cast<std::size_t>(n) + 1);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (long d : divisors_of(n)) {
    if (d == n) continue;
    poly = poly_divide_exact(poly, cyclotomic_poly(d));
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

// Reduces a raw exponent->coefficient map into the power basis of Q(zeta_n):
// exponents taken mod n, then reduced mod the n-th cyclotomic polynomial.
std::map<long, Rational> reduce_coeffs(long n,
                                       const std::map<long, Rational>& raw) {
  const long deg = euler_phi(n);
  std::vector<Rational> dense(static_cast<std::size_t>(n));
  for (const auto& [e, c] : raw) {
    if (c == 0) continue;
    long em = e % n;
    if (em < 0) em += n;
    dense[static_cast<std::size_t>(em)] += c;
  }
  const std::vector<Int>& phi = cyclotomic_poly(n);
  for (long i = n - 1; i >= deg; --i) {
    const Rational c = dense[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (long j = 0; j <= deg; ++j) {
      dense[static_cast<std::size_t>(i - deg + j)] -= c * Rational(phi[j]);
    }
  }
  std::map<long, Rational> out;
  for (long e = 0; e < deg && e < n; ++e) {
    if (dense[static_cast<std::size_t>(e)] != 0) {
      out.emplace(e, dense[static_cast<std::size_t>(e)]);
    }
  }
  return out;
}

// Embeds reduced coefficients from Q(zeta_n) into raw exponents of
// Q(zeta_target); target must be a multiple of n.
std::map<long, Rational> embed_raw(long n,
                                   const std::map<long, Rational>& coeffs,
                                   long target) {
  const long scale = target / n;
  std::map<long, Rational> raw;
  for (const auto& [e, c] : coeffs) raw.emplace(e * scale, c);
  return raw;
}

// Solves E * c = y exactly over the rationals (E given column-major as
// `cols`, each of length m). Returns std::nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_columns(
    const std::vector<std::vector<Rational>>& cols,
    std::vector<Rational> y) {
  const std::size_t m = y.size();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < m; ++i) a[i][j] = cols[j][i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a[sel][col] == 0) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    std::swap(y[sel], y[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (std::size_t j = col; j < k; ++j) a[row][j] *= inv;
    y[row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < k; ++j) a[i][j] -= f * a[row][j];
      y[i] -= f * y[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i) {
    if (y[i] != 0) return std::nullopt;
  }
  std::vector<Rational> c(k, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) c[pivot_col[r]] = y[r];
  return c;
}

std::vector<Rational> dense_coeffs(const Cyclotomic& x) {
  std::vector<Rational> out(static_cast<std::size_t>(euler_phi(x.order())));
  for (const auto& [e, c] : x.coeffs()) out[static_cast<std::size_t>(e)] = c;
  return out;
}

}  // namespace

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: order must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

Cyclotomic::Cyclotomic(long value) {
  if (value != 0) coeffs_.emplace(0, Rational(value));
}

Cyclotomic::Cyclotomic(const Rational& value) {
  if (value != 0) coeffs_.emplace(0, value);
}

Cyclotomic Cyclotomic::zeta(long n, long long k) {
  return Cyclotomic(n, {{static_cast<long>(k % n), Rational(1)}});
}

Cyclotomic::Cyclotomic(long n, const std::map<long, Rational>& coeffs) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  order_ = n;
  coeffs_ = reduce_coeffs(n, coeffs);
}

bool Cyclotomic::is_rational() const {
  return coeffs_.empty() ||
         (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational()) throw std::domain_error("not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_.begin()->second;
}

Cyclotomic Cyclotomic::minimal_form() const {
  if (is_rational()) return Cyclotomic(as_rational());
  const std::vector<Rational> target = dense_coeffs(*this);
  for (long d : divisors_of(order_)) {
    if (d == order_) break;
    const long deg_d = euler_phi(d);
    std::vector<std::vector<Rational>> cols;
    cols.reserve(static_cast<std::size_t>(deg_d));
    for (long j = 0; j < deg_d; ++j) {
      const auto basis =
          reduce_coeffs(order_, {{j * (order_ / d), Rational(1)}});
      std::vector<Rational> col(target.size());
      for (const auto& [e, c] : basis) col[static_cast<std::size_t>(e)] = c;
      cols.push_back(std::move(col));
    }
    if (auto sol = solve_columns(cols, target)) {
      std::map<long, Rational> m;
      for (long j = 0; j < deg_d; ++j) {
        if ((*sol)[static_cast<std::size_t>(j)] != 0) {
          m.emplace(j, (*sol)[static_cast<std::size_t>(j)]);
        }
      }
      return Cyclotomic(d, m);
    }
  }
  return *this;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& other) const {
  if (order_ == other.order_) {
    Cyclotomic out;
    out.order_ = order_;
    out.coeffs_ = coeffs_;
    for (const auto& [e, c] : other.coeffs_) {
      auto [it, inserted] = out.coeffs_.emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.coeffs_.erase(it);
      }
    }
    return out;
  }
  const long l = std::lcm(order_, other.order_);
  std::map<long, Rational> raw = embed_raw(order_, coeffs_, l);
  for (const auto& [e, c] : embed_raw(other.order_, other.coeffs_, l)) {
    raw[e] += c;
  }
  return Cyclotomic(l, raw);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out;
  out.order_ = order_;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& other) const {
  return *this + (-other);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& other) const {
  const long l = std::lcm(order_, other.order_);
  const auto a = embed_raw(order_, coeffs_, l);
  const auto b = embed_raw(other.order_, other.coeffs_, l);
  std::map<long, Rational> raw;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) raw[(ea + eb) % l] += ca * cb;
  }
  return Cyclotomic(l, raw);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  *this = *this + other;
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  *this = *this - other;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  *this = *this * other;
  return *this;
}

bool Cyclotomic::operator==(const Cyclotomic& other) const {
  if (order_ == other.order_) return coeffs_ == other.coeffs_;
  const long l = std::lcm(order_, other.order_);
  return reduce_coeffs(l, embed_raw(order_, coeffs_, l)) ==
         reduce_coeffs(l, embed_raw(other.order_, other.coeffs_, l));
}

Cyclotomic galois(const Cyclotomic& x, long long k) {
  const long n = x.order();
  long km = static_cast<long>(k % n);
  if (km < 0) km += n;
  if (std::gcd(km, n) != 1) {
    throw std::invalid_argument("galois: exponent not coprime to order");
  }
  std::map<long, Rational> raw;
  for (const auto& [e, c] : x.coeffs()) raw[(e * km) % n] += c;
  return Cyclotomic(n, raw);
}

Cyclotomic conjugate(const Cyclotomic& x) {
  return galois(x, x.order() - 1);
}

Cyclotomic inverse(const Cyclotomic& x) {
  if (x.is_zero()) throw std::domain_error("division by zero");
  if (x.is_rational()) return Cyclotomic(Rational(1) / x.as_rational());
  const long n = x.order();
  const long deg = euler_phi(n);
  std::vector<std::vector<Rational>> cols;
  cols.reserve(static_cast<std::size_t>(deg));
  for (long j = 0; j < deg; ++j) {
    std::map<long, Rational> shifted;
    for (const auto& [e, c] : x.coeffs()) shifted[(e + j) % n] += c;
    const auto reduced = reduce_coeffs(n, shifted);
    std::vector<Rational> col(static_cast<std::size_t>(deg));
    for (const auto& [e, c] : reduced) col[static_cast<std::size_t>(e)] = c;
    cols.push_back(std::move(col));
  }
  std::vector<Rational> e0(static_cast<std::size_t>(deg));
  e0[0] = 1;
  auto sol = solve_columns(cols, e0);
  if (!sol) throw std::logic_error("inverse: singular multiplication matrix");
  std::map<long, Rational> m;
  for (long j = 0; j < deg; ++j) {
    if ((*sol)[static_cast<std::size_t>(j)] != 0) {
      m.emplace(j, (*sol)[static_cast<std::size_t>(j)]);
    }
  }
  return Cyclotomic(n, m);
}

Cyclotomic root_of_unity(const QmodZ& t) {
  const long den = static_cast<long>(to_int64(denominator(t.value())));
  const long long num = to_int64(numerator(t.value()));
  return Cyclotomic::zeta(den, num);
}

int compare_values(const Cyclotomic& a, const Cyclotomic& b) {
  const Cyclotomic am = a.minimal_form();
  const Cyclotomic bm = b.minimal_form();
  if (am.order() != bm.order()) return am.order() < bm.order() ? -1 : 1;
  const long deg = euler_phi(am.order());
  for (long e = 0; e < deg; ++e) {
    const auto ia = am.coeffs().find(e);
    const auto ib = bm.coeffs().find(e);
    const Rational ca = ia == am.coeffs().end() ? Rational(0) : ia->second;
    const Rational cb = ib == bm.coeffs().end() ? Rational(0) : ib->second;
    if (ca != cb) return ca > cb ? -1 : 1;
  }
  return 0;
}

std::string to_display_string(const Cyclotomic& x) {
  const Cyclotomic m = x.minimal_form();
  if (m.is_rational()) return format_rational(m.as_rational());
  const long n = m.order();
  std::string out;
  bool first = true;
  for (const auto& [e, c] : m.coeffs()) {
    std::string body;
    if (e == 0) {
      body = format_rational(c < 0 ? Rational(-c) : c);
    } else {
      std::string base = (n == 4) ? "i" : "z" + std::to_string(n);
      if (e > 1) base += "^" + std::to_string(e);
      const Rational mag = c < 0 ? Rational(-c) : c;
      body = (mag == 1) ? base : format_rational(mag) + "*" + base;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace repring
