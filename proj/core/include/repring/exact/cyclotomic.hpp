#pragma once

#include "repring/exact/qmodz.hpp"
#include "repring/exact/rational.hpp"

#include <map>
#include <string>

namespace repring {

/// An element of the cyclotomic field Q(zeta_n), zeta_n = exp(2*pi*i/n).
///
/// Stored as a sparse coefficient map over the power basis
/// 1, zeta_n, ..., zeta_n^(phi(n)-1), i.e. always reduced modulo the n-th
/// cyclotomic polynomial; zero coefficients are omitted. Elements of
/// different orders interoperate by embedding into Q(zeta_lcm). Equality is
/// mathematical equality of the represented numbers, independent of the
/// stored order.
class Cyclotomic {
 public:
  /// Zero (order 1).
  Cyclotomic() = default;

  /// A rational constant (order 1).
  Cyclotomic(long value);                 // NOLINT(runtime/explicit)
  Cyclotomic(const Rational& value);      // NOLINT(runtime/explicit)

  /// zeta_n^k. Requires n >= 1; k may be any integer (reduced mod n).
  static Cyclotomic zeta(long n, long long k);

  /// Constructs from an explicit coefficient map {exponent -> coefficient};
  /// exponents are reduced mod n and the result mod the n-th cyclotomic
  /// polynomial.
  Cyclotomic(long n, const std::map<long, Rational>& coeffs);

  /// Order n of the field Q(zeta_n) this element is currently stored in.
  long order() const { return order_; }

  /// Sparse power-basis coefficients (exponents within [0, phi(order))).
  const std::map<long, Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }

  /// True when the element lies in Q (constant power-basis coordinate only).
  bool is_rational() const;

  /// The rational value; throws std::domain_error("not rational") otherwise.
  Rational as_rational() const;

  /// Re-expresses the element in Q(zeta_d) for the smallest divisor d of
  /// order() that contains it.
  Cyclotomic minimal_form() const;

  Cyclotomic operator+(const Cyclotomic& other) const;
  Cyclotomic operator-(const Cyclotomic& other) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& other) const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);

  bool operator==(const Cyclotomic& other) const;
  bool operator!=(const Cyclotomic& other) const { return !(*this == other); }

 private:
  long order_ = 1;
  std::map<long, Rational> coeffs_;
};

/// Applies the Galois automorphism zeta_n -> zeta_n^k; requires
/// gcd(k, order) == 1 (throws std::invalid_argument otherwise).
Cyclotomic galois(const Cyclotomic& x, long long k);

/// Complex conjugation (the Galois map zeta -> zeta^(n-1)).
Cyclotomic conjugate(const Cyclotomic& x);

/// Multiplicative inverse; throws std::domain_error("division by zero").
Cyclotomic inverse(const Cyclotomic& x);

/// exp(2*pi*i*t) for t in Q/Z, i.e. zeta_den^num.
Cyclotomic root_of_unity(const QmodZ& t);

/// Total order on values used for canonical row/column sorting: compares
/// minimal forms first by field order, then coefficients exponent by
/// exponent with larger rationals sorting earlier (so the constant 1
/// precedes -1 and every irrationality). Returns -1, 0, or 1.
int compare_values(const Cyclotomic& a, const Cyclotomic& b);

/// Human-readable rendering of the minimal form: bare rationals, "i"/"-i",
/// otherwise sums of "q*zN^k" terms (zN denotes exp(2*pi*i/N)).
std::string to_display_string(const Cyclotomic& x);

/// Euler totient (used for power-basis sizes; n >= 1).
long euler_phi(long n);

}  // namespace repring
