#include "repring/exact/qmodz.hpp"

#include <stdexcept>

namespace repring {

namespace {

Rational reduce_mod_one(const Rational& v) {
  const Int n = numerator(v);
  const Int d = denominator(v);
  Int fl = n / d;
  if (n < 0 && fl * d != n) --fl;
  return v - Rational(fl);
}

}  // namespace

QmodZ::QmodZ(const Rational& value) : value_(reduce_mod_one(value)) {}

QmodZ QmodZ::of(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("QmodZ::of: zero denominator");
  return QmodZ(Rational(Int(num), Int(den)));
}

QmodZ QmodZ::operator+(const QmodZ& other) const {
  return QmodZ(value_ + other.value_);
}

QmodZ QmodZ::operator-(const QmodZ& other) const {
  return QmodZ(value_ - other.value_);
}

QmodZ QmodZ::operator-() const { return QmodZ(-value_); }

QmodZ QmodZ::operator*(const Int& scalar) const {
  return QmodZ(value_ * Rational(scalar));
}

std::string format_qmodz(const QmodZ& v) { return format_rational(v.value()); }

QmodZ parse_qmodz(const std::string& text) {
  return QmodZ(parse_rational(text));
}

}  // namespace repring
