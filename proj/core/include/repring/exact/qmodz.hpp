#pragma once

#include "repring/exact/rational.hpp"

#include <string>

namespace repring {

/// An element of Q/Z, stored as the unique representative in [0, 1).
///
/// Supports the abelian-group operations plus scaling by an integer. The
/// additive order of the element equals the (reduced) denominator of the
/// representative.
class QmodZ {
 public:
  QmodZ() = default;

  /// Reduces an arbitrary rational into [0, 1).
  explicit QmodZ(const Rational& value);

  /// Convenience: num/den reduced into [0, 1). Throws on den == 0.
  static QmodZ of(long long num, long long den);

  const Rational& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  /// Additive order: smallest n >= 1 with n * (*this) == 0.
  Int order() const { return denominator(value_); }

  QmodZ operator+(const QmodZ& other) const;
  QmodZ operator-(const QmodZ& other) const;
  QmodZ operator-() const;
  QmodZ operator*(const Int& scalar) const;

  bool operator==(const QmodZ& other) const { return value_ == other.value_; }
  bool operator!=(const QmodZ& other) const { return !(*this == other); }
  bool operator<(const QmodZ& other) const { return value_ < other.value_; }

 private:
  Rational value_{0};
};

/// Renders the representative as "num/den" (bare integer "0" for zero).
std::string format_qmodz(const QmodZ& v);

/// Parses the "num/den" form accepted by format_qmodz, reducing into [0, 1).
QmodZ parse_qmodz(const std::string& text);

}  // namespace repring
