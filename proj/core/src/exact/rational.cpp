#include "repring/exact/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <limits>
#include <stdexcept>

namespace repring {

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Int rational_num(const Rational& q) { return numerator(q); }

Int rational_den(const Rational& q) { return denominator(q); }

std::string format_rational(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_plain_integer(text)) {
      throw std::invalid_argument("malformed rational: " + text);
    }
    return Rational(Int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_plain_integer(num) || !is_plain_integer(den)) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  Int d(den);
  if (d == 0) throw std::invalid_argument("malformed rational: " + text);
  return Rational(Int(num), d);
}

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

long long to_int64(const Int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("integer out of int64 range: " + v.str());
  }
  return static_cast<long long>(v);
}

}  // namespace repring
