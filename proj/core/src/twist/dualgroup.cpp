#include "repring/twist/dualgroup.hpp"

#include <numeric>
#include <stdexcept>

namespace repring {

QmodZ DualGroup::eval(std::size_t phi, std::size_t local_element) const {
  return character_eval(structure, characters.at(phi), local_element);
}

std::size_t DualGroup::index_of(const std::vector<long long>& exponents) const {
  const auto& factors = structure.invariant_factors;
  if (exponents.size() != factors.size()) {
    throw std::invalid_argument("exponent vector has wrong length");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto d = static_cast<long long>(factors[i]);
    long long e = exponents[i] % d;
    if (e < 0) e += d;
    index = index * factors[i] + static_cast<std::size_t>(e);
  }
  return index;
}

std::size_t DualGroup::multiply(std::size_t phi, std::size_t psi) const {
  const auto& a = characters.at(phi);
  const auto& b = characters.at(psi);
  std::vector<long long> sum(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
  return index_of(sum);
}

std::size_t DualGroup::inverse(std::size_t phi) const {
  const auto& a = characters.at(phi);
  std::vector<long long> neg(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
  return index_of(neg);
}

std::size_t DualGroup::power(std::size_t phi, long long k) const {
  const auto& a = characters.at(phi);
  std::vector<long long> scaled(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto d = static_cast<long long>(structure.invariant_factors[i]);
    scaled[i] = (a[i] % d) * (k % d);
  }
  return index_of(scaled);
}

long long DualGroup::character_order(std::size_t phi) const {
  const auto& a = characters.at(phi);
  long long order = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto d = static_cast<long long>(structure.invariant_factors[i]);
    const long long part = d / std::gcd(d, a[i] % d);
    order = std::lcm(order, part);
  }
  return order;
}

DualGroup dual_group(AbelianStructure structure) {
  DualGroup dual;
  dual.structure = std::move(structure);
  const auto& factors = dual.structure.invariant_factors;
  std::size_t total = 1;
  for (const auto d : factors) total *= d;
  dual.characters.reserve(total);
  std::vector<long long> exps(factors.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    dual.characters.push_back(exps);
    for (std::size_t i = factors.size(); i-- > 0;) {
      if (++exps[i] < static_cast<long long>(factors[i])) break;
      exps[i] = 0;
    }
  }
  return dual;
}

}  // namespace repring
