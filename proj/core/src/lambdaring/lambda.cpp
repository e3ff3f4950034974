#include "repring/lambdaring/adams.hpp"

#include <stdexcept>

namespace repring {

std::vector<Int> RepRing::lambda(long n, const std::vector<Int>& x) const {
  if (n < 0) throw std::invalid_argument("negative exterior power");
  std::vector<std::vector<Int>> lam;
  lam.push_back(unit());
  for (long m = 1; m <= n; ++m) {
    std::vector<Int> acc(rank(), Int(0));
    for (long i = 1; i <= m; ++i) {
      const auto term = ring_multiply(table_, lam[m - i], psi(i, x));
      for (std::size_t j = 0; j < rank(); ++j) {
        if (i % 2 == 1) {
          acc[j] += term[j];
        } else {
          acc[j] -= term[j];
        }
      }
    }
    for (auto& c : acc) {
      if (c % m != 0) {
        throw std::domain_error("non-integral lambda coefficient");
      }
      c /= m;
    }
    lam.push_back(std::move(acc));
  }
  return lam[n];
}

}  // namespace repring
