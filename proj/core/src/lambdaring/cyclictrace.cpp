#include "repring/lambdaring/cyclictrace.hpp"

#include <stdexcept>
#include <vector>

namespace repring {

namespace {

constexpr long kDimensionCap = 4096;

long checked_total_dimension(std::size_t dim_a, std::size_t dim_b, long k) {
  long total = static_cast<long>(dim_a);
  for (long t = 0; t < k; ++t) {
    total *= static_cast<long>(dim_b);
    if (total > kDimensionCap) {
      throw std::invalid_argument("dimension cap exceeded");
    }
  }
  return total;
}

}  // namespace

Cyclotomic cyclic_tensor_trace(const Mat<Cyclotomic>& a,
                               const Mat<Cyclotomic>& b, long k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw std::invalid_argument("cyclic trace: not square");
  }
  checked_total_dimension(a.rows(), b.rows(), k);
  const std::size_t db = b.rows();

  // The operator (a^T kron b^{kron k}) * (I kron P) sends basis column
  // (beta, t_1..t_k) to rows; its diagonal entry there is
  // a(beta, beta) * b(t_2, t_1) * ... * b(t_k, t_{k-1}) * b(t_1, t_k).
  Cyclotomic acc;
  std::vector<std::size_t> tuple(static_cast<std::size_t>(k), 0);
  if (db == 0 || a.rows() == 0) return acc;
  while (true) {
    Cyclotomic cycle(1);
    for (long t = 0; t < k; ++t) {
      const std::size_t from = tuple[static_cast<std::size_t>(t)];
      const std::size_t to =
          tuple[static_cast<std::size_t>((t + 1) % k)];
      cycle *= b(to, from);
      if (cycle.is_zero()) break;
    }
    if (!cycle.is_zero()) {
      for (std::size_t beta = 0; beta < a.rows(); ++beta) {
        acc += a(beta, beta) * cycle;
      }
    }
    std::size_t pos = tuple.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++tuple[pos] < db) {
        done = false;
        break;
      }
      tuple[pos] = 0;
    }
    if (done) break;
  }
  return acc.minimal_form();
}

Cyclotomic hom_cyclic_trace(const MatrixRep& rho_i, const MatrixRep& rho_j,
                            long k) {
  if (rho_i.group != rho_j.group) {
    throw std::invalid_argument("representations on different groups");
  }
  const GroupTable& g = *rho_i.group;
  Cyclotomic acc;
  for (std::size_t elem = 0; elem < g.order; ++elem) {
    acc += cyclic_tensor_trace(rho_j.images[g.inv[elem]],
                               rho_i.images[elem], k);
  }
  acc *= Cyclotomic(Rational(1, g.order));
  return acc.minimal_form();
}

}  // namespace repring
