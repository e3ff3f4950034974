#include "repring/exact/cyclotomic.hpp"
#include "repring/exact/matrix.hpp"
#include "repring/exact/qmodz.hpp"
#include "repring/exact/rational.hpp"
#include "repring/exact/smith.hpp"

#include "doctest.h"
#include "support/oracles.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace repring;
using repring::testing::Float50;

namespace {

const Float50 kTol("1e-35");

Mat<Int> make_int_matrix(std::size_t rows, std::size_t cols,
                         std::initializer_list<long> entries) {
  Mat<Int> m(rows, cols);
  auto it = entries.begin();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Int(*it++);
  }
  return m;
}

}  // namespace

TEST_CASE("rational formatting and parsing round-trip") {
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(format_rational(Rational(4, 6)) == "2/3");
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-2/8") == Rational(-1, 4));
  for (const Rational& q :
       {Rational(0), Rational(22, 7), Rational(-100, 3), Rational(12)}) {
    CHECK(parse_rational(format_rational(q)) == q);
  }
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("QmodZ reduces representatives into [0,1)") {
  CHECK(QmodZ(Rational(5, 4)).value() == Rational(1, 4));
  CHECK(QmodZ(Rational(-1, 4)).value() == Rational(3, 4));
  CHECK(QmodZ(Rational(3)).is_zero());
  CHECK(QmodZ(Rational(-7, 3)).value() == Rational(2, 3));
  CHECK(QmodZ::of(1, 2).order() == 2);
  CHECK(QmodZ::of(2, 6).order() == 3);
  CHECK(QmodZ().order() == 1);
}

TEST_CASE("QmodZ group operations") {
  const QmodZ a = QmodZ::of(1, 2);
  const QmodZ b = QmodZ::of(2, 3);
  CHECK(a + b == QmodZ::of(1, 6));
  CHECK(a - b == QmodZ::of(5, 6));
  CHECK(-b == QmodZ::of(1, 3));
  CHECK(a + a == QmodZ());
  CHECK(b * Int(3) == QmodZ());
  CHECK(b * Int(-1) == -b);
  CHECK(format_qmodz(QmodZ()) == "0");
  CHECK(format_qmodz(b) == "2/3");
  CHECK(parse_qmodz("5/4") == QmodZ::of(1, 4));
  CHECK(parse_qmodz(format_qmodz(a - b)) == a - b);
}

TEST_CASE("cyclotomic basics: roots of unity and rationality") {
  const Cyclotomic one(1);
  CHECK(one.is_rational());
  CHECK(one.as_rational() == 1);
  CHECK(Cyclotomic().is_zero());

  // zeta_2 == -1, zeta_1 == 1.
  CHECK(Cyclotomic::zeta(2, 1) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(1, 0) == one);
  CHECK(Cyclotomic::zeta(4, 2) == Cyclotomic(-1));

  // A sixth root plus its conjugate power collapses to the rational 1,
  // cross-checked against 50-digit numeric evaluation.
  const Cyclotomic z = Cyclotomic::zeta(6, 1) + Cyclotomic::zeta(6, 5);
  CHECK(z.is_rational());
  CHECK(z.as_rational() == 1);
  CHECK(testing::numeric_distance(z, Cyclotomic(1)) < kTol);

  // 2*cos(2*pi/5) is a real irrationality: stays non-rational.
  const Cyclotomic gold = Cyclotomic::zeta(5, 1) + Cyclotomic::zeta(5, 4);
  CHECK(!gold.is_rational());
  CHECK_THROWS_AS(gold.as_rational(), std::domain_error);
  const auto [re, im] = testing::numeric_eval(gold);
  CHECK(abs(im) < kTol);
  // (sqrt(5) - 1) / 2 = 0.61803...
  CHECK(abs(re - Float50("0.6180339887498948482045868343656381177203")) <
        Float50("1e-30"));
}

TEST_CASE("cyclotomic mixed-order arithmetic agrees with lcm embedding") {
  // zeta_8^2 is the imaginary unit even though the orders differ.
  CHECK(Cyclotomic::zeta(8, 1) * Cyclotomic::zeta(8, 1) ==
        Cyclotomic::zeta(4, 1));
  CHECK(Cyclotomic::zeta(2, 1) * Cyclotomic::zeta(3, 1) ==
        Cyclotomic::zeta(6, 5));
  CHECK(Cyclotomic::zeta(3, 1) + Cyclotomic::zeta(3, 2) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(12, 3) == Cyclotomic::zeta(4, 1));

  // Sum over all n-th roots vanishes.
  for (long n : {2L, 3L, 4L, 6L, 8L, 12L}) {
    Cyclotomic sum;
    for (long k = 0; k < n; ++k) sum += Cyclotomic::zeta(n, k);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("cyclotomic field axioms on sampled elements") {
  const std::vector<Cyclotomic> samples = {
      Cyclotomic(2),
      Cyclotomic(Rational(-3, 2)),
      Cyclotomic::zeta(4, 1),
      Cyclotomic::zeta(3, 1) + Cyclotomic(1),
      Cyclotomic::zeta(8, 1) - Cyclotomic::zeta(8, 3),
      Cyclotomic::zeta(12, 1) * Cyclotomic(Rational(1, 2)) + Cyclotomic(3),
      Cyclotomic::zeta(5, 2) + Cyclotomic::zeta(5, 3),
  };
  for (const auto& a : samples) {
    for (const auto& b : samples) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - b == -(b - a));
      // Numeric cross-check of the product against complex multiplication.
      const auto [ar, ai] = testing::numeric_eval(a);
      const auto [br, bi] = testing::numeric_eval(b);
      const auto [pr, pi] = testing::numeric_eval(a * b);
      CHECK(abs(pr - (ar * br - ai * bi)) < kTol);
      CHECK(abs(pi - (ar * bi + ai * br)) < kTol);
      for (const auto& c : samples) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
  for (const auto& a : samples) {
    if (a.is_zero()) continue;
    CHECK(a * inverse(a) == Cyclotomic(1));
  }
  CHECK_THROWS_AS(inverse(Cyclotomic()), std::domain_error);
  CHECK(inverse(Cyclotomic(2)) == Cyclotomic(Rational(1, 2)));
}

TEST_CASE("cyclotomic conjugation and galois maps") {
  const Cyclotomic z8 = Cyclotomic::zeta(8, 1);
  CHECK(conjugate(z8) == Cyclotomic::zeta(8, 7));
  CHECK(galois(Cyclotomic::zeta(5, 1), 2) == Cyclotomic::zeta(5, 2));
  CHECK_THROWS_AS(galois(Cyclotomic::zeta(6, 1), 2), std::invalid_argument);

  const std::vector<Cyclotomic> samples = {
      Cyclotomic(7), Cyclotomic::zeta(3, 1) + Cyclotomic(2),
      Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 2)};
  for (const auto& a : samples) {
    CHECK(conjugate(conjugate(a)) == a);
    for (const auto& b : samples) {
      CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
      CHECK(conjugate(a + b) == conjugate(a) + conjugate(b));
    }
    // x * conj(x) is real and nonnegative: numeric check.
    const auto [re, im] = testing::numeric_eval(a * conjugate(a));
    CHECK(abs(im) < kTol);
    CHECK(re >= -kTol);
  }
}

TEST_CASE("cyclotomic minimal form finds the smallest field") {
  CHECK(Cyclotomic::zeta(12, 3).minimal_form().order() == 4);
  // Odd orders absorb a factor of 2: zeta_6 = 1 + zeta_3 lives in order 3.
  CHECK(Cyclotomic::zeta(12, 2).minimal_form().order() == 3);
  CHECK(Cyclotomic::zeta(12, 2).minimal_form() ==
        Cyclotomic(1) + Cyclotomic::zeta(3, 1));
  CHECK(Cyclotomic::zeta(8, 2).minimal_form() == Cyclotomic::zeta(4, 1));
  CHECK((Cyclotomic::zeta(6, 1) + Cyclotomic::zeta(6, 5))
            .minimal_form()
            .order() == 1);
  CHECK(Cyclotomic::zeta(8, 1).minimal_form().order() == 8);
  // Minimal form never changes the value.
  for (const auto& a :
       {Cyclotomic::zeta(12, 4) + Cyclotomic::zeta(12, 8),
        Cyclotomic::zeta(8, 2) + Cyclotomic(1), Cyclotomic::zeta(9, 3)}) {
    CHECK(a.minimal_form() == a);
  }
}

TEST_CASE("root_of_unity maps Q/Z exponents to cyclotomic values") {
  CHECK(root_of_unity(QmodZ()) == Cyclotomic(1));
  CHECK(root_of_unity(QmodZ::of(1, 2)) == Cyclotomic(-1));
  CHECK(root_of_unity(QmodZ::of(1, 4)) == Cyclotomic::zeta(4, 1));
  CHECK(root_of_unity(QmodZ::of(3, 4)) == conjugate(Cyclotomic::zeta(4, 1)));
  const QmodZ a = QmodZ::of(1, 6), b = QmodZ::of(1, 4);
  CHECK(root_of_unity(a + b) == root_of_unity(a) * root_of_unity(b));
}

TEST_CASE("value ordering puts rationals first, descending") {
  CHECK(compare_values(Cyclotomic(1), Cyclotomic(-1)) < 0);
  CHECK(compare_values(Cyclotomic(2), Cyclotomic(1)) < 0);
  CHECK(compare_values(Cyclotomic(1), Cyclotomic::zeta(3, 1)) < 0);
  CHECK(compare_values(Cyclotomic::zeta(4, 1), Cyclotomic::zeta(8, 1)) < 0);
  CHECK(compare_values(Cyclotomic(5), Cyclotomic(5)) == 0);
  // Consistent antisymmetry.
  const std::vector<Cyclotomic> vals = {
      Cyclotomic(0), Cyclotomic(1), Cyclotomic(-2),
      Cyclotomic::zeta(4, 1), Cyclotomic::zeta(6, 1)};
  for (const auto& a : vals) {
    for (const auto& b : vals) {
      CHECK(compare_values(a, b) == -compare_values(b, a));
    }
  }
}

TEST_CASE("display strings for common values") {
  CHECK(to_display_string(Cyclotomic(Rational(1, 2))) == "1/2");
  CHECK(to_display_string(Cyclotomic(-3)) == "-3");
  CHECK(to_display_string(Cyclotomic::zeta(4, 1)) == "i");
  CHECK(to_display_string(-Cyclotomic::zeta(4, 1)) == "-i");
  CHECK(to_display_string(Cyclotomic::zeta(8, 2)) == "i");
  CHECK(to_display_string(Cyclotomic(1) + Cyclotomic::zeta(8, 1)) ==
        "1 + z8");
  CHECK(to_display_string(Cyclotomic::zeta(3, 1)) == "z3");
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(36) == 12);
}

TEST_CASE("matrix product, transpose, kronecker, trace") {
  const auto a = make_int_matrix(2, 2, {1, 2, 3, 4});
  const auto b = make_int_matrix(2, 2, {0, 1, 1, 0});
  CHECK(Mat<Int>::identity(2) * a == a);
  CHECK(a * Mat<Int>::identity(2) == a);
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
  CHECK((a * b).trace() == (b * a).trace());
  const auto k = kronecker(a, b);
  CHECK(k.rows() == 4);
  CHECK(k(0, 1) == 1);
  CHECK(k(0, 0) == 0);
  CHECK(kronecker(a, a).trace() == a.trace() * a.trace());
  CHECK_THROWS_AS(make_int_matrix(2, 2, {1, 2, 3, 4}) *
                      make_int_matrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}),
                  std::invalid_argument);
}

namespace {

void check_snf_contract(const Mat<Int>& a) {
  const SmithDecomposition snf = smith_normal_form(a);
  REQUIRE(snf.d.rows() == a.rows());
  REQUIRE(snf.d.cols() == a.cols());
  // u * a * v == d.
  CHECK(snf.u * a * snf.v == snf.d);
  // u, v unimodular (cofactor-expansion determinant oracle).
  Int du = testing::det_int(snf.u);
  Int dv = testing::det_int(snf.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  // d diagonal, nonnegative, divisibility chain.
  const std::size_t bound = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) CHECK(snf.d(i, j) == 0);
    }
  }
  for (std::size_t i = 0; i < bound; ++i) CHECK(snf.d(i, i) >= 0);
  for (std::size_t i = 0; i + 1 < bound; ++i) {
    if (snf.d(i, i) != 0) {
      CHECK(snf.d(i + 1, i + 1) % snf.d(i, i) == 0);
    } else {
      CHECK(snf.d(i + 1, i + 1) == 0);
    }
  }
  // Diagonal matches the independent minor-gcd characterization.
  const auto oracle = testing::invariant_factors_oracle(a);
  for (std::size_t i = 0; i < bound; ++i) CHECK(snf.d(i, i) == oracle[i]);
}

}  // namespace

TEST_CASE("smith normal form on fixed matrices") {
  const auto a = make_int_matrix(2, 2, {2, 4, 6, 8});
  check_snf_contract(a);
  const auto d = smith_normal_form(a).d;
  CHECK(d(0, 0) == 2);
  CHECK(d(1, 1) == 4);

  check_snf_contract(make_int_matrix(2, 2, {0, 0, 0, 0}));
  check_snf_contract(make_int_matrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
  check_snf_contract(make_int_matrix(2, 3, {2, 4, 4, -6, 6, 12}));
  check_snf_contract(make_int_matrix(3, 2, {1, 2, 3, 4, 5, 6}));
  check_snf_contract(make_int_matrix(3, 3, {3, 0, 0, 0, 5, 0, 0, 0, 7}));
  check_snf_contract(make_int_matrix(1, 1, {-4}));
}

TEST_CASE("smith normal form on seeded random matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = static_cast<std::size_t>(dim(rng));
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    Mat<Int> a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Int(entry(rng));
    }
    check_snf_contract(a);
  }
}

TEST_CASE("solve_mod finds solutions and detects unsolvable systems") {
  // 2x = 1/3 has the solution x = 1/6.
  {
    const auto a = make_int_matrix(1, 1, {2});
    const auto x = solve_mod(a, {QmodZ::of(1, 3)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] * Int(2) == QmodZ::of(1, 3));
  }
  // A zero row forces the corresponding entry to vanish.
  {
    const auto a = make_int_matrix(2, 2, {2, 0, 0, 0});
    CHECK(!solve_mod(a, {QmodZ::of(1, 2), QmodZ::of(1, 3)}).has_value());
    const auto x = solve_mod(a, {QmodZ::of(1, 2), QmodZ()});
    REQUIRE(x.has_value());
  }
  // Random consistent systems: r = a * x0 must always be solvable.
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<int> num(0, 11);
  for (int trial = 0; trial < 25; ++trial) {
    Mat<Int> a(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = Int(entry(rng));
    }
    std::vector<QmodZ> x0(3);
    for (auto& v : x0) v = QmodZ::of(num(rng), 12);
    std::vector<QmodZ> r(3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) r[i] = r[i] + x0[j] * a(i, j);
    }
    const auto x = solve_mod(a, r);
    REQUIRE(x.has_value());
    for (std::size_t i = 0; i < 3; ++i) {
      QmodZ acc;
      for (std::size_t j = 0; j < 3; ++j) acc = acc + (*x)[j] * a(i, j);
      CHECK(acc == r[i]);
    }
  }
}
