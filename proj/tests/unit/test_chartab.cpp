#include "doctest.h"

#include "repring/chartab/chartable.hpp"
#include "repring/chartab/matrixrep.hpp"
#include "repring/groups/abelian.hpp"
#include "repring/groups/extension.hpp"
#include "repring/groups/subgroups.hpp"
#include "support/oracles.hpp"

#include <random>
#include <vector>

using namespace repring;
using repring::testing::Float50;
using repring::testing::numeric_eval;

namespace {

GroupPtr s3() {
  return from_permutations("S3", 3, {{1, 2, 0}, {1, 0, 2}});
}

GroupPtr a4() {
  return from_permutations("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
}

GroupPtr s4() {
  return from_permutations("S4", 4, {{1, 2, 3, 0}, {1, 0, 2, 3}});
}

std::vector<GroupPtr> battery() {
  return {cyclic_group(1), cyclic_group(6),  klein_group(),
          dihedral_group(8), quaternion_group(), dihedral_group(12),
          direct_product(cyclic_group(2), cyclic_group(4)), s3(), a4(), s4()};
}

std::vector<GroupPtr> abelian_battery() {
  return {cyclic_group(1),
          cyclic_group(2),
          cyclic_group(3),
          cyclic_group(6),
          cyclic_group(7),
          cyclic_group(12),
          klein_group(),
          direct_product(cyclic_group(2), cyclic_group(4)),
          direct_product(cyclic_group(2),
                         direct_product(cyclic_group(2), cyclic_group(2))),
          direct_product(cyclic_group(2), cyclic_group(6))};
}

std::vector<Int> ints(std::initializer_list<long> v) {
  std::vector<Int> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

/// Row as plain integers, for tables whose values are all rational integers.
std::vector<long> int_row(const ClassFunction& f) {
  std::vector<long> out;
  for (const auto& v : f.values) {
    out.push_back(to_int64(rational_num(v.as_rational())));
  }
  return out;
}

}  // namespace

TEST_CASE("character tables satisfy both orthogonality relations exactly") {
  for (const auto& g : battery()) {
    CAPTURE(g->name);
    const auto t = character_table(g);
    const std::size_t r = t.size();
    REQUIRE(r == t.classes->num_classes());

    long long degree_sq = 0;
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(t.degrees[i] >= 1);
      // The degree is the value at the identity class.
      CHECK(t.irreducibles[i].values[0] == Cyclotomic(t.degrees[i]));
      degree_sq += static_cast<long long>(t.degrees[i]) * t.degrees[i];
    }
    CHECK(degree_sq == static_cast<long long>(g->order));

    // Trivial character first.
    for (std::size_t c = 0; c < r; ++c) {
      CHECK(t.irreducibles[0].values[c] == Cyclotomic(1));
    }

    // Row orthonormality.
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        CHECK(inner_product(t.irreducibles[i], t.irreducibles[j]) ==
              Cyclotomic(i == j ? 1 : 0));
      }
    }

    // Column orthogonality against centralizer orders.
    for (std::size_t c = 0; c < r; ++c) {
      for (std::size_t d = 0; d < r; ++d) {
        Cyclotomic acc;
        for (std::size_t j = 0; j < r; ++j) {
          acc += t.irreducibles[j].values[c] *
                 conjugate(t.irreducibles[j].values[d]);
        }
        const Cyclotomic expected(
            c == d ? Rational(t.classes->centralizer_orders[c])
                   : Rational(0));
        CHECK(acc == expected);
      }
    }

    // Canonical sorting: degrees ascending, then value order class by class.
    for (std::size_t i = 0; i + 1 < r; ++i) {
      bool ordered = t.degrees[i] < t.degrees[i + 1];
      if (t.degrees[i] == t.degrees[i + 1]) {
        for (std::size_t c = 0; c < r; ++c) {
          const int cmp = compare_values(t.irreducibles[i].values[c],
                                         t.irreducibles[i + 1].values[c]);
          if (cmp != 0) {
            ordered = cmp < 0;
            break;
          }
        }
      }
      CHECK(ordered);
    }
  }
}

TEST_CASE("column orthogonality holds under 50-digit numeric evaluation") {
  // Re-checks a sample of the exact identities through an independent
  // floating-point route.
  for (const auto& g : {dihedral_group(8), quaternion_group(), a4()}) {
    const auto t = character_table(g);
    const std::size_t r = t.size();
    for (std::size_t c = 0; c < r; ++c) {
      for (std::size_t d = 0; d < r; ++d) {
        Float50 re = 0, im = 0;
        for (std::size_t j = 0; j < r; ++j) {
          const auto [ar, ai] = numeric_eval(t.irreducibles[j].values[c]);
          const auto [br, bi] = numeric_eval(t.irreducibles[j].values[d]);
          re += ar * br + ai * bi;  // a * conj(b)
          im += ai * br - ar * bi;
        }
        const Float50 expected =
            c == d ? Float50(t.classes->centralizer_orders[c]) : Float50(0);
        CHECK(abs(re - expected) < Float50("1e-30"));
        CHECK(abs(im) < Float50("1e-30"));
      }
    }
  }
}

TEST_CASE("dihedral group of order 8 has the expected table") {
  const auto g = dihedral_group(8);
  const auto t = character_table(g);
  REQUIRE(t.size() == 5);
  CHECK(t.degrees == std::vector<long>{1, 1, 1, 1, 2});

  // Classes: {1}, {x, xy}, {y}, {q, yq}, {xq, xyq}.
  REQUIRE(t.classes->representatives ==
          std::vector<std::size_t>{0, 1, 2, 4, 5});
  CHECK(int_row(t.irreducibles[0]) == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(int_row(t.irreducibles[1]) == std::vector<long>{1, 1, 1, -1, -1});
  CHECK(int_row(t.irreducibles[2]) == std::vector<long>{1, -1, 1, 1, -1});
  CHECK(int_row(t.irreducibles[3]) == std::vector<long>{1, -1, 1, -1, 1});
  CHECK(int_row(t.irreducibles[4]) == std::vector<long>{2, 0, -2, 0, 0});
}

TEST_CASE("quaternion group has the expected table") {
  const auto t = character_table(quaternion_group());
  REQUIRE(t.size() == 5);
  CHECK(t.degrees == std::vector<long>{1, 1, 1, 1, 2});
  REQUIRE(t.classes->representatives ==
          std::vector<std::size_t>{0, 1, 2, 4, 6});
  CHECK(int_row(t.irreducibles[0]) == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(int_row(t.irreducibles[1]) == std::vector<long>{1, 1, 1, -1, -1});
  CHECK(int_row(t.irreducibles[2]) == std::vector<long>{1, 1, -1, 1, -1});
  CHECK(int_row(t.irreducibles[3]) == std::vector<long>{1, 1, -1, -1, 1});
  CHECK(int_row(t.irreducibles[4]) == std::vector<long>{2, -2, 0, 0, 0});
}

TEST_CASE("symmetric group on three points has the expected table") {
  const auto t = character_table(s3());
  REQUIRE(t.size() == 3);
  CHECK(t.degrees == std::vector<long>{1, 1, 2});
  CHECK(int_row(t.irreducibles[0]) == std::vector<long>{1, 1, 1});
  CHECK(int_row(t.irreducibles[1]) == std::vector<long>{1, 1, -1});
  CHECK(int_row(t.irreducibles[2]) == std::vector<long>{2, -1, 0});
}

TEST_CASE("Klein four-group has the expected table") {
  const auto t = character_table(klein_group());
  REQUIRE(t.size() == 4);
  CHECK(t.degrees == std::vector<long>{1, 1, 1, 1});
  CHECK(int_row(t.irreducibles[0]) == std::vector<long>{1, 1, 1, 1});
  CHECK(int_row(t.irreducibles[1]) == std::vector<long>{1, 1, -1, -1});
  CHECK(int_row(t.irreducibles[2]) == std::vector<long>{1, -1, 1, -1});
  CHECK(int_row(t.irreducibles[3]) == std::vector<long>{1, -1, -1, 1});
}

TEST_CASE("alternating group on four points mixes cube roots of unity") {
  const auto t = character_table(a4());
  REQUIRE(t.size() == 4);
  CHECK(t.degrees == std::vector<long>{1, 1, 1, 3});
  // The two nontrivial linear characters take primitive cube-root values
  // somewhere; the degree-3 character is rational everywhere.
  bool found_cube_root = false;
  for (std::size_t i = 1; i <= 2; ++i) {
    for (const auto& v : t.irreducibles[i].values) {
      if (!v.is_rational()) {
        CHECK(v.order() == 3);
        found_cube_root = true;
      }
    }
  }
  CHECK(found_cube_root);
  for (const auto& v : t.irreducibles[3].values) CHECK(v.is_rational());
}

TEST_CASE("symmetric group on four points has degrees 1,1,2,3,3") {
  const auto t = character_table(s4());
  REQUIRE(t.size() == 5);
  CHECK(t.degrees == std::vector<long>{1, 1, 2, 3, 3});
  for (const auto& row : t.irreducibles) {
    for (const auto& v : row.values) CHECK(v.is_rational());
  }
}

TEST_CASE("abelian tables agree between the generic and direct paths") {
  for (const auto& g : abelian_battery()) {
    CAPTURE(g->name);
    const auto generic = character_table(g);
    const auto direct = abelian_character_table(g);
    REQUIRE(generic.size() == direct.size());
    CHECK(generic.degrees == direct.degrees);
    for (std::size_t i = 0; i < generic.size(); ++i) {
      CHECK(generic.irreducibles[i] == direct.irreducibles[i]);
    }
  }
  CHECK_THROWS_WITH_AS(abelian_character_table(s3()), "not abelian",
                       std::invalid_argument);
}

TEST_CASE("decompose recovers coefficients and rejects non-characters") {
  for (const auto& g : battery()) {
    CAPTURE(g->name);
    const auto t = character_table(g);

    // The regular character decomposes with multiplicity = degree.
    ClassFunction regular;
    regular.classes = t.classes;
    regular.values.assign(t.size(), Cyclotomic(0));
    regular.values[0] = Cyclotomic(static_cast<long>(g->order));
    const auto reg_coeffs = decompose(t, regular);
    for (std::size_t j = 0; j < t.size(); ++j) {
      CHECK(reg_coeffs[j] == Int(t.degrees[j]));
    }

    // Round trip through combination, including negative coefficients.
    std::mt19937 rng(2024u + static_cast<unsigned>(g->order));
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Int> coeffs(t.size());
      for (auto& c : coeffs) c = Int(coeff(rng));
      CHECK(decompose(t, combination(t, coeffs)) == coeffs);
    }
  }

  // The indicator function of the identity class is not a virtual
  // character for any nontrivial group.
  const auto t = character_table(s3());
  ClassFunction indicator;
  indicator.classes = t.classes;
  indicator.values = {Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)};
  CHECK_THROWS_WITH_AS(decompose(t, indicator),
                       "non-integral coefficient at irreducible 0",
                       std::domain_error);
}

TEST_CASE("ring products decompose with the expected multiplicities") {
  const auto ts3 = character_table(s3());
  // std * std = trivial + sign + std.
  CHECK(ring_multiply(ts3, ints({0, 0, 1}), ints({0, 0, 1})) ==
        ints({1, 1, 1}));
  // sign * std = std.
  CHECK(ring_multiply(ts3, ints({0, 1, 0}), ints({0, 0, 1})) ==
        ints({0, 0, 1}));

  const auto td8 = character_table(dihedral_group(8));
  // W * W = sum of all four linear characters.
  CHECK(ring_multiply(td8, ints({0, 0, 0, 0, 1}), ints({0, 0, 0, 0, 1})) ==
        ints({1, 1, 1, 1, 0}));

  const auto tq8 = character_table(quaternion_group());
  CHECK(ring_multiply(tq8, ints({0, 0, 0, 0, 1}), ints({0, 0, 0, 0, 1})) ==
        ints({1, 1, 1, 1, 0}));
}

TEST_CASE("restriction to a subgroup decomposes in the subgroup table") {
  const auto g = s3();
  const auto t = character_table(g);
  const auto a3 = subgroup_from_elements(g, {0, 1, 3});
  const auto restricted = restrict_function(t.irreducibles[2], a3);
  const auto sub_table = character_table(a3.table);
  REQUIRE(sub_table.size() == 3);
  // The standard character restricted to the rotation subgroup splits into
  // the two nontrivial linear characters.
  CHECK(decompose(sub_table, restricted) == ints({0, 1, 1}));
}

TEST_CASE("one-dimensional representations realize table rows") {
  const auto g = dihedral_group(8);
  const auto t = character_table(g);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto rep = one_dimensional_rep(t, i);
    CHECK(rep.dimension == 1);
    CHECK(is_representation(rep));
    CHECK(character_of(rep, t.classes) == t.irreducibles[i]);
  }
  CHECK_THROWS_WITH_AS(one_dimensional_rep(t, 4), "not one-dimensional",
                       std::invalid_argument);
}

TEST_CASE("monomial representations induced from the Klein subgroup") {
  const auto g = dihedral_group(8);
  const auto t = character_table(g);
  const auto ext = make_extension(g, {0, 1, 2, 3});
  REQUIRE(ext.a_structure.generators == std::vector<std::size_t>{2, 1});

  // Exponents (0,1) give the character that is fixed by conjugation; the
  // induced representation splits into two linear characters.
  const auto fixed = induced_rep(ext, {0, 1});
  CHECK(fixed.dimension == 2);
  CHECK(is_representation(fixed));
  CHECK(decompose(t, character_of(fixed, t.classes)) ==
        ints({0, 0, 1, 1, 0}));

  // Exponents (1,0) give a character moved by conjugation; induction is
  // irreducible of degree 2.
  const auto moved = induced_rep(ext, {1, 0});
  CHECK(moved.dimension == 2);
  CHECK(is_representation(moved));
  CHECK(decompose(t, character_of(moved, t.classes)) ==
        ints({0, 0, 0, 0, 1}));
  CHECK(character_of(moved, t.classes) == t.irreducibles[4]);
}

TEST_CASE("induction from the rotation subgroup of S3") {
  const auto g = s3();
  const auto t = character_table(g);
  const auto ext = make_extension(g, {0, 1, 3});

  const auto nontrivial = induced_rep(ext, {1});
  CHECK(is_representation(nontrivial));
  CHECK(decompose(t, character_of(nontrivial, t.classes)) ==
        ints({0, 0, 1}));

  const auto trivial = induced_rep(ext, {0});
  CHECK(is_representation(trivial));
  CHECK(decompose(t, character_of(trivial, t.classes)) == ints({1, 1, 0}));
}
