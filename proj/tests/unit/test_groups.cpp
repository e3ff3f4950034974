#include "repring/groups/abelian.hpp"
#include "repring/groups/conjugacy.hpp"
#include "repring/groups/extension.hpp"
#include "repring/groups/group.hpp"
#include "repring/groups/subgroups.hpp"

#include "doctest.h"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

using namespace repring;

namespace {

std::vector<GroupPtr> battery() {
  return {cyclic_group(1),     cyclic_group(6),
          klein_group(),       dihedral_group(8),
          quaternion_group(),  dihedral_group(12),
          direct_product(cyclic_group(2), cyclic_group(4)),
          from_permutations("S3", 3, {{1, 2, 0}, {1, 0, 2}})};
}

// Brute-force group-law check, independent of make_group's Light's test.
void check_group_axioms(const GroupPtr& g) {
  const std::size_t n = g->order;
  for (std::size_t a = 0; a < n; ++a) {
    CHECK(g->mul[0][a] == a);
    CHECK(g->mul[a][0] == a);
    CHECK(g->mul[a][g->inv[a]] == 0);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        CHECK(g->mul[g->mul[a][b]][c] == g->mul[a][g->mul[b][c]]);
      }
    }
  }
}

}  // namespace

TEST_CASE("make_group validates and normalizes tables") {
  // A valid C2 table with the identity at index 1 gets relabeled.
  const auto g = make_group("swap", {{1, 0}, {0, 1}}, {"t", "e"});
  CHECK(g->mul[0][0] == 0);
  CHECK(g->labels[0] == "e");
  CHECK(g->labels[1] == "t");
  CHECK(g->inv[1] == 1);

  CHECK_THROWS_WITH_AS(make_group("bad", {}),
                       "malformed multiplication table",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_group("bad", {{0, 1}, {1}}),
                       "malformed multiplication table",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_group("bad", {{0, 5}, {1, 0}}),
                       "malformed multiplication table",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_group("bad", {{1, 1}, {1, 1}}), "no identity",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_group("bad", {{0, 1}, {1, 1}}),
                       "no inverse for 1", std::invalid_argument);

  // An associativity failure is reported with a genuine counterexample.
  try {
    make_group("bad", {{0, 1, 2}, {1, 0, 0}, {2, 0, 1}});
    FAIL("expected an associativity error");
  } catch (const std::invalid_argument& err) {
    const std::string msg = err.what();
    CHECK(msg.rfind("not associative at (", 0) == 0);
    std::size_t i, j, k;
    REQUIRE(std::sscanf(msg.c_str(), "not associative at (%zu,%zu,%zu)", &i,
                        &j, &k) == 3);
    const std::vector<std::vector<std::size_t>> m = {
        {0, 1, 2}, {1, 0, 0}, {2, 0, 1}};
    CHECK(m[m[i][j]][k] != m[i][m[j][k]]);
  }
}

TEST_CASE("preset groups satisfy the axioms") {
  for (const auto& g : battery()) {
    INFO(g->name);
    check_group_axioms(g);
  }
  CHECK(cyclic_group(6)->order == 6);
  CHECK(klein_group()->order == 4);
  CHECK(dihedral_group(8)->order == 8);
  CHECK(dihedral_group(12)->order == 12);
  CHECK(quaternion_group()->order == 8);
}

TEST_CASE("dihedral order-8 presentation pins x, y, q") {
  const auto d8 = dihedral_group(8);
  CHECK(d8->labels ==
        std::vector<std::string>{"1", "x", "y", "xy", "q", "xq", "yq", "xyq"});
  // q x = xy q, y central, all of x, y, q are involutions.
  CHECK(d8->mul[4][1] == 7);
  CHECK(d8->mul[1][1] == 0);
  CHECK(d8->mul[2][2] == 0);
  CHECK(d8->mul[4][4] == 0);
  for (std::size_t a = 0; a < 8; ++a) {
    CHECK(d8->mul[2][a] == d8->mul[a][2]);
  }
  CHECK(center(*d8) == std::vector<std::size_t>{0, 2});
  // xyq has order 4 (it plays the role of the rotation).
  CHECK(element_order(*d8, 7) == 4);
}

TEST_CASE("quaternion unit multiplication") {
  const auto q8 = quaternion_group();
  // i*j = k, j*i = -k, i*i = -1, (-1)^2 = 1.
  CHECK(q8->mul[2][4] == 6);
  CHECK(q8->mul[4][2] == 7);
  CHECK(q8->mul[2][2] == 1);
  CHECK(q8->mul[1][1] == 0);
  CHECK(element_order(*q8, 1) == 2);
  for (std::size_t u : {2, 3, 4, 5, 6, 7}) CHECK(element_order(*q8, u) == 4);
  CHECK(center(*q8) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("permutation groups enumerate breadth-first") {
  const auto s3 = from_permutations("S3", 3, {{1, 2, 0}, {1, 0, 2}});
  REQUIRE(s3->order == 6);
  CHECK(s3->labels ==
        std::vector<std::string>{"e", "(0 1 2)", "(0 1)", "(0 2 1)", "(0 2)",
                                 "(1 2)"});
  check_group_axioms(s3);

  // Trivial group from no generators.
  CHECK(from_permutations("triv", 4, {})->order == 1);

  // Errors.
  CHECK_THROWS_WITH_AS(from_permutations("bad", 3, {{0, 0, 1}}),
                       "malformed permutation", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      from_permutations("big", 11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0}}, 10),
      "order exceeds limit", std::runtime_error);
}

TEST_CASE("element powers against naive repetition") {
  for (const auto& g : battery()) {
    INFO(g->name);
    for (std::size_t a = 0; a < g->order; ++a) {
      CHECK(power(*g, a, -1) == g->inv[a]);
      std::size_t acc = 0;
      for (long long k = 0; k <= 12; ++k) {
        CHECK(power(*g, a, k) == acc);
        CHECK(power(*g, a, -k) == g->inv[acc]);
        acc = g->mul[acc][a];
      }
      const std::size_t ord = element_order(*g, a);
      CHECK(power(*g, a, static_cast<long long>(ord)) == 0);
      CHECK(g->order % ord == 0);
    }
  }
}

TEST_CASE("direct products") {
  const auto g = direct_product(cyclic_group(2), cyclic_group(4));
  CHECK(g->name == "C2xC4");
  CHECK(g->order == 8);
  CHECK(g->labels[5] == "(g,g)");
  check_group_axioms(g);
  CHECK(element_order(*g, 5) == 4);  // lcm(2, 4)
  CHECK(element_order(*g, 4) == 2);
}

TEST_CASE("conjugacy classes are canonical and consistent") {
  for (const auto& g : battery()) {
    INFO(g->name);
    const auto conj = conjugacy_data(g);
    // Class equation and canonical ordering.
    std::size_t total = 0;
    std::size_t prev_min = 0;
    for (std::size_t c = 0; c < conj->num_classes(); ++c) {
      const auto& cls = conj->classes[c];
      total += cls.size();
      CHECK(std::is_sorted(cls.begin(), cls.end()));
      CHECK(cls.front() == conj->representatives[c]);
      if (c > 0) CHECK(cls.front() > prev_min);
      prev_min = cls.front();
      CHECK(conj->centralizer_orders[c] * cls.size() == g->order);
      // Centralizer order against a brute count.
      std::size_t commuting = 0;
      for (std::size_t x = 0; x < g->order; ++x) {
        if (g->mul[x][cls.front()] == g->mul[cls.front()][x]) ++commuting;
      }
      CHECK(commuting == conj->centralizer_orders[c]);
      // Classes are closed under conjugation.
      for (std::size_t h : cls) {
        CHECK(conj->class_of[h] == c);
        for (std::size_t x = 0; x < g->order; ++x) {
          const std::size_t y = g->mul[g->mul[x][h]][g->inv[x]];
          CHECK(conj->class_of[y] == c);
        }
      }
    }
    CHECK(total == g->order);
    CHECK(conj->classes[0] == std::vector<std::size_t>{0});

    // Exponent is the lcm of the element orders.
    std::size_t exp = 1;
    for (std::size_t a = 0; a < g->order; ++a) {
      exp = std::lcm(exp, element_order(*g, a));
    }
    CHECK(conj->exponent == exp);

    // power_class and inverse_class against direct element computation.
    for (std::size_t c = 0; c < conj->num_classes(); ++c) {
      for (long long k = -5; k <= 10; ++k) {
        for (std::size_t h : conj->classes[c]) {
          CHECK(conj->power_class(c, k) == conj->class_of[power(*g, h, k)]);
        }
      }
      CHECK(conj->inverse_class(c) ==
            conj->class_of[g->inv[conj->representatives[c]]]);
    }
  }
}

TEST_CASE("conjugacy golden data") {
  const auto s3 = from_permutations("S3", 3, {{1, 2, 0}, {1, 0, 2}});
  const auto conj = conjugacy_data(s3);
  REQUIRE(conj->num_classes() == 3);
  CHECK(conj->classes[0] == std::vector<std::size_t>{0});
  CHECK(conj->classes[1] == std::vector<std::size_t>{1, 3});
  CHECK(conj->classes[2] == std::vector<std::size_t>{2, 4, 5});
  CHECK(conj->exponent == 6);

  CHECK(conjugacy_data(dihedral_group(8))->num_classes() == 5);
  CHECK(conjugacy_data(quaternion_group())->num_classes() == 5);
  CHECK(conjugacy_data(dihedral_group(8))->exponent == 4);
  CHECK(conjugacy_data(klein_group())->exponent == 2);
}

TEST_CASE("subgroup closure and wrapping") {
  const auto d8 = dihedral_group(8);
  CHECK(closure(*d8, {}) == std::vector<std::size_t>{0});
  CHECK(closure(*d8, {1, 2}) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(closure(*d8, {4, 1}).size() == 8);

  const auto klein = subgroup_from_elements(d8, {0, 1, 2, 3});
  CHECK(klein.elements == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(klein.table->order == 4);
  CHECK(klein.local(2) == 2);
  CHECK(klein.local(7) == SubgroupTable::npos);
  check_group_axioms(klein.table);

  CHECK_THROWS_WITH_AS(subgroup_from_elements(d8, {0, 4, 1}), "H not closed",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(subgroup_from_elements(d8, {1, 2}), "H not closed",
                       std::invalid_argument);
}

TEST_CASE("subgroup lattices") {
  const auto s3 = from_permutations("S3", 3, {{1, 2, 0}, {1, 0, 2}});
  CHECK(all_subgroups(s3).size() == 6);
  CHECK(all_subgroups(dihedral_group(8)).size() == 10);
  CHECK(all_subgroups(klein_group()).size() == 5);
  CHECK(all_subgroups(quaternion_group()).size() == 6);

  // Every listed subgroup really is closed; the list is sorted by size.
  const auto subs = all_subgroups(dihedral_group(8));
  std::size_t prev = 1;
  for (const auto& h : subs) {
    CHECK(h.size() >= prev);
    prev = h.size();
    CHECK_NOTHROW(subgroup_from_elements(dihedral_group(8), h));
    CHECK(8 % h.size() == 0);
  }

  const auto nab_s3 = normal_abelian_subgroups(s3);
  REQUIRE(nab_s3.size() == 2);
  CHECK(nab_s3[0] == std::vector<std::size_t>{0});
  CHECK(nab_s3[1] == std::vector<std::size_t>{0, 1, 3});

  const auto nab_d8 = normal_abelian_subgroups(dihedral_group(8));
  CHECK(nab_d8.size() == 5);
  for (const auto& h : nab_d8) {
    CHECK(is_normal(*dihedral_group(8), h));
    CHECK(is_abelian_subset(*dihedral_group(8), h));
  }
  // The whole group appears when abelian.
  const auto nab_klein = normal_abelian_subgroups(klein_group());
  CHECK(nab_klein.size() == 5);
  CHECK(nab_klein.back().size() == 4);

  CHECK(normal_abelian_subgroups(quaternion_group()).size() == 5);
}

TEST_CASE("abelian invariant factors") {
  const auto check_factors = [](const GroupPtr& g,
                                const std::vector<std::size_t>& want) {
    const auto a = abelian_structure(full_subgroup(g));
    CHECK(a.invariant_factors == want);
    // Ascending divisibility chain.
    for (std::size_t i = 0; i + 1 < a.rank(); ++i) {
      CHECK(a.invariant_factors[i + 1] % a.invariant_factors[i] == 0);
    }
    // Generators have the stated orders and coordinates are a bijection.
    std::size_t prod = 1;
    for (std::size_t i = 0; i < a.rank(); ++i) {
      CHECK(element_order(*g, a.subgroup.elements[a.generators[i]]) ==
            a.invariant_factors[i]);
      prod *= a.invariant_factors[i];
    }
    CHECK(prod == g->order);
  };
  check_factors(cyclic_group(12), {12});
  check_factors(cyclic_group(1), {});
  check_factors(klein_group(), {2, 2});
  check_factors(direct_product(cyclic_group(2), cyclic_group(4)), {2, 4});
  check_factors(direct_product(cyclic_group(2),
                               direct_product(cyclic_group(2),
                                              cyclic_group(2))),
                {2, 2, 2});
  check_factors(direct_product(cyclic_group(2), cyclic_group(6)), {2, 6});
  check_factors(direct_product(cyclic_group(3), cyclic_group(4)), {12});

  CHECK_THROWS_WITH_AS(abelian_structure(full_subgroup(dihedral_group(8))),
                       "not abelian", std::invalid_argument);
}

TEST_CASE("abelian structure of the Klein four-subgroup in the dihedral "
          "group pins generator order") {
  const auto d8 = dihedral_group(8);
  const auto a = abelian_structure(subgroup_from_elements(d8, {0, 1, 2, 3}));
  CHECK(a.invariant_factors == std::vector<std::size_t>{2, 2});
  // Extraction picks x first, so after the ascending-order reversal the
  // generator list is (y, x) in local indices.
  CHECK(a.generators == std::vector<std::size_t>{2, 1});
  CHECK(a.coords[0] == std::vector<std::size_t>{0, 0});
  CHECK(a.coords[1] == std::vector<std::size_t>{0, 1});  // x
  CHECK(a.coords[2] == std::vector<std::size_t>{1, 0});  // y
  CHECK(a.coords[3] == std::vector<std::size_t>{1, 1});  // xy
}

TEST_CASE("abelian character evaluation is additive") {
  const auto g = direct_product(cyclic_group(2), cyclic_group(4));
  const auto a = abelian_structure(full_subgroup(g));
  const std::vector<long long> phi = {1, 3};
  for (std::size_t u = 0; u < g->order; ++u) {
    for (std::size_t v = 0; v < g->order; ++v) {
      CHECK(character_eval(a, phi, g->mul[u][v]) ==
            character_eval(a, phi, u) + character_eval(a, phi, v));
    }
  }
  CHECK(character_eval(a, phi, 0).is_zero());
  CHECK_THROWS_AS(character_eval(a, {1}, 0), std::invalid_argument);
}

TEST_CASE("extensions split the dihedral group over its Klein subgroup") {
  const auto d8 = dihedral_group(8);
  const auto ext = make_extension(d8, {0, 1, 2, 3});
  CHECK(ext.quotient->order == 2);
  CHECK(ext.section == std::vector<std::size_t>{0, 4});
  for (std::size_t x = 0; x < 8; ++x) {
    CHECK(ext.projection[x] == (x < 4 ? 0 : 1));
  }
  // Projection is a homomorphism.
  for (std::size_t x = 0; x < 8; ++x) {
    for (std::size_t y = 0; y < 8; ++y) {
      CHECK(ext.projection[d8->mul[x][y]] ==
            ext.quotient->mul[ext.projection[x]][ext.projection[y]]);
    }
  }

  const auto s3 = from_permutations("S3", 3, {{1, 2, 0}, {1, 0, 2}});
  CHECK_THROWS_WITH_AS(make_extension(s3, {0, 2}), "not normal",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_extension(s3, {0, 1, 2, 3, 4, 5}), "not abelian",
                       std::invalid_argument);

  // A bigger case: the quotient of C2xC4 by its diagonal-ish C2.
  const auto g = direct_product(cyclic_group(2), cyclic_group(4));
  const auto e2 = make_extension(g, {0, 2});  // (0, g^2)
  CHECK(e2.quotient->order == 4);
  check_group_axioms(e2.quotient);
}
