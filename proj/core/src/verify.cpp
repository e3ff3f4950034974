#include "repring/verify.hpp"

#include "repring/chartab/chartable.hpp"
#include "repring/chartab/classfun.hpp"
#include "repring/chartab/matrixrep.hpp"
#include "repring/groups/catalog.hpp"
#include "repring/groups/extension.hpp"
#include "repring/groups/subgroups.hpp"
#include "repring/lambdaring/adams.hpp"
#include "repring/lambdaring/cyclictrace.hpp"
#include "repring/lambdaring/ringinv.hpp"
#include "repring/lambdaring/ringiso.hpp"
#include "repring/twist/cocycle.hpp"
#include "repring/twist/presets.hpp"
#include "repring/twist/twistbuild.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace repring {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult run_check(int id, std::string name, long long budget_ms,
                      const std::function<bool(std::ostringstream&)>& body) {
  CheckResult result;
  result.id = id;
  result.name = std::move(name);
  std::ostringstream detail;
  const auto start = Clock::now();
  try {
    result.passed = body(detail);
  } catch (const std::exception& e) {
    result.passed = false;
    detail << " threw: " << e.what();
  }
  result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          Clock::now() - start)
                          .count();
  if (budget_ms > 0 && result.elapsed_ms > budget_ms) {
    result.passed = false;
    detail << " [exceeded " << budget_ms << " ms budget]";
  }
  result.detail = detail.str();
  return result;
}

struct SweepEntry {
  std::string name;
  GroupPtr group;
  std::vector<std::size_t> subgroup;
};

// Catalog groups of order <= 16 with a normal four-element elementary
// abelian subgroup carrying an invariant nondegenerate pairing class.
std::vector<SweepEntry> sweep_entries() {
  std::vector<SweepEntry> out;
  out.push_back({"Klein", catalog_group("Klein"), {0, 1, 2, 3}});
  out.push_back({"C2xC4", catalog_group("C2xC4"), {0, 2, 4, 6}});
  out.push_back({"C2xC2xC2", catalog_group("C2xC2xC2"), {0, 1, 2, 3}});
  out.push_back({"D8", catalog_group("D8"), {0, 1, 2, 3}});
  out.push_back({"D8xC2", catalog_group("D8xC2"), {0, 2, 4, 6}});
  return out;
}

std::vector<Int> int_row(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (const long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Int> matrix_row(const Mat<Int>& m, std::size_t i) {
  std::vector<Int> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out[j] = m(i, j);
  return out;
}

bool check_dihedral_golden(std::ostringstream& detail) {
  bool ok = true;

  // The enumerated invariant nondegenerate class is unique and matches the
  // generator-exponent product pattern.
  ExtensionData ext = make_extension(dihedral_group(8), {0, 1, 2, 3});
  const auto found = enumerate_invariant_nondegenerate(ext);
  ok = ok && found.size() == 1;
  if (ok) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        ok = ok && found[0](i, j) ==
                       QmodZ::of(static_cast<long long>(i / 2) *
                                     static_cast<long long>(j % 2),
                                 2);
      }
    }
  }

  // The normalized cochain family pins the quotient cocycle to the center.
  const TwistData twist = d8_example();
  ok = ok && twist.alpha == found[0];
  ok = ok && twist.b[1][1] == 2 && twist.ext.g->labels[2] == "y";
  for (std::size_t phi = 0; phi < 4; ++phi) {
    ok = ok && twist.z[0][phi].is_zero();
    ok = ok && twist.z[1][phi] == QmodZ::of(static_cast<long long>(phi / 2), 4);
  }

  // Degree-2 squares on both sides of the twist.
  const CharacterTable table = character_table(twist.ext.g);
  ok = ok && table.degrees == std::vector<long>{1, 1, 1, 1, 2};
  const Mat<Int> squares = adams_matrix(table, 2);
  ok = ok && matrix_row(squares, 4) == int_row({1, 1, 1, -1, 0});

  const CharacterTable twisted_table = character_table(twist.twisted);
  const AdamsComparison cmp = compare_adams(table, twisted_table, 2);
  const Mat<Int> twisted_squares = adams_matrix(twisted_table, 2);
  std::vector<Int> twisted_row(5);
  for (std::size_t j = 0; j < 5; ++j) {
    twisted_row[j] = twisted_squares(cmp.matching[4], cmp.matching[j]);
  }
  ok = ok && twisted_row == int_row({1, 1, -1, 1, 0});
  ok = ok && matrix_row(cmp.difference, 4) == int_row({0, 0, 2, -2, 0});

  detail << "unique pairing class, central quotient cocycle, and both "
            "degree-2 square decompositions verified";
  return ok;
}

bool check_odd_operations(std::ostringstream& detail) {
  bool ok = true;

  const TwistData twist = d8_example();
  const CharacterTable original = character_table(twist.ext.g);
  const CharacterTable other = character_table(twist.twisted);
  for (const long long k : {1LL, 3LL, 5LL, 7LL}) {
    ok = ok && compare_adams(original, other, k).equal;
  }
  ok = ok && !compare_adams(original, other, 2).equal;

  std::size_t twists = 1;
  for (const auto& entry : sweep_entries()) {
    ExtensionData ext = make_extension(entry.group, entry.subgroup);
    const auto cocycles = enumerate_invariant_nondegenerate(ext);
    ok = ok && !cocycles.empty();
    if (cocycles.empty()) continue;
    const TwistData t = make_twist(std::move(ext), cocycles[0]);
    ++twists;
    const CharacterTable base = character_table(entry.group);
    const CharacterTable twisted = character_table(t.twisted);
    const std::size_t exponent = conjugacy_data(entry.group)->exponent;
    for (std::size_t k = 1; k < exponent; k += 2) {
      ok = ok &&
           compare_adams(base, twisted, static_cast<long long>(k)).equal;
    }
  }
  detail << twists
         << " twists checked: odd operations equal, the dihedral square "
            "differs";
  return ok;
}

bool check_based_isomorphisms(std::ostringstream& detail) {
  const CharacterTable d8 = character_table(catalog_group("D8"));
  const CharacterTable q8 = character_table(catalog_group("Q8"));
  const auto isos = based_ring_isomorphisms(d8, q8);
  bool ok = !isos.empty();
  for (const auto& pi : isos) {
    ok = ok && !commutes_with_adams(d8, q8, pi, 2);
  }
  detail << isos.size()
         << " based isomorphisms found; none commutes with the square "
            "operation";
  return ok;
}

bool check_abelian_twisted(std::ostringstream& detail) {
  const KleinExample example = klein_example();
  bool ok = true;
  for (long long k = 0; k <= 3; ++k) {
    ok = ok && twisted_adams_abelian(example.table, example.pairing, k) ==
                   adams_matrix(example.table, k);
  }
  for (const long long k : {1LL, 3LL}) {
    ok = ok && twisted_adams_abelian(example.table, example.pairing, k) ==
                   Mat<Int>::identity(4);
  }
  for (const long long k : {2LL, 4LL}) {
    const Mat<Int> m =
        twisted_adams_abelian(example.table, example.pairing, k);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        ok = ok && m(i, j) == Int(j == 0 ? 1 : 0);
      }
    }
  }
  detail << "pairing-twisted operations match the plain ones for k = 0..3, "
            "odd k is the identity, even k lands on the unit row";
  return ok;
}

bool check_ring_recovery(std::ostringstream& detail) {
  bool ok = true;
  for (const auto& name : catalog_names()) {
    const GroupPtr g = catalog_group(name);
    const CharacterTable t = character_table(g);
    ok = ok && order_from_ring(t) == Int(g->order);
    ok = ok && exponent_from_ring(t) ==
                   static_cast<long long>(conjugacy_data(g)->exponent);
  }
  detail << catalog_names().size()
         << " catalog groups: ring-derived order and exponent both match";
  return ok;
}

bool check_operation_algebra(std::ostringstream& detail) {
  bool ok = true;
  std::size_t naturality_pairs = 0;

  for (const auto& name : catalog_names()) {
    const GroupPtr g = catalog_group(name);
    const CharacterTable t = character_table(g);
    const auto classes = t.classes;
    const std::size_t exponent = classes->exponent;

    // Composition of the power operations.
    std::vector<Mat<Int>> mats;
    for (std::size_t k = 0; k < 2 * exponent; ++k) {
      mats.push_back(adams_matrix(t, static_cast<long long>(k)));
    }
    for (std::size_t m = 0; m < exponent; ++m) {
      for (std::size_t n = 0; n < exponent; ++n) {
        ok = ok && mats[m] * mats[n] ==
                       adams_matrix(t, static_cast<long long>(m * n));
      }
    }

    // Congruence against the p-th ring power on basis elements.
    for (const long long p : {2LL, 3LL, 5LL}) {
      const Mat<Int> mp = adams_matrix(t, p);
      for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<Int> basis(t.size(), Int(0));
        basis[i] = 1;
        std::vector<Int> coeffs = basis;
        for (long long step = 1; step < p; ++step) {
          coeffs = ring_multiply(t, coeffs, basis);
        }
        for (std::size_t j = 0; j < t.size(); ++j) {
          ok = ok && (mp(i, j) - coeffs[j]) % p == 0;
        }
      }
    }

    // Naturality of the operations under restriction to every subgroup.
    for (const auto& elements : all_subgroups(g)) {
      const SubgroupTable h = subgroup_from_elements(g, elements);
      const CharacterTable th = character_table(h.table);
      ++naturality_pairs;
      for (const long long k : {2LL, 3LL}) {
        const Mat<Int> mh = adams_matrix(th, k);
        for (const auto& chi : t.irreducibles) {
          ClassFunction powered{classes, {}};
          powered.values.reserve(classes->classes.size());
          for (std::size_t c = 0; c < classes->classes.size(); ++c) {
            powered.values.push_back(chi.values[classes->power_class(c, k)]);
          }
          const std::vector<Int> lhs =
              decompose(th, restrict_function(powered, h));
          const std::vector<Int> rhs = apply_operation(
              mh, decompose(th, restrict_function(chi, h)));
          ok = ok && lhs == rhs;
        }
      }
    }
  }
  detail << "composition, prime-power congruences, integrality, and "
            "restriction naturality across "
         << naturality_pairs << " subgroup pairs";
  return ok;
}

bool check_trace_identity(std::ostringstream& detail, long long seed) {
  std::mt19937 rng(static_cast<std::mt19937::result_type>(7912 + seed));
  std::uniform_int_distribution<int> size_dist(1, 3);
  std::uniform_int_distribution<int> power_dist(1, 4);
  std::uniform_int_distribution<int> num_dist(-10, 10);
  std::uniform_int_distribution<int> den_dist(1, 10);

  auto random_matrix = [&](std::size_t n) {
    Mat<Cyclotomic> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = Cyclotomic(Rational(num_dist(rng), den_dist(rng)));
      }
    }
    return m;
  };

  bool ok = true;
  for (int caseno = 0; caseno < 200; ++caseno) {
    const std::size_t na = static_cast<std::size_t>(size_dist(rng));
    const std::size_t nb = static_cast<std::size_t>(size_dist(rng));
    const int k = power_dist(rng);
    const Mat<Cyclotomic> a = random_matrix(na);
    const Mat<Cyclotomic> b = random_matrix(nb);
    Mat<Cyclotomic> bk = b;
    for (int t = 1; t < k; ++t) bk = bk * b;
    const Cyclotomic expected = a.trace() * bk.trace();
    ok = ok && cyclic_tensor_trace(a, b, k) == expected;
  }
  detail << "200 randomized cases match the product of plain traces";
  return ok;
}

bool check_trace_route(std::ostringstream& detail) {
  const GroupPtr g = catalog_group("D8");
  const ExtensionData ext = make_extension(g, {0, 1, 2, 3});
  const CharacterTable t = character_table(g);

  std::vector<MatrixRep> reps;
  for (std::size_t i = 0; i < 4; ++i) {
    reps.push_back(one_dimensional_rep(t, i));
  }
  reps.push_back(induced_rep(ext, {1, 0}));

  bool ok = is_representation(reps[4]);
  ok = ok && character_of(reps[4], t.classes) == t.irreducibles[4];

  for (const long long k : {2LL, 3LL}) {
    const Mat<Int> m = adams_matrix(t, k);
    for (std::size_t j = 0; j < t.size(); ++j) {
      const Cyclotomic via_traces = hom_cyclic_trace(reps[4], reps[j], k);
      ok = ok && via_traces == Cyclotomic(Rational(m(4, j)));
    }
  }
  detail << "cyclic-trace route reproduces the degree-2 source rows for "
            "k = 2, 3";
  return ok;
}

bool check_twisted_characters(std::ostringstream& detail) {
  bool ok = true;
  std::size_t characters = 0;

  std::vector<TwistData> twists;
  twists.push_back(d8_example());
  for (const auto& entry : sweep_entries()) {
    ExtensionData ext = make_extension(entry.group, entry.subgroup);
    const auto cocycles = enumerate_invariant_nondegenerate(ext);
    if (cocycles.empty()) {
      ok = false;
      continue;
    }
    twists.push_back(make_twist(std::move(ext), cocycles[0]));
  }

  for (const auto& twist : twists) {
    const CharacterTable table = character_table(twist.ext.g);
    for (const auto& chi : table.irreducibles) {
      ++characters;
      const auto values = twisted_character(twist, chi);
      for (std::size_t e = 0; e < twist.ext.g->order; ++e) {
        ok = ok && values[e] == chi.at_element(e);
      }
    }
  }
  detail << characters
         << " irreducibles keep their values across the constructed twists";
  return ok;
}

bool check_table_integrity(std::ostringstream& detail) {
  bool ok = true;
  std::size_t abelian_entries = 0;

  for (const auto& name : catalog_names()) {
    const GroupPtr g = catalog_group(name);
    const CharacterTable t = character_table(g);
    const auto& classes = *t.classes;
    const std::size_t r = t.size();

    Int degree_sum = 0;
    for (const auto& d : t.degrees) degree_sum += d * d;
    ok = ok && degree_sum == Int(g->order);

    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        const Cyclotomic ip =
            inner_product(t.irreducibles[i], t.irreducibles[j]);
        ok = ok && ip == Cyclotomic(i == j ? 1 : 0);
      }
    }
    for (std::size_t c = 0; c < r; ++c) {
      for (std::size_t d = 0; d < r; ++d) {
        Cyclotomic acc;
        for (std::size_t i = 0; i < r; ++i) {
          acc += t.irreducibles[i].values[c] *
                 conjugate(t.irreducibles[i].values[d]);
        }
        const Cyclotomic expected(
            c == d ? Rational(static_cast<long>(classes.centralizer_orders[c]))
                   : Rational(0));
        ok = ok && acc == expected;
      }
    }

    std::vector<std::size_t> everything(g->order);
    for (std::size_t e = 0; e < g->order; ++e) everything[e] = e;
    if (is_abelian_subset(*g, everything)) {
      ++abelian_entries;
      const CharacterTable direct = abelian_character_table(g);
      ok = ok && direct.size() == t.size();
      for (std::size_t i = 0; i < r && ok; ++i) {
        ok = direct.irreducibles[i].values == t.irreducibles[i].values;
      }
    }
  }
  detail << "orthogonality and degree sums on every catalog group; "
         << abelian_entries
         << " abelian entries agree with the direct construction";
  return ok;
}

}  // namespace

std::vector<CheckResult> run_verification_suite(long long seed) {
  std::vector<CheckResult> results;
  results.push_back(run_check(1, "dihedral golden path", 1000,
                              check_dihedral_golden));
  results.push_back(
      run_check(2, "odd operations across twists", 30000,
                check_odd_operations));
  results.push_back(run_check(3, "based isomorphisms break at the square",
                              1000, check_based_isomorphisms));
  results.push_back(
      run_check(4, "abelian twisted operations", 0, check_abelian_twisted));
  results.push_back(
      run_check(5, "ring-derived order and exponent", 0, check_ring_recovery));
  results.push_back(run_check(6, "operation algebra and naturality", 60000,
                              check_operation_algebra));
  results.push_back(run_check(7, "cyclic trace identity", 0,
                              [seed](std::ostringstream& detail) {
                                return check_trace_identity(detail, seed);
                              }));
  results.push_back(run_check(8, "trace route equals operation matrices", 0,
                              check_trace_route));
  results.push_back(
      run_check(9, "twisted characters fixed", 0, check_twisted_characters));
  results.push_back(run_check(10, "table orthogonality and cross-path",
                              30000, check_table_integrity));
  return results;
}

}  // namespace repring
