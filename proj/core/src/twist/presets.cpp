#include "repring/twist/presets.hpp"

namespace repring {

TwistData d8_example() {
  const GroupPtr g = dihedral_group(8);
  ExtensionData ext = make_extension(g, {0, 1, 2, 3});

  // Characters of the Klein subgroup in canonical order; the cocycle pairs
  // the second generator exponent of the first argument with the first
  // generator exponent of the second.
  Mat<QmodZ> alpha(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      alpha(i, j) = QmodZ::of(static_cast<long long>(i / 2) *
                                  static_cast<long long>(j % 2),
                              2);
    }
  }

  // Normalized cochain family: trivial on the identity coset; on the other
  // coset the value is a quarter turn per first-generator exponent.
  std::vector<std::vector<QmodZ>> z(2, std::vector<QmodZ>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    z[1][i] = QmodZ::of(static_cast<long long>(i / 2), 4);
  }

  return make_twist_with_z(std::move(ext), std::move(alpha), std::move(z));
}

KleinExample klein_example() {
  KleinExample out{character_table(klein_group()), Mat<QmodZ>(4, 4)};
  // Row r of the canonical table is the character (i, j) with i = r / 2,
  // j = r % 2 on the two generators; the pairing is the symmetric form
  // (i j' + j i') / 2.
  for (std::size_t r = 0; r < 4; ++r) {
    const long long ir = static_cast<long long>(r / 2);
    const long long jr = static_cast<long long>(r % 2);
    for (std::size_t t = 0; t < 4; ++t) {
      const long long it = static_cast<long long>(t / 2);
      const long long jt = static_cast<long long>(t % 2);
      out.pairing(r, t) = QmodZ::of(ir * jt + jr * it, 2);
    }
  }
  return out;
}

}  // namespace repring
