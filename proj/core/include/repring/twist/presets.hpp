#pragma once

#include "repring/twist/twistbuild.hpp"

namespace repring {

/// The dihedral-group twist over its central Klein subgroup, with the
/// explicit cocycle and normalized cochain family that exchange the two
/// order-4 behaviours of the reflections. Bit-reproducible.
TwistData d8_example();

/// The Klein four-group with the nontrivial symmetric pairing on its
/// character table rows, for the abelian twisted Adams computation.
struct KleinExample {
  CharacterTable table;
  Mat<QmodZ> pairing;
};
KleinExample klein_example();

}  // namespace repring
