#include "repring/chartab/matrixrep.hpp"

#include "repring/groups/abelian.hpp"

#include <stdexcept>

namespace repring {

MatrixRep one_dimensional_rep(const CharacterTable& t, std::size_t index) {
  if (t.degrees.at(index) != 1) {
    throw std::invalid_argument("not one-dimensional");
  }
  const GroupPtr& g = t.group();
  MatrixRep rep;
  rep.group = g;
  rep.dimension = 1;
  rep.images.reserve(g->order);
  for (std::size_t elem = 0; elem < g->order; ++elem) {
    Mat<Cyclotomic> m(1, 1);
    m(0, 0) = t.irreducibles[index].at_element(elem);
    rep.images.push_back(std::move(m));
  }
  return rep;
}

MatrixRep induced_rep(const ExtensionData& ext,
                      const std::vector<long long>& phi) {
  const GroupPtr& g = ext.g;
  const std::size_t q = ext.quotient->order;
  MatrixRep rep;
  rep.group = g;
  rep.dimension = q;
  rep.images.reserve(g->order);
  for (std::size_t elem = 0; elem < g->order; ++elem) {
    Mat<Cyclotomic> m(q, q);
    for (std::size_t i = 0; i < q; ++i) {
      const std::size_t moved = g->mul[elem][ext.section[i]];
      const std::size_t j = ext.projection[moved];
      const std::size_t inside =
          g->mul[g->inv[ext.section[j]]][moved];
      m(j, i) = root_of_unity(
          character_eval(ext.a_structure, phi, ext.a.local(inside)));
    }
    rep.images.push_back(std::move(m));
  }
  return rep;
}

bool is_representation(const MatrixRep& rep) {
  const GroupTable& g = *rep.group;
  if (rep.images.size() != g.order) return false;
  const auto id = Mat<Cyclotomic>::identity(rep.dimension);
  if (!(rep.images[0] == id)) return false;
  for (std::size_t a = 0; a < g.order; ++a) {
    for (std::size_t b = 0; b < g.order; ++b) {
      if (!(rep.images[a] * rep.images[b] == rep.images[g.mul[a][b]])) {
        return false;
      }
    }
  }
  return true;
}

ClassFunction character_of(const MatrixRep& rep, const ConjPtr& classes) {
  if (classes->group != rep.group) {
    throw std::invalid_argument("class data does not match the group");
  }
  ClassFunction out;
  out.classes = classes;
  out.values.reserve(classes->num_classes());
  for (std::size_t c = 0; c < classes->num_classes(); ++c) {
    out.values.push_back(
        rep.images[classes->representatives[c]].trace().minimal_form());
  }
  return out;
}

}  // namespace repring
