#ifndef GREENLIE_PRODUCTS_HPP
#define GREENLIE_PRODUCTS_HPP

#include "greenlie/mackey.hpp"

namespace greenlie {

/// Coordinates on an ambient space modulo a relation subspace. `representatives` embeds
/// the chosen coset basis (unit vectors on the relation pivots' complement) and `project`
/// maps an ambient vector to the coordinates of its coset, so that
/// project * representatives = id and relations = ker(project).
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  Subspace relations = Subspace(0);
  Matrix project;         ///< dim x ambient_dim
  Matrix representatives; ///< ambient_dim x dim

  std::size_t dim() const { return project.rows(); }
};

QuotientSpace quotient_space(std::size_t ambient_dim, const std::vector<Vec>& generators);

/// Tensor or exterior product of the underlying Mackey functors of two Green functors of
/// Lie type. Top level: (bottom1 (x) bottom2 (+) top1 (x) top2) / relations, with the
/// bottom-tensor coordinates occupying the leading ee_dim ambient slots. Bottom level:
/// bottom1 (x) bottom2, exterior-reduced when applicable. Kronecker pair index throughout:
/// (i, j) -> i * dim2 + j.
struct ProductMackey {
  CpMackey underlying;
  QuotientSpace top;
  QuotientSpace bottom;
  std::size_t ee_dim = 0;
  std::string provenance;
};

/// Relations a (x) t(y) - r(a) (x) y and t(x) (x) b - x (x) r(b) over all basis choices.
/// The restriction is [sum_i c1^i (x) c2^i | r1 (x) r2] on the ambient, verified to kill
/// every relation generator; transfer embeds a bottom tensor as its coset. The result is
/// checked against the Mackey axioms: t o c = t is derivable from the relations when
/// p = 2 but genuinely fails for some factors when p >= 3, and such failures surface as
/// InternalCheckError("MackeyAxiomsFailure").
ProductMackey tensor_product(const GreenLieFunctor& L1, const GreenLieFunctor& L2);

/// Further quotient of the tensor product by the span of the diagonal tensors v (x) v
/// (polarized: e_i (x) e_j + e_j (x) e_i) in the bottom level and in both top summands.
/// Requires levelwise equal dimensions so the diagonal makes sense.
ProductMackey exterior_product(const GreenLieFunctor& L1, const GreenLieFunctor& L2);

} // namespace greenlie

#endif
