#ifndef GREENLIE_MACKEY_HPP
#define GREENLIE_MACKEY_HPP

#include "greenlie/lie_algebra.hpp"

#include <optional>

namespace greenlie {

bool is_prime(std::size_t p);

/// Two-level Mackey functor for the cyclic group of prime order p.
/// Levels: top = value at C_p, bottom = value at the trivial subgroup.
/// Maps: r (restriction, top -> bottom), t (transfer, bottom -> top),
/// c (conjugation by the chosen generator on the bottom level; conjugation on the
/// top level is the identity and is not stored).
struct CpMackey {
  std::size_t p = 2;
  std::size_t top_dim = 0;
  std::size_t bottom_dim = 0;
  Matrix r; ///< bottom_dim x top_dim
  Matrix t; ///< top_dim x bottom_dim
  Matrix c; ///< bottom_dim x bottom_dim

  bool operator==(const CpMackey& rhs) const = default;
};

/// Checks shapes, c^p = id, c r = r, t c = t and r t = sum_{i<p} c^i.
/// Reports each failed identity with the residual matrix.
ValidationReport validate_mackey(const CpMackey& m);

/// C_p-Green functor of Lie type: both levels carry Lie algebra structures, r and c are
/// Lie homomorphisms, and transfer satisfies the Frobenius relations
/// [t(x), b] = t([x, r(b)]) and [b, t(x)] = t([r(b), x]).
class GreenLieFunctor {
public:
  static GreenLieFunctor make(CpMackey mackey, LieAlgebra top, LieAlgebra bottom);
  static GreenLieFunctor unchecked(CpMackey mackey, LieAlgebra top, LieAlgebra bottom);

  const CpMackey& mackey() const { return mackey_; }
  const LieAlgebra& top() const { return top_; }
  const LieAlgebra& bottom() const { return bottom_; }
  std::size_t p() const { return mackey_.p; }
  std::size_t top_dim() const { return mackey_.top_dim; }
  std::size_t bottom_dim() const { return mackey_.bottom_dim; }
  const Matrix& r() const { return mackey_.r; }
  const Matrix& t() const { return mackey_.t; }
  const Matrix& c() const { return mackey_.c; }

  bool operator==(const GreenLieFunctor& rhs) const = default;

private:
  GreenLieFunctor() = default;
  CpMackey mackey_;
  LieAlgebra top_, bottom_;
};

ValidationReport validate_green_lie(const GreenLieFunctor& L);

/// Levelwise pair of Lie algebra maps L1 -> L2 commuting with r, t and c.
struct GreenLieMorphism {
  Matrix top;    ///< L2.top_dim x L1.top_dim
  Matrix bottom; ///< L2.bottom_dim x L1.bottom_dim
};

ValidationReport validate_morphism(const GreenLieFunctor& L1, const GreenLieFunctor& L2,
                                   const GreenLieMorphism& f);
GreenLieMorphism compose(const GreenLieMorphism& g, const GreenLieMorphism& f);

/// Bimodule over a Green functor of Lie type: a C_p-Mackey functor M with left
/// representations of L(C_p) and L(e) at the matching levels. The right actions are
/// u.x := -x.u throughout. `bracket_*` are present when M itself carries Lie structure
/// (needed for cup products).
struct LieBimodule {
  CpMackey underlying;
  Representation action_top;    ///< L(C_p) acting on M(C_p)
  Representation action_bottom; ///< L(e) acting on M(e)
  std::optional<LieAlgebra> bracket_top;
  std::optional<LieAlgebra> bracket_bottom;

  std::size_t top_dim() const { return underlying.top_dim; }
  std::size_t bottom_dim() const { return underlying.bottom_dim; }
};

/// Validates M's Mackey axioms, both representations, level compatibility of the actions
/// with r and c, and the module Frobenius relations
/// t_L(x).m = t_M(x.r_M(m)) and a.t_M(u) = t_M(r_L(a).u).
ValidationReport validate_bimodule(const GreenLieFunctor& L, const LieBimodule& M);

/// L acting on itself by the adjoint actions.
LieBimodule adjoint_bimodule(const GreenLieFunctor& L);

/// Q^dim at both levels, zero actions, r = id, t = p id, c = id, abelian brackets.
LieBimodule trivial_bimodule(const GreenLieFunctor& L, std::size_t dim);

} // namespace greenlie

#endif
