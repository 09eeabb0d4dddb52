#ifndef GREENLIE_FUNCTOR_EXAMPLES_HPP
#define GREENLIE_FUNCTOR_EXAMPLES_HPP

#include "greenlie/mackey.hpp"

namespace greenlie {

/// Heisenberg Lie algebra h_{2n+1}: basis x_1..x_n, y_1..y_n, z with [x_i, y_i] = z.
LieAlgebra heisenberg_algebra(std::size_t n);

/// h_{2n+1} with the generator cycling the first p coordinate pairs
/// (x_i -> x_{i+1}, y_i -> y_{i+1} indices mod p, z fixed). Top level: the fixed
/// subalgebra, isomorphic to h_{2(n-p)+3}. Transfer: t(x_i) = x_1 + ... + x_p for
/// i <= p, t = p.id on the remaining generators and t(z) = p z.
/// Preconditions: p prime, p <= n.
GreenLieFunctor heisenberg_example(std::size_t n, std::size_t p);

/// sl_n with the order-2 automorphism X -> -X^T. Top level: the skew-symmetric
/// matrices; t(X) = X - X^T; r is the inclusion. p = 2. Precondition: n >= 2.
GreenLieFunctor sl_transpose_example(std::size_t n);

/// Fixed points of a Lie algebra automorphism of order p: bottom = g,
/// top = ker(action - id), r = inclusion, t = sum of the action powers, c = action.
/// Errors: NotAnAutomorphism, OrderMismatch.
GreenLieFunctor fixed_point_functor(const LieAlgebra& g, const Matrix& action, std::size_t p);

/// top = g, bottom = g^p with componentwise bracket, r diagonal, t the component sum,
/// c the cyclic shift (u_1,...,u_p) -> (u_p, u_1, ..., u_{p-1}).
GreenLieFunctor direct_sum_example(const LieAlgebra& g, std::size_t p);

/// Associative algebra given by a flat multiplication tensor e_i e_j = sum_k m(i,j,k) e_k.
struct AssociativeAlgebra {
  std::size_t dim = 0;
  std::vector<Rational> mult; ///< flat (i*dim + j)*dim + k

  const Rational& m(std::size_t i, std::size_t j, std::size_t k) const {
    return mult[(i * dim + j) * dim + k];
  }
  Vec product(const Vec& a, const Vec& b) const;
};

/// Derivations Der(A) under the commutator, with the conjugation D -> g D g^{-1} of an
/// order-p algebra automorphism; top level = invariant derivations,
/// t(D) = sum_i g^i D g^{-i}. Errors: NotAssociative, NotAnAutomorphism, OrderMismatch.
GreenLieFunctor derivation_example(const AssociativeAlgebra& A, const Matrix& action,
                                   std::size_t p);

/// Q[x]/(x^2): basis {1, x}.
AssociativeAlgebra dual_numbers();

/// Structure constants induced on the span of `columns` as a subalgebra of `ambient`.
/// Throws PrecondError("NotClosed") when a bracket leaves the span.
LieAlgebra subalgebra_on_columns(const LieAlgebra& ambient, const Matrix& columns,
                                 std::vector<std::string> names = {});

struct ExampleInfo {
  std::string name;
  std::string parameters;
  std::string provenance;
};

/// Catalog of the built-in constructors, with the instances `build_example` accepts.
std::vector<ExampleInfo> list_examples();

/// Builds a named instance: "heisenberg n p", "sl_transpose n", "direct_sum_heisenberg n p",
/// "fixed_point_heisenberg n p", "derivation_dual_numbers p".
GreenLieFunctor build_example(const std::string& name, const std::vector<std::size_t>& params);

} // namespace greenlie

#endif
