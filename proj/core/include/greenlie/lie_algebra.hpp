#ifndef GREENLIE_LIE_ALGEBRA_HPP
#define GREENLIE_LIE_ALGEBRA_HPP

#include "greenlie/exactq.hpp"
#include "greenlie/validation.hpp"

#include <string>
#include <vector>

namespace greenlie {

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebra {
public:
  /// The zero algebra; use the factories for anything else.
  LieAlgebra() = default;

  /// Validates antisymmetry and Jacobi; throws ValidationError on failure.
  static LieAlgebra make(std::size_t dim, std::vector<Rational> structure,
                         std::vector<std::string> basis_names = {});
  /// No validation. For building counterexamples in tests and deferred validation.
  static LieAlgebra unchecked(std::size_t dim, std::vector<Rational> structure,
                              std::vector<std::string> basis_names = {});
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Rational>& structure() const { return structure_; }

  /// [e_i, e_j] as a coordinate vector.
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  /// Bilinear extension.
  Vec bracket(const Vec& x, const Vec& y) const;

  bool operator==(const LieAlgebra& rhs) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<Rational> structure_; ///< flat (i*dim + j)*dim + k
  std::vector<std::string> names_;
};

/// Lists every violated antisymmetry instance (i <= j) and Jacobi instance (i < j < k).
ValidationReport check_lie(const LieAlgebra& L);

/// Checks that the matrix f defines a Lie homomorphism source -> target:
/// f([e_i,e_j]) = [f(e_i), f(e_j)] for all i < j. Reports each violated pair.
ValidationReport check_hom(const LieAlgebra& source, const LieAlgebra& target, const Matrix& f);

/// Left representation of a Lie algebra: action[i] is the operator of e_i on Q^module_dim.
struct Representation {
  LieAlgebra algebra;
  std::size_t module_dim = 0;
  std::vector<Matrix> action;

  const Matrix& act(std::size_t i) const { return action[i]; }
  /// Operator of a general algebra element.
  Matrix act_vec(const Vec& x) const;

  bool operator==(const Representation& rhs) const = default;
};

Representation trivial_rep(const LieAlgebra& L, std::size_t module_dim);
Representation adjoint_rep(const LieAlgebra& L);

/// Checks rho([e_i,e_j]) = rho(e_i) rho(e_j) - rho(e_j) rho(e_i) for all i < j.
ValidationReport check_rep(const Representation& rho);

/// Structure constants of a Lie algebra presented by a basis of square matrices
/// (bracket = commutator), coordinates solved against the vectorized basis.
/// Throws PrecondError("NotClosed") when a commutator leaves the span.
LieAlgebra lie_from_matrix_basis(const std::vector<Matrix>& basis,
                                 std::vector<std::string> names = {});

} // namespace greenlie

#endif
