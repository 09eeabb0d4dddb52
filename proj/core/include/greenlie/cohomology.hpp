#ifndef GREENLIE_COHOMOLOGY_HPP
#define GREENLIE_COHOMOLOGY_HPP

#include "greenlie/alternating.hpp"
#include "greenlie/mackey.hpp"

namespace greenlie {

enum class Level { top, bottom };

/// Coordinate layout of degree-n cochain pairs: the top alternating coefficients
/// (tuples over L(C_p), values in M(C_p)) first, then the bottom ones.
struct PairLayout {
  std::size_t degree = 0;
  std::size_t top_tuples = 0, bottom_tuples = 0;
  std::size_t top_block = 0, bottom_block = 0;

  std::size_t total() const { return top_block + bottom_block; }
};

PairLayout pair_layout(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n);

/// A degree-n cochain pair (f_top, f_bottom).
struct EquivCochain {
  std::size_t degree = 0;
  AltMap top;
  AltMap bottom;

  Vec to_pair() const { return concat(top.coeff, bottom.coeff); }
};

EquivCochain pair_to_cochain(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n,
                             const Vec& pair);

/// Matrix of f -> module_map o f o (A in every slot) between alternating coefficient
/// spaces: entry ((V, a), (W, b)) = det(A[rows W, cols V]) * module_map(a, b). The source
/// f has slot dimension A.rows() and module dimension module_map.cols(); the result has
/// slot dimension A.cols() and module dimension module_map.rows().
Matrix slotwise_conjugate(const Matrix& A, std::size_t n, const Matrix& module_map);

/// The compatibility families a cochain pair must satisfy, in their order of appearance
/// in the degree-2 cocycle conditions: conjugation c_M f_b = f_b (c_L slots); restriction
/// r_M f_t = f_b (r_L slots); transfer in the first slot f_t(t x', ...) = t_M f_b(x', r...);
/// transfer in the last slot.
enum class ConstraintFamily { conjugation, restriction, transfer_first, transfer_last };

Matrix constraint_family_matrix(const GreenLieFunctor& L, const LieBimodule& M,
                                std::size_t n, ConstraintFamily which);

/// All four families stacked (conjugation, restriction, transfer first, transfer last).
/// At degree 0 the transfer families are empty and the kernel is the graph
/// {(u, w) : w = r_M(u)}.
Matrix constraint_matrix(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n);

struct CochainSpace {
  std::size_t degree = 0;
  Subspace top_space = Subspace(0); ///< constrained pairs, in pair coordinates
  std::size_t bottom_dim = 0;       ///< full alternating space at level e
};

CochainSpace cochain_space(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n);

/// Componentwise CE differential on pair coordinates, degree n -> n + 1.
Matrix pair_coboundary(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n);

/// The public differential. Bottom level: the CE matrix of L(e) acting on M(e). Top
/// level: the pair differential for n >= 1; for n = 0 the columns are indexed by M(C_p)
/// alone, sending m to the pair (a -> a.m, x -> x.r_M(m)).
Matrix coboundary_matrix(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n,
                         Level level);

/// theta -> c_M o theta o (c_L^{-1} slots) on bottom cochains.
Matrix cochain_conjugation(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n);

/// T(gamma) = (mu, delta) with mu = t_M o gamma o (r_L slots) and
/// delta = sum_{k<p} c_M^k o gamma o (c_L^{p-k} slots), as a matrix from bottom cochain
/// coordinates to pair coordinates. Every column is verified to satisfy the constraint
/// families; a violation is surfaced as InternalCheckError("ConstraintViolation").
Matrix cochain_transfer_matrix(const GreenLieFunctor& L, const LieBimodule& M,
                               std::size_t n);

/// R = projection of a pair to its bottom block.
Matrix cochain_restriction_matrix(const GreenLieFunctor& L, const LieBimodule& M,
                                  std::size_t n);

EquivCochain cochain_transfer(const GreenLieFunctor& L, const LieBimodule& M,
                              const AltMap& gamma);
AltMap cochain_restriction(const EquivCochain& f);

/// The degree-n cochain Mackey functor: top level = the constrained pair subspace in its
/// echelon-basis coordinates, bottom level = all alternating maps, with R, T and the
/// conjugation action as structure maps.
CpMackey cochain_mackey(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n);

struct CohomologyResult {
  std::size_t degree = 0;
  std::size_t dim_top = 0, dim_bottom = 0;
  std::vector<Vec> representatives_top;    ///< cocycle pairs, pair coordinates
  std::vector<Vec> representatives_bottom; ///< bottom cocycles, cochain coordinates
  Matrix induced_r; ///< H_bottom x H_top
  Matrix induced_t; ///< H_top x H_bottom
  Matrix induced_c; ///< H_bottom x H_bottom
};

/// H^n at both levels with representative cocycles and the induced Mackey structure.
/// Asserts that the differential preserves the constrained subspace
/// (InternalCheckError("ConstraintNotPreserved") otherwise) and that R, T and the
/// conjugation descend to cohomology (InternalCheckError("DescentFailure")).
CohomologyResult cohomology(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n);

/// Exact membership tests. Top-level vectors are pair coordinates and must satisfy the
/// constraints to be cocycles; bottom-level vectors are plain cochain coordinates.
bool is_cocycle(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n, Level level,
                const Vec& v);
bool is_coboundary(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n,
                   Level level, const Vec& v);

} // namespace greenlie

#endif
