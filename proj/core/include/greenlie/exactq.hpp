#ifndef GREENLIE_EXACTQ_HPP
#define GREENLIE_EXACTQ_HPP

#include "greenlie/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace greenlie {

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec& add_in_place(Vec& a, const Vec& b);
Vec& sub_in_place(Vec& a, const Vec& b);
/// a += s*b, skipping when s = 0.
Vec& axpy(Vec& a, const Rational& s, const Vec& b);
Vec scaled(const Vec& v, const Rational& s);
Vec concat(const Vec& a, const Vec& b);

/// Dense row-major matrix over the exact rationals.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Columns are the given ambient vectors.
  static Matrix from_columns(std::size_t ambient, const std::vector<Vec>& columns);
  static Matrix from_rows(std::size_t ambient, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  Vec apply(const Vec& v) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Rational& s) const;
  Matrix transpose() const;
  bool operator==(const Matrix& rhs) const = default;
  bool is_zero() const;
  bool is_identity() const;

  /// m^k for k >= 0 (square matrices).
  Matrix power(std::size_t k) const;

  /// Block-diagonal stack [this 0; 0 other].
  Matrix block_diag(const Matrix& other) const;
  /// Kronecker product: entry ((i, k), (j, l)) = this(i, j) * other(k, l) with the
  /// row-major pair index i * other.rows() + k.
  Matrix kronecker(const Matrix& other) const;
  /// Vertical stack [this; other] (same column count).
  Matrix stack_below(const Matrix& other) const;
  /// Horizontal stack [this other] (same row count).
  Matrix stack_right(const Matrix& other) const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivots; ///< pivot column per pivot row, strictly increasing
};

/// Reduced row echelon form. Deterministic: pivots scan columns left to right and take
/// the first row at or below the current one with a nonzero entry.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Subspace of Q^ambient held as a reduced-echelon row basis (pivots strictly increasing),
/// so equal subspaces have identical representations.
class Subspace {
public:
  /// The zero subspace.
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  /// Canonical span of arbitrary vectors.
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// v minus its projection onto the span; zero iff contained.
  Vec reduce(Vec v) const;
  /// Coordinates of v in the echelon basis, if contained.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// Span of the union.
  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& rhs) const = default;

private:
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Kernel {v : m v = 0} with the canonical free-column basis, re-echelonized.
/// Asserts rank-nullity: dim = cols - rank.
Subspace kernel_basis(const Matrix& m);

/// Canonical span of the columns.
Subspace column_space(const Matrix& m);

/// One exact solution of m x = b with zeros in the free columns, or nullopt when
/// inconsistent. Deterministic.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

struct QuotientResult {
  std::size_t dim;
  /// Coset representatives: vectors of `big` completing a basis of `small`,
  /// chosen greedily from big's echelon basis in order.
  std::vector<Vec> representatives;
};

/// dim(big/small) with representatives. Throws PrecondError("NotASubspace") unless
/// small is contained in big.
QuotientResult quotient_dim(const Subspace& big, const Subspace& small);

} // namespace greenlie

#endif
