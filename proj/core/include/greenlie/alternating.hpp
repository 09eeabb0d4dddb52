#ifndef GREENLIE_ALTERNATING_HPP
#define GREENLIE_ALTERNATING_HPP

#include "greenlie/lie_algebra.hpp"

#include <span>

namespace greenlie {

/// Strictly increasing n-tuples over {0..d-1} in lexicographic order; C(d,n) of them
/// (a single empty tuple when n = 0, none when n > d).
class TupleTable {
public:
  TupleTable(std::size_t d, std::size_t n);

  std::size_t size() const { return tuples_.size(); }
  std::size_t d() const { return d_; }
  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& operator[](std::size_t idx) const { return tuples_[idx]; }
  /// Index of a strictly increasing tuple.
  std::size_t index_of(std::span<const std::size_t> tuple) const;

private:
  std::size_t d_, n_;
  std::vector<std::vector<std::size_t>> tuples_;
};

std::size_t binomial(std::size_t d, std::size_t n);

/// Alternating n-linear map (Q^source_dim)^n -> Q^module_dim, stored by coefficients on
/// strictly increasing index tuples: coeff[tuple_index * module_dim + k].
struct AltMap {
  std::size_t degree = 0;
  std::size_t source_dim = 0;
  std::size_t module_dim = 0;
  Vec coeff;

  static AltMap zero(std::size_t degree, std::size_t source_dim, std::size_t module_dim);

  std::size_t tuple_count() const { return binomial(source_dim, degree); }
  bool is_zero() const { return greenlie::is_zero(coeff); }

  /// Value on basis elements in arbitrary order: sorts with sign, zero on repeats.
  Vec eval_basis(std::span<const std::size_t> indices) const;
  /// Value with a general vector in slot 0 and basis elements (strictly increasing not
  /// required) in the remaining slots.
  Vec eval_first_general(const Vec& v, std::span<const std::size_t> rest) const;
  /// Full multilinear evaluation on general vectors.
  Vec eval(std::span<const Vec> args) const;
};

AltMap operator+(const AltMap& a, const AltMap& b);
AltMap operator-(const AltMap& a, const AltMap& b);
AltMap scaled(const AltMap& f, const Rational& s);

/// Chevalley-Eilenberg differential applied to one cochain:
/// (b f)(x_0..x_n) = sum_i (-1)^i x_i f(..^i..) + sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..^i^j..).
AltMap ce_apply(const Representation& rho, const AltMap& f);

/// Matrix of the CE differential C^n -> C^{n+1} in the increasing-tuple bases.
Matrix ce_coboundary(const Representation& rho, std::size_t n);

} // namespace greenlie

#endif
