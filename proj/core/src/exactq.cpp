#include "greenlie/exactq.hpp"
#include "greenlie/validation.hpp"

#include <cassert>

namespace greenlie {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec& add_in_place(Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += b[i];
  return a;
}

Vec& sub_in_place(Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] -= b[i];
  return a;
}

Vec& axpy(Vec& a, const Rational& s, const Vec& b) {
  assert(a.size() == b.size());
  if (s.is_zero()) return a;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
  return a;
}

Vec scaled(const Vec& v, const Rational& s) {
  Vec out(v.size());
  if (s.is_zero()) return out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[i] = s * v[i];
  return out;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t ambient, const std::vector<Vec>& columns) {
  Matrix m(ambient, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != ambient)
      throw PrecondError("DimensionMismatch", "column length does not match ambient dimension");
    for (std::size_t i = 0; i < ambient; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t ambient, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), ambient);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ambient)
      throw PrecondError("DimensionMismatch", "row length does not match ambient dimension");
    for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_)
    throw PrecondError("DimensionMismatch", "matrix-vector dimension mismatch");
  Vec out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw PrecondError("DimensionMismatch", "matrix product dimension mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (!rhs.at(k, j).is_zero()) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw PrecondError("DimensionMismatch", "matrix sum dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!rhs.a_[i].is_zero()) out.a_[i] += rhs.a_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw PrecondError("DimensionMismatch", "matrix difference dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!rhs.a_[i].is_zero()) out.a_[i] -= rhs.a_[i];
  return out;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!a_[i].is_zero()) out.a_[i] = a_[i] * s;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

Matrix Matrix::power(std::size_t k) const {
  if (rows_ != cols_)
    throw PrecondError("DimensionMismatch", "power of a non-square matrix");
  Matrix out = identity(rows_);
  for (std::size_t i = 0; i < k; ++i) out = out * *this;
  return out;
}

Matrix Matrix::block_diag(const Matrix& other) const {
  Matrix out(rows_ + other.rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) out.at(rows_ + i, cols_ + j) = other.at(i, j);
  return out;
}

Matrix Matrix::stack_below(const Matrix& other) const {
  if (cols_ != other.cols_)
    throw PrecondError("DimensionMismatch", "vertical stack column mismatch");
  Matrix out(rows_ + other.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = other.at(i, j);
  return out;
}

Matrix Matrix::kronecker(const Matrix& other) const {
  Matrix out(rows_ * other.rows_, cols_ * other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& f = at(i, j);
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k < other.rows_; ++k)
        for (std::size_t l = 0; l < other.cols_; ++l) {
          const Rational& g = other.at(k, l);
          if (!g.is_zero()) out.at(i * other.rows_ + k, j * other.cols_ + l) = f * g;
        }
    }
  return out;
}

Matrix Matrix::stack_right(const Matrix& other) const {
  if (rows_ != other.rows_)
    throw PrecondError("DimensionMismatch", "horizontal stack row mismatch");
  Matrix out(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}};
  Matrix& a = res.mat;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    // first row at or below pivot_row with a nonzero entry in this column
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
    const Rational inv = Rational(1) / a.at(pivot_row, col);
    if (inv != 1)
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a.at(pivot_row, j).is_zero()) a.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row) continue;
      const Rational factor = a.at(i, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a.at(pivot_row, j).is_zero()) a.at(i, j) -= factor * a.at(pivot_row, j);
    }
    res.pivots.push_back(col);
    ++pivot_row;
  }
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  RrefResult r = rref(Matrix::from_rows(ambient, vectors));
  Subspace s(ambient);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) s.basis_.push_back(r.mat.row(i));
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vec(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_)
    throw PrecondError("DimensionMismatch", "vector not in the ambient space");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational coeff = v[pivots_[k]];
    if (!coeff.is_zero()) axpy(v, -coeff, basis_[k]);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return greenlie::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Vec rem = v;
  Vec coeffs(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    coeffs[k] = rem[pivots_[k]];
    if (!coeffs[k].is_zero()) axpy(rem, -coeffs[k], basis_[k]);
  }
  if (!greenlie::is_zero(rem)) return std::nullopt;
  return coeffs;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw PrecondError("DimensionMismatch", "subspace sum ambient mismatch");
  std::vector<Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v(n);
    v[j] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
      if (!r.mat.at(k, j).is_zero()) v[r.pivots[k]] = -r.mat.at(k, j);
    gens.push_back(std::move(v));
  }
  Subspace ker = Subspace::span(n, gens);
  assert(ker.dim() == n - r.pivots.size());
  return ker;
}

Subspace column_space(const Matrix& m) {
  std::vector<Vec> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace::span(m.rows(), cols);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows())
    throw PrecondError("DimensionMismatch", "right-hand side length mismatch");
  Matrix aug = m.stack_right(Matrix::from_columns(m.rows(), {b}));
  RrefResult r = rref(aug);
  for (auto p : r.pivots)
    if (p == m.cols()) return std::nullopt; // pivot in the augmented column: inconsistent
  Vec x(m.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.mat.at(k, m.cols());
  return x;
}

QuotientResult quotient_dim(const Subspace& big, const Subspace& small) {
  if (big.ambient_dim() != small.ambient_dim())
    throw PrecondError("DimensionMismatch", "quotient ambient mismatch");
  if (!big.contains(small))
    throw PrecondError("NotASubspace", "denominator is not contained in the numerator");
  QuotientResult out{big.dim() - small.dim(), {}};
  Subspace acc = small;
  for (const auto& v : big.basis()) {
    if (acc.contains(v)) continue;
    out.representatives.push_back(v);
    acc = acc.sum(Subspace::span(big.ambient_dim(), {v}));
  }
  assert(out.representatives.size() == out.dim);
  return out;
}

} // namespace greenlie
