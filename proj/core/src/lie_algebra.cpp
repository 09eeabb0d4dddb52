#include "greenlie/lie_algebra.hpp"

namespace greenlie {

LieAlgebra LieAlgebra::unchecked(std::size_t dim, std::vector<Rational> structure,
                                 std::vector<std::string> basis_names) {
  if (structure.size() != dim * dim * dim)
    throw PrecondError("DimensionMismatch", "structure tensor must have dim^3 entries");
  if (basis_names.empty())
    for (std::size_t i = 0; i < dim; ++i) basis_names.push_back("e" + std::to_string(i));
  if (basis_names.size() != dim)
    throw PrecondError("DimensionMismatch", "basis name count must equal dim");
  LieAlgebra L;
  L.dim_ = dim;
  L.structure_ = std::move(structure);
  L.names_ = std::move(basis_names);
  return L;
}

LieAlgebra LieAlgebra::make(std::size_t dim, std::vector<Rational> structure,
                            std::vector<std::string> basis_names) {
  LieAlgebra L = unchecked(dim, std::move(structure), std::move(basis_names));
  ValidationReport report = check_lie(L);
  if (!report.ok()) throw ValidationError(report);
  return L;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  return unchecked(dim, std::vector<Rational>(dim * dim * dim));
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw PrecondError("DimensionMismatch", "bracket argument dimension mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!c(i, j, k).is_zero()) out[k] += s * c(i, j, k);
    }
  }
  return out;
}

ValidationReport check_lie(const LieAlgebra& L) {
  ValidationReport report;
  const std::size_t d = L.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Vec lhs = L.bracket_basis(i, j);
      Vec rhs = L.bracket_basis(j, i);
      add_in_place(lhs, rhs);
      if (!is_zero(lhs))
        report.add("antisymmetry", {i, j});
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        Vec acc = L.bracket(L.bracket_basis(i, j), unit_vec(d, k));
        add_in_place(acc, L.bracket(L.bracket_basis(j, k), unit_vec(d, i)));
        add_in_place(acc, L.bracket(L.bracket_basis(k, i), unit_vec(d, j)));
        if (!is_zero(acc))
          report.add("jacobi", {i, j, k});
      }
  return report;
}

ValidationReport check_hom(const LieAlgebra& source, const LieAlgebra& target, const Matrix& f) {
  ValidationReport report;
  if (f.rows() != target.dim() || f.cols() != source.dim()) {
    report.add("hom_shape", {f.rows(), f.cols()},
               "expected " + std::to_string(target.dim()) + "x" + std::to_string(source.dim()));
    return report;
  }
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = i + 1; j < source.dim(); ++j) {
      Vec lhs = f.apply(source.bracket_basis(i, j));
      Vec rhs = target.bracket(f.column(i), f.column(j));
      sub_in_place(lhs, rhs);
      if (!is_zero(lhs))
        report.add("bracket_hom", {i, j});
    }
  return report;
}

Matrix Representation::act_vec(const Vec& x) const {
  Matrix out(module_dim, module_dim);
  for (std::size_t i = 0; i < action.size(); ++i) {
    if (x[i].is_zero()) continue;
    out = out + action[i].scaled(x[i]);
  }
  return out;
}

Representation trivial_rep(const LieAlgebra& L, std::size_t module_dim) {
  Representation rho;
  rho.algebra = L;
  rho.module_dim = module_dim;
  rho.action.assign(L.dim(), Matrix::zero(module_dim, module_dim));
  return rho;
}

Representation adjoint_rep(const LieAlgebra& L) {
  Representation rho;
  rho.algebra = L;
  rho.module_dim = L.dim();
  for (std::size_t i = 0; i < L.dim(); ++i) {
    Matrix m(L.dim(), L.dim());
    for (std::size_t j = 0; j < L.dim(); ++j)
      for (std::size_t k = 0; k < L.dim(); ++k) m.at(k, j) = L.c(i, j, k);
    rho.action.push_back(std::move(m));
  }
  return rho;
}

ValidationReport check_rep(const Representation& rho) {
  ValidationReport report;
  const std::size_t d = rho.algebra.dim();
  if (rho.action.size() != d) {
    report.add("rep_shape", {rho.action.size()}, "one operator per basis element required");
    return report;
  }
  for (std::size_t i = 0; i < d; ++i)
    if (rho.action[i].rows() != rho.module_dim || rho.action[i].cols() != rho.module_dim)
      report.add("rep_shape", {i}, "operator is not module_dim x module_dim");
  if (!report.ok()) return report;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Matrix lhs = rho.act_vec(rho.algebra.bracket_basis(i, j));
      Matrix rhs = rho.action[i] * rho.action[j] - rho.action[j] * rho.action[i];
      if (!(lhs - rhs).is_zero())
        report.add("rep_commutator", {i, j});
    }
  return report;
}

LieAlgebra lie_from_matrix_basis(const std::vector<Matrix>& basis, std::vector<std::string> names) {
  if (basis.empty()) return LieAlgebra::abelian(0);
  const std::size_t n = basis[0].rows();
  const std::size_t d = basis.size();
  for (const auto& b : basis)
    if (b.rows() != n || b.cols() != n)
      throw PrecondError("DimensionMismatch", "matrix basis entries must share a square shape");
  // vectorized basis as columns of an n^2 x d system
  std::vector<Vec> cols;
  cols.reserve(d);
  for (const auto& b : basis) {
    Vec v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = b.at(i, j);
    cols.push_back(std::move(v));
  }
  Matrix system = Matrix::from_columns(n * n, cols);
  std::vector<Rational> structure(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Matrix comm = basis[i] * basis[j] - basis[j] * basis[i];
      Vec v(n * n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) v[r * n + c] = comm.at(r, c);
      auto coords = solve(system, v);
      if (!coords)
        throw PrecondError("NotClosed", "commutator of basis elements leaves the span at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
      for (std::size_t k = 0; k < d; ++k) {
        structure[(i * d + j) * d + k] = (*coords)[k];
        structure[(j * d + i) * d + k] = -(*coords)[k];
      }
    }
  return LieAlgebra::make(d, std::move(structure), std::move(names));
}

} // namespace greenlie
