#include "greenlie/cohomology.hpp"

namespace greenlie {

namespace {

/// Determinant by fraction-free-ish Gaussian elimination on a small copy.
Rational det(Matrix m) {
  const std::size_t n = m.rows();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col) / m.at(col, col);
      for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

Rational minor_det(const Matrix& a, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
  Matrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = a.at(rows[i], cols[j]);
  return det(std::move(m));
}

/// Sorts ascending, returning the permutation sign, or 0 when two entries coincide.
int sorted_sign(std::vector<std::size_t>& tuple) {
  int sign = 1;
  for (std::size_t i = 1; i < tuple.size(); ++i)
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return 0;
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  return sign;
}

struct Dims {
  std::size_t p, dt, de, mt, me;
};

Dims dims_of(const GreenLieFunctor& L, const LieBimodule& M) {
  return {L.p(), L.top_dim(), L.bottom_dim(), M.top_dim(), M.bottom_dim()};
}

/// Rows of the two transfer-slot families. `first_slot` picks which end of the tuple the
/// transferred bottom element occupies.
Matrix transfer_family(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n,
                       bool first_slot) {
  const Dims d = dims_of(L, M);
  const PairLayout layout = pair_layout(L, M, n);
  if (n == 0) return Matrix(0, layout.total());
  TupleTable rest_top(d.dt, n - 1), full_top(d.dt, n);
  TupleTable rest_bot(d.de, n - 1), full_bot(d.de, n);
  const Matrix& tL = L.t();
  const Matrix& rL = L.r();
  const Matrix& tM = M.underlying.t;
  Matrix out(d.de * rest_top.size() * d.mt, layout.total());
  for (std::size_t i = 0; i < d.de; ++i)
    for (std::size_t v = 0; v < rest_top.size(); ++v) {
      const auto& rest = rest_top[v];
      const std::size_t row0 = (i * rest_top.size() + v) * d.mt;
      // f_top with t_L(e_i) in the chosen slot and the rest tuple elsewhere
      for (std::size_t j = 0; j < d.dt; ++j) {
        if (tL.at(j, i).is_zero()) continue;
        std::vector<std::size_t> tuple;
        if (first_slot) {
          tuple.push_back(j);
          tuple.insert(tuple.end(), rest.begin(), rest.end());
        } else {
          tuple = rest;
          tuple.push_back(j);
        }
        int sgn = sorted_sign(tuple);
        if (sgn == 0) continue;
        std::size_t base = full_top.index_of(tuple) * d.mt;
        for (std::size_t m = 0; m < d.mt; ++m)
          out.at(row0 + m, base + m) += Rational(sgn) * tL.at(j, i);
      }
      // minus t_M f_bottom with e_i in the chosen slot and r_L applied to the rest
      for (std::size_t w = 0; w < rest_bot.size(); ++w) {
        const auto& wrest = rest_bot[w];
        Rational dmin = minor_det(rL, wrest, rest);
        if (dmin.is_zero()) continue;
        std::vector<std::size_t> tuple;
        if (first_slot) {
          tuple.push_back(i);
          tuple.insert(tuple.end(), wrest.begin(), wrest.end());
        } else {
          tuple = wrest;
          tuple.push_back(i);
        }
        int sgn = sorted_sign(tuple);
        if (sgn == 0) continue;
        std::size_t base = layout.top_block + full_bot.index_of(tuple) * d.me;
        for (std::size_t m = 0; m < d.mt; ++m)
          for (std::size_t mm = 0; mm < d.me; ++mm) {
            const Rational& t = tM.at(m, mm);
            if (!t.is_zero()) out.at(row0 + m, base + mm) -= Rational(sgn) * dmin * t;
          }
      }
    }
  return out;
}

} // namespace

PairLayout pair_layout(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n) {
  PairLayout layout;
  layout.degree = n;
  layout.top_tuples = binomial(L.top_dim(), n);
  layout.bottom_tuples = binomial(L.bottom_dim(), n);
  layout.top_block = layout.top_tuples * M.top_dim();
  layout.bottom_block = layout.bottom_tuples * M.bottom_dim();
  return layout;
}

EquivCochain pair_to_cochain(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n,
                             const Vec& pair) {
  const PairLayout layout = pair_layout(L, M, n);
  if (pair.size() != layout.total())
    throw PrecondError("DimensionMismatch", "pair vector does not match the degree layout");
  EquivCochain f;
  f.degree = n;
  f.top = AltMap::zero(n, L.top_dim(), M.top_dim());
  f.bottom = AltMap::zero(n, L.bottom_dim(), M.bottom_dim());
  for (std::size_t k = 0; k < layout.top_block; ++k) f.top.coeff[k] = pair[k];
  for (std::size_t k = 0; k < layout.bottom_block; ++k)
    f.bottom.coeff[k] = pair[layout.top_block + k];
  return f;
}

Matrix slotwise_conjugate(const Matrix& A, std::size_t n, const Matrix& module_map) {
  TupleTable src(A.rows(), n), dst(A.cols(), n);
  Matrix out(dst.size() * module_map.rows(), src.size() * module_map.cols());
  for (std::size_t v = 0; v < dst.size(); ++v)
    for (std::size_t w = 0; w < src.size(); ++w) {
      Rational dmin = minor_det(A, src[w], dst[v]);
      if (dmin.is_zero()) continue;
      for (std::size_t a = 0; a < module_map.rows(); ++a)
        for (std::size_t b = 0; b < module_map.cols(); ++b) {
          const Rational& m = module_map.at(a, b);
          if (!m.is_zero())
            out.at(v * module_map.rows() + a, w * module_map.cols() + b) = dmin * m;
        }
    }
  return out;
}

Matrix constraint_family_matrix(const GreenLieFunctor& L, const LieBimodule& M,
                                std::size_t n, ConstraintFamily which) {
  const Dims d = dims_of(L, M);
  const PairLayout layout = pair_layout(L, M, n);
  switch (which) {
  case ConstraintFamily::conjugation: {
    Matrix lhs = slotwise_conjugate(Matrix::identity(d.de), n, M.underlying.c);
    Matrix rhs = slotwise_conjugate(L.c(), n, Matrix::identity(d.me));
    return Matrix::zero(lhs.rows(), layout.top_block).stack_right(lhs - rhs);
  }
  case ConstraintFamily::restriction: {
    Matrix lhs = slotwise_conjugate(Matrix::identity(d.dt), n, M.underlying.r);
    Matrix rhs = slotwise_conjugate(L.r(), n, Matrix::identity(d.me));
    return lhs.stack_right(rhs.scaled(-1));
  }
  case ConstraintFamily::transfer_first:
    return transfer_family(L, M, n, true);
  case ConstraintFamily::transfer_last:
    return transfer_family(L, M, n, false);
  }
  throw PrecondError("ParameterRange", "unknown constraint family");
}

Matrix constraint_matrix(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n) {
  Matrix out = constraint_family_matrix(L, M, n, ConstraintFamily::conjugation);
  out = out.stack_below(constraint_family_matrix(L, M, n, ConstraintFamily::restriction));
  out = out.stack_below(constraint_family_matrix(L, M, n, ConstraintFamily::transfer_first));
  out = out.stack_below(constraint_family_matrix(L, M, n, ConstraintFamily::transfer_last));
  return out;
}

CochainSpace cochain_space(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n) {
  CochainSpace cs;
  cs.degree = n;
  cs.top_space = kernel_basis(constraint_matrix(L, M, n));
  cs.bottom_dim = pair_layout(L, M, n).bottom_block;
  return cs;
}

Matrix pair_coboundary(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n) {
  return ce_coboundary(M.action_top, n).block_diag(ce_coboundary(M.action_bottom, n));
}

Matrix coboundary_matrix(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n,
                         Level level) {
  if (level == Level::bottom) return ce_coboundary(M.action_bottom, n);
  if (n >= 1) return pair_coboundary(L, M, n);
  Matrix graph = Matrix::identity(M.top_dim()).stack_below(M.underlying.r);
  return pair_coboundary(L, M, 0) * graph;
}

Matrix cochain_conjugation(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n) {
  return slotwise_conjugate(L.c().power(L.p() - 1), n, M.underlying.c);
}

Matrix cochain_restriction_matrix(const GreenLieFunctor& L, const LieBimodule& M,
                                  std::size_t n) {
  const PairLayout layout = pair_layout(L, M, n);
  return Matrix::zero(layout.bottom_block, layout.top_block)
      .stack_right(Matrix::identity(layout.bottom_block));
}

Matrix cochain_transfer_matrix(const GreenLieFunctor& L, const LieBimodule& M,
                               std::size_t n) {
  const std::size_t p = L.p();
  Matrix mu = slotwise_conjugate(L.r(), n, M.underlying.t);
  Matrix delta(pair_layout(L, M, n).bottom_block, pair_layout(L, M, n).bottom_block);
  for (std::size_t k = 0; k < p; ++k)
    delta = delta + slotwise_conjugate(L.c().power(p - k), n, M.underlying.c.power(k));
  Matrix out = mu.stack_below(delta);
  Matrix constraints = constraint_matrix(L, M, n);
  if (!(constraints * out).is_zero())
    throw InternalCheckError("ConstraintViolation",
                             "transfer of a bottom cochain violates the pair constraints "
                             "at degree " +
                                 std::to_string(n));
  return out;
}

EquivCochain cochain_transfer(const GreenLieFunctor& L, const LieBimodule& M,
                              const AltMap& gamma) {
  if (gamma.source_dim != L.bottom_dim() || gamma.module_dim != M.bottom_dim())
    throw PrecondError("DimensionMismatch", "cochain does not match L(e) and M(e)");
  Matrix t = cochain_transfer_matrix(L, M, gamma.degree);
  return pair_to_cochain(L, M, gamma.degree, t.apply(gamma.coeff));
}

AltMap cochain_restriction(const EquivCochain& f) { return f.bottom; }

CpMackey cochain_mackey(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n) {
  CochainSpace cs = cochain_space(L, M, n);
  const std::size_t ambient = cs.top_space.ambient_dim();
  Matrix basis = Matrix::from_columns(ambient, cs.top_space.basis());
  Matrix transfer = cochain_transfer_matrix(L, M, n);
  CpMackey m;
  m.p = L.p();
  m.top_dim = cs.top_space.dim();
  m.bottom_dim = cs.bottom_dim;
  m.r = cochain_restriction_matrix(L, M, n) * basis;
  m.t = Matrix(m.top_dim, m.bottom_dim);
  for (std::size_t j = 0; j < m.bottom_dim; ++j) {
    auto coords = cs.top_space.coordinates(transfer.column(j));
    if (!coords)
      throw InternalCheckError("ConstraintViolation",
                               "transfer image escapes the constrained pair space");
    for (std::size_t i = 0; i < m.top_dim; ++i) m.t.at(i, j) = (*coords)[i];
  }
  m.c = cochain_conjugation(L, M, n);
  return m;
}

namespace {

/// Coordinates of the class of `v` in the representative basis: solve against
/// [representatives | boundary basis] and keep the representative part.
Vec class_coordinates(const std::vector<Vec>& reps, const Subspace& boundaries,
                      std::size_t ambient, const Vec& v, const char* context) {
  std::vector<Vec> cols = reps;
  for (const Vec& b : boundaries.basis()) cols.push_back(b);
  auto x = solve(Matrix::from_columns(ambient, cols), v);
  if (!x)
    throw InternalCheckError("DescentFailure",
                             std::string(context) + ": image is not a cocycle");
  return Vec(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(reps.size()));
}

} // namespace

CohomologyResult cohomology(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n) {
  CohomologyResult res;
  res.degree = n;

  // bottom level: ordinary CE cohomology of L(e) on M(e)
  Matrix bn = ce_coboundary(M.action_bottom, n);
  Subspace z_bottom = kernel_basis(bn);
  Subspace b_bottom = n == 0 ? Subspace(bn.cols())
                             : column_space(ce_coboundary(M.action_bottom, n - 1));
  QuotientResult qb = quotient_dim(z_bottom, b_bottom);
  res.dim_bottom = qb.dim;
  res.representatives_bottom = qb.representatives;

  // top level: the constrained pair complex
  CochainSpace cs = cochain_space(L, M, n);
  CochainSpace cs_next = cochain_space(L, M, n + 1);
  const std::size_t ambient = cs.top_space.ambient_dim();
  Matrix basis = Matrix::from_columns(ambient, cs.top_space.basis());
  Matrix bn_pair = pair_coboundary(L, M, n);
  Matrix restricted = bn_pair * basis;
  for (std::size_t j = 0; j < restricted.cols(); ++j)
    if (!cs_next.top_space.contains(restricted.column(j)))
      throw InternalCheckError("ConstraintNotPreserved",
                               "differential leaves the constrained pair space at degree " +
                                   std::to_string(n));
  Subspace kernel_coords = kernel_basis(restricted);
  std::vector<Vec> z_vectors;
  for (const Vec& coords : kernel_coords.basis()) z_vectors.push_back(basis.apply(coords));
  Subspace z_top = Subspace::span(ambient, z_vectors);
  Subspace b_top(ambient);
  if (n >= 1) {
    CochainSpace cs_prev = cochain_space(L, M, n - 1);
    Matrix prev_basis =
        Matrix::from_columns(cs_prev.top_space.ambient_dim(), cs_prev.top_space.basis());
    b_top = column_space(pair_coboundary(L, M, n - 1) * prev_basis);
  }
  QuotientResult qt = quotient_dim(z_top, b_top);
  res.dim_top = qt.dim;
  res.representatives_top = qt.representatives;

  // induced Mackey structure on cohomology
  Matrix restriction = cochain_restriction_matrix(L, M, n);
  Matrix transfer = cochain_transfer_matrix(L, M, n);
  Matrix conj = cochain_conjugation(L, M, n);
  res.induced_c = Matrix(res.dim_bottom, res.dim_bottom);
  for (std::size_t j = 0; j < res.dim_bottom; ++j) {
    Vec cls = class_coordinates(qb.representatives, b_bottom, bn.cols(),
                                conj.apply(qb.representatives[j]), "conjugation on H");
    for (std::size_t i = 0; i < res.dim_bottom; ++i) res.induced_c.at(i, j) = cls[i];
  }
  res.induced_r = Matrix(res.dim_bottom, res.dim_top);
  for (std::size_t j = 0; j < res.dim_top; ++j) {
    Vec cls = class_coordinates(qb.representatives, b_bottom, bn.cols(),
                                restriction.apply(qt.representatives[j]), "restriction on H");
    for (std::size_t i = 0; i < res.dim_bottom; ++i) res.induced_r.at(i, j) = cls[i];
  }
  res.induced_t = Matrix(res.dim_top, res.dim_bottom);
  for (std::size_t j = 0; j < res.dim_bottom; ++j) {
    Vec cls = class_coordinates(qt.representatives, b_top, ambient,
                                transfer.apply(qb.representatives[j]), "transfer on H");
    for (std::size_t i = 0; i < res.dim_top; ++i) res.induced_t.at(i, j) = cls[i];
  }
  return res;
}

bool is_cocycle(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n, Level level,
                const Vec& v) {
  if (level == Level::bottom) return is_zero(ce_coboundary(M.action_bottom, n).apply(v));
  if (!is_zero(constraint_matrix(L, M, n).apply(v))) return false;
  return is_zero(pair_coboundary(L, M, n).apply(v));
}

bool is_coboundary(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n,
                   Level level, const Vec& v) {
  if (n == 0) return is_zero(v);
  if (level == Level::bottom)
    return solve(ce_coboundary(M.action_bottom, n - 1), v).has_value();
  CochainSpace cs_prev = cochain_space(L, M, n - 1);
  Matrix prev_basis =
      Matrix::from_columns(cs_prev.top_space.ambient_dim(), cs_prev.top_space.basis());
  return solve(pair_coboundary(L, M, n - 1) * prev_basis, v).has_value();
}

} // namespace greenlie
