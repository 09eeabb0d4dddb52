#include "greenlie/functor_examples.hpp"

namespace greenlie {

LieAlgebra heisenberg_algebra(std::size_t n) {
  const std::size_t d = 2 * n + 1;
  std::vector<Rational> structure(d * d * d);
  for (std::size_t i = 0; i < n; ++i) {
    structure[(i * d + (n + i)) * d + (2 * n)] = 1;
    structure[((n + i) * d + i) * d + (2 * n)] = -1;
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  names.push_back("z");
  return LieAlgebra::make(d, std::move(structure), std::move(names));
}

LieAlgebra subalgebra_on_columns(const LieAlgebra& ambient, const Matrix& columns,
                                 std::vector<std::string> names) {
  const std::size_t k = columns.cols();
  std::vector<Rational> structure(k * k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Vec w = ambient.bracket(columns.column(i), columns.column(j));
      auto coords = solve(columns, w);
      if (!coords)
        throw PrecondError("NotClosed", "span is not a subalgebra at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
      for (std::size_t t = 0; t < k; ++t) {
        structure[(i * k + j) * k + t] = (*coords)[t];
        structure[(j * k + i) * k + t] = -(*coords)[t];
      }
    }
  return LieAlgebra::make(k, std::move(structure), std::move(names));
}

GreenLieFunctor heisenberg_example(std::size_t n, std::size_t p) {
  if (!is_prime(p)) throw PrecondError("PrimeRequired", "p must be prime");
  if (n < 1 || p > n)
    throw PrecondError("ParameterRange", "heisenberg example needs 1 <= p <= n");
  LieAlgebra bottom = heisenberg_algebra(n);
  const std::size_t d = 2 * n + 1;
  const std::size_t q = n - p;
  const std::size_t top_dim = 2 * q + 3;

  // conjugation: cycle x_1..x_p and y_1..y_p, fix the rest
  Matrix c(d, d);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t xi = i, yi = n + i;
    if (i < p) {
      c.at((i + 1) % p, xi) = 1;
      c.at(n + (i + 1) % p, yi) = 1;
    } else {
      c.at(xi, xi) = 1;
      c.at(yi, yi) = 1;
    }
  }
  c.at(2 * n, 2 * n) = 1;

  // restriction columns: X = x_1+..+x_p, x_{p+1}..x_n, Y, y_{p+1}..y_n, z
  Matrix r(d, top_dim);
  for (std::size_t j = 0; j < p; ++j) r.at(j, 0) = 1;
  for (std::size_t k = 0; k < q; ++k) r.at(p + k, 1 + k) = 1;
  for (std::size_t j = 0; j < p; ++j) r.at(n + j, q + 1) = 1;
  for (std::size_t k = 0; k < q; ++k) r.at(n + p + k, q + 2 + k) = 1;
  r.at(2 * n, 2 * q + 2) = 1;

  Matrix t(top_dim, d);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < p) {
      t.at(0, i) = 1;
      t.at(q + 1, n + i) = 1;
    } else {
      t.at(1 + (i - p), i) = Rational(p);
      t.at(q + 2 + (i - p), n + i) = Rational(p);
    }
  }
  t.at(2 * q + 2, 2 * n) = Rational(p);

  std::vector<std::string> top_names;
  top_names.push_back("X");
  for (std::size_t k = 0; k < q; ++k) top_names.push_back("x" + std::to_string(p + 1 + k));
  top_names.push_back("Y");
  for (std::size_t k = 0; k < q; ++k) top_names.push_back("y" + std::to_string(p + 1 + k));
  top_names.push_back("z");
  LieAlgebra top = subalgebra_on_columns(bottom, r, std::move(top_names));

  CpMackey mackey{p, top_dim, d, std::move(r), std::move(t), std::move(c)};
  return GreenLieFunctor::make(std::move(mackey), std::move(top), std::move(bottom));
}

namespace {

/// Vectorized coordinates of square matrices against a matrix basis.
Matrix vectorize_basis(const std::vector<Matrix>& basis, std::size_t n) {
  std::vector<Vec> cols;
  for (const auto& b : basis) {
    Vec v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = b.at(i, j);
    cols.push_back(std::move(v));
  }
  return Matrix::from_columns(n * n, cols);
}

Vec vectorize(const Matrix& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
  return v;
}

Vec coords_of(const Matrix& system, const Matrix& m, const char* what) {
  auto coords = solve(system, vectorize(m));
  if (!coords) throw InternalCheckError("PreimageFailure", std::string(what) + " left the span");
  return *coords;
}

} // namespace

GreenLieFunctor sl_transpose_example(std::size_t n) {
  if (n < 2) throw PrecondError("ParameterRange", "sl_transpose example needs n >= 2");
  std::vector<Matrix> sl_basis;
  std::vector<std::string> sl_names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix e(n, n);
      e.at(i, j) = 1;
      sl_basis.push_back(std::move(e));
      sl_names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Matrix h(n, n);
    h.at(i, i) = 1;
    h.at(i + 1, i + 1) = -1;
    sl_basis.push_back(std::move(h));
    sl_names.push_back("H" + std::to_string(i + 1));
  }
  LieAlgebra bottom = lie_from_matrix_basis(sl_basis, sl_names);
  const std::size_t d = sl_basis.size();
  Matrix system = vectorize_basis(sl_basis, n);

  std::vector<Matrix> skew_basis;
  std::vector<std::string> skew_names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix f(n, n);
      f.at(i, j) = 1;
      f.at(j, i) = -1;
      skew_basis.push_back(std::move(f));
      skew_names.push_back("F" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  const std::size_t top_dim = skew_basis.size();

  Matrix r(d, top_dim);
  for (std::size_t j = 0; j < top_dim; ++j) {
    Vec coords = coords_of(system, skew_basis[j], "skew basis element");
    for (std::size_t i = 0; i < d; ++i) r.at(i, j) = coords[i];
  }

  // t(X) = X - X^T, c(X) = -X^T, both computed through the matrix picture
  Matrix skew_system = vectorize_basis(skew_basis, n);
  Matrix t(top_dim, d);
  Matrix c(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Matrix& B = sl_basis[j];
    Matrix tb = B - B.transpose();
    auto tcoords = solve(skew_system, vectorize(tb));
    if (!tcoords) throw InternalCheckError("PreimageFailure", "X - X^T is not skew");
    for (std::size_t i = 0; i < top_dim; ++i) t.at(i, j) = (*tcoords)[i];
    Vec ccoords = coords_of(system, B.transpose().scaled(-1), "-X^T");
    for (std::size_t i = 0; i < d; ++i) c.at(i, j) = ccoords[i];
  }

  LieAlgebra top = subalgebra_on_columns(bottom, r, std::move(skew_names));
  CpMackey mackey{2, top_dim, d, std::move(r), std::move(t), std::move(c)};
  return GreenLieFunctor::make(std::move(mackey), std::move(top), std::move(bottom));
}

GreenLieFunctor fixed_point_functor(const LieAlgebra& g, const Matrix& action, std::size_t p) {
  if (!is_prime(p)) throw PrecondError("PrimeRequired", "p must be prime");
  const std::size_t d = g.dim();
  if (action.rows() != d || action.cols() != d)
    throw PrecondError("DimensionMismatch", "action must be dim x dim");
  if (!check_hom(g, g, action).ok() || rank(action) != d)
    throw PrecondError("NotAnAutomorphism", "action is not a Lie algebra automorphism");
  if (!action.power(p).is_identity())
    throw PrecondError("OrderMismatch", "action^p is not the identity");

  Subspace fixed = kernel_basis(action - Matrix::identity(d));
  const std::size_t top_dim = fixed.dim();
  Matrix r = Matrix::from_columns(d, fixed.basis());
  LieAlgebra top = subalgebra_on_columns(g, r);

  Matrix norm(d, d);
  for (std::size_t i = 0; i < p; ++i) norm = norm + action.power(i);
  Matrix t(top_dim, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto coords = fixed.coordinates(norm.column(j));
    if (!coords)
      throw InternalCheckError("PreimageFailure", "norm image is not fixed by the action");
    // coordinates are against the echelon basis = the columns of r
    for (std::size_t i = 0; i < top_dim; ++i) t.at(i, j) = (*coords)[i];
  }

  CpMackey mackey{p, top_dim, d, std::move(r), std::move(t), action};
  return GreenLieFunctor::make(std::move(mackey), std::move(top), g);
}

GreenLieFunctor direct_sum_example(const LieAlgebra& g, std::size_t p) {
  if (!is_prime(p)) throw PrecondError("PrimeRequired", "p must be prime");
  const std::size_t d = g.dim();
  const std::size_t bd = d * p;
  std::vector<Rational> structure(bd * bd * bd);
  for (std::size_t blk = 0; blk < p; ++blk)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (!g.c(i, j, k).is_zero())
            structure[((blk * d + i) * bd + (blk * d + j)) * bd + (blk * d + k)] = g.c(i, j, k);
  std::vector<std::string> names;
  for (std::size_t blk = 0; blk < p; ++blk)
    for (const auto& base : g.basis_names())
      names.push_back(base + "_" + std::to_string(blk + 1));
  LieAlgebra bottom = LieAlgebra::make(bd, std::move(structure), std::move(names));

  Matrix r(bd, d);
  for (std::size_t blk = 0; blk < p; ++blk)
    for (std::size_t i = 0; i < d; ++i) r.at(blk * d + i, i) = 1;
  Matrix t(d, bd);
  for (std::size_t blk = 0; blk < p; ++blk)
    for (std::size_t i = 0; i < d; ++i) t.at(i, blk * d + i) = 1;
  Matrix c(bd, bd);
  for (std::size_t blk = 0; blk < p; ++blk)
    for (std::size_t i = 0; i < d; ++i) c.at(((blk + 1) % p) * d + i, blk * d + i) = 1;

  CpMackey mackey{p, d, bd, std::move(r), std::move(t), std::move(c)};
  return GreenLieFunctor::make(std::move(mackey), g, std::move(bottom));
}

Vec AssociativeAlgebra::product(const Vec& a, const Vec& b) const {
  Vec out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      const Rational s = a[i] * b[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (!m(i, j, k).is_zero()) out[k] += s * m(i, j, k);
    }
  }
  return out;
}

AssociativeAlgebra dual_numbers() {
  AssociativeAlgebra A;
  A.dim = 2;
  A.mult.assign(8, Rational(0));
  A.mult[(0 * 2 + 0) * 2 + 0] = 1; // 1*1 = 1
  A.mult[(0 * 2 + 1) * 2 + 1] = 1; // 1*x = x
  A.mult[(1 * 2 + 0) * 2 + 1] = 1; // x*1 = x
  return A;
}

GreenLieFunctor derivation_example(const AssociativeAlgebra& A, const Matrix& action,
                                   std::size_t p) {
  if (!is_prime(p)) throw PrecondError("PrimeRequired", "p must be prime");
  const std::size_t d = A.dim;
  if (A.mult.size() != d * d * d)
    throw PrecondError("DimensionMismatch", "multiplication tensor must have dim^3 entries");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec left = A.product(A.product(unit_vec(d, i), unit_vec(d, j)), unit_vec(d, k));
        Vec right = A.product(unit_vec(d, i), A.product(unit_vec(d, j), unit_vec(d, k)));
        sub_in_place(left, right);
        if (!is_zero(left))
          throw PrecondError("NotAssociative", "associativity fails at (" + std::to_string(i) +
                                                   "," + std::to_string(j) + "," +
                                                   std::to_string(k) + ")");
      }
  if (action.rows() != d || action.cols() != d || rank(action) != d)
    throw PrecondError("NotAnAutomorphism", "action must be an invertible dim x dim matrix");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec lhs = action.apply(A.product(unit_vec(d, i), unit_vec(d, j)));
      Vec rhs = A.product(action.column(i), action.column(j));
      sub_in_place(lhs, rhs);
      if (!is_zero(lhs))
        throw PrecondError("NotAnAutomorphism", "action does not preserve the product at (" +
                                                    std::to_string(i) + "," + std::to_string(j) +
                                                    ")");
    }
  if (!action.power(p).is_identity())
    throw PrecondError("OrderMismatch", "action^p is not the identity");

  // Leibniz system on vectorized endomorphisms: D(e_i e_j) = D(e_i) e_j + e_i D(e_j)
  Matrix leibniz(d * d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          // coefficient of D_{a,b} in row (i,j,k): D(e_i e_j)_k - (D(e_i) e_j)_k - (e_i D(e_j))_k
          // D(v)_a = sum_b D_{a,b} v_b
          for (std::size_t k = 0; k < d; ++k) {
            Rational coeff(0);
            if (a == k) coeff += A.m(i, j, b); // D applied to the product
            coeff -= (b == i ? A.m(a, j, k) : Rational(0));
            coeff -= (b == j ? A.m(i, a, k) : Rational(0));
            if (!coeff.is_zero()) leibniz.at((i * d + j) * d + k, a * d + b) += coeff;
          }
        }
  Subspace der = kernel_basis(leibniz);
  const std::size_t bd = der.dim();
  std::vector<Matrix> der_basis;
  for (const auto& v : der.basis()) {
    Matrix D(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) D.at(a, b) = v[a * d + b];
    der_basis.push_back(std::move(D));
  }
  LieAlgebra bottom = bd ? lie_from_matrix_basis(der_basis) : LieAlgebra::abelian(0);

  Matrix inverse = action.power(p - 1);
  Matrix c(bd, bd);
  for (std::size_t j = 0; j < bd; ++j) {
    Matrix conj = action * der_basis[j] * inverse;
    auto coords = der.coordinates(vectorize(conj));
    if (!coords)
      throw InternalCheckError("PreimageFailure", "conjugate of a derivation is not a derivation");
    for (std::size_t i = 0; i < bd; ++i) c.at(i, j) = (*coords)[i];
  }

  Subspace fixed = kernel_basis(c - Matrix::identity(bd));
  const std::size_t top_dim = fixed.dim();
  Matrix r = Matrix::from_columns(bd, fixed.basis());
  LieAlgebra top = subalgebra_on_columns(bottom, r);
  Matrix norm(bd, bd);
  for (std::size_t i = 0; i < p; ++i) norm = norm + c.power(i);
  Matrix t(top_dim, bd);
  for (std::size_t j = 0; j < bd; ++j) {
    auto coords = fixed.coordinates(norm.column(j));
    if (!coords)
      throw InternalCheckError("PreimageFailure", "averaged derivation is not invariant");
    for (std::size_t i = 0; i < top_dim; ++i) t.at(i, j) = (*coords)[i];
  }

  CpMackey mackey{p, top_dim, bd, std::move(r), std::move(t), std::move(c)};
  return GreenLieFunctor::make(std::move(mackey), std::move(top), std::move(bottom));
}

std::vector<ExampleInfo> list_examples() {
  return {
      {"heisenberg", "n p",
       "Heisenberg algebra h_{2n+1} with the cyclic shift of the first p coordinate pairs; "
       "fixed subalgebra h_{2(n-p)+3} on top"},
      {"sl_transpose", "n",
       "sl_n with the order-2 automorphism X -> -X^T; skew-symmetric matrices on top, "
       "t(X) = X - X^T"},
      {"fixed_point_heisenberg", "n p",
       "fixed-point functor of the coordinate cycle acting on h_{2n+1}: bottom = h_{2n+1}, "
       "top = fixed subalgebra, t = norm"},
      {"direct_sum_heisenberg", "n p",
       "top = h_{2n+1}, bottom = h_{2n+1}^p with the cyclic shift, r diagonal, t the "
       "component sum"},
      {"derivation_dual_numbers", "p",
       "derivations of Q[x]/(x^2) with conjugation by the automorphism x -> -x (p = 2)"},
  };
}

GreenLieFunctor build_example(const std::string& name, const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw PrecondError("ParameterRange",
                         name + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "heisenberg") {
    need(2);
    return heisenberg_example(params[0], params[1]);
  }
  if (name == "sl_transpose") {
    need(1);
    return sl_transpose_example(params[0]);
  }
  if (name == "fixed_point_heisenberg") {
    need(2);
    GreenLieFunctor h = heisenberg_example(params[0], params[1]);
    return fixed_point_functor(h.bottom(), h.c(), params[1]);
  }
  if (name == "direct_sum_heisenberg") {
    need(2);
    return direct_sum_example(heisenberg_algebra(params[0]), params[1]);
  }
  if (name == "derivation_dual_numbers") {
    need(1);
    if (params[0] != 2)
      throw PrecondError("OrderMismatch", "x -> -x has order 2");
    Matrix sigma(2, 2);
    sigma.at(0, 0) = 1;
    sigma.at(1, 1) = -1;
    return derivation_example(dual_numbers(), sigma, 2);
  }
  throw PrecondError("UnknownExample", "no example constructor named '" + name + "'");
}

} // namespace greenlie
