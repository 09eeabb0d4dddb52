#include "greenlie/products.hpp"

namespace greenlie {

QuotientSpace quotient_space(std::size_t ambient_dim, const std::vector<Vec>& generators) {
  QuotientSpace q;
  q.ambient_dim = ambient_dim;
  q.relations = Subspace::span(ambient_dim, generators);
  const auto& pivots = q.relations.pivots();
  std::vector<std::size_t> free_cols;
  free_cols.reserve(ambient_dim - pivots.size());
  for (std::size_t j = 0, pi = 0; j < ambient_dim; ++j) {
    if (pi < pivots.size() && pivots[pi] == j) {
      ++pi;
      continue;
    }
    free_cols.push_back(j);
  }
  q.project = Matrix(free_cols.size(), ambient_dim);
  q.representatives = Matrix(ambient_dim, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    q.representatives.at(free_cols[k], k) = 1;
    q.project.at(k, free_cols[k]) = 1; // reduce() keeps free coordinates untouched
  }
  // column j of project = coordinates of the coset of e_j: reduce e_j modulo the
  // relations, which zeroes the pivot slots and leaves a free-column combination
  for (std::size_t pj : pivots) {
    Vec v = q.relations.reduce(unit_vec(ambient_dim, pj));
    for (std::size_t k = 0; k < free_cols.size(); ++k) q.project.at(k, pj) = v[free_cols[k]];
  }
  return q;
}

namespace {

/// All diagonal generators of the symmetric part of Q^d (x) Q^d: e_i (x) e_i and the
/// polarizations e_i (x) e_j + e_j (x) e_i, written into ambient coordinates at `offset`.
void append_diagonal_generators(std::size_t d, std::size_t offset, std::size_t ambient,
                                std::vector<Vec>& out) {
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Vec v = zero_vec(ambient);
      v[offset + i * d + j] += 1;
      v[offset + j * d + i] += 1;
      out.push_back(std::move(v));
    }
}

ProductMackey build_product(const GreenLieFunctor& L1, const GreenLieFunctor& L2,
                            bool exterior) {
  if (L1.p() != L2.p())
    throw PrecondError("PrimeMismatch", "product factors must share the group order");
  if (exterior && (L1.bottom_dim() != L2.bottom_dim() || L1.top_dim() != L2.top_dim()))
    throw PrecondError("DimensionMismatch",
                       "exterior product needs levelwise equal dimensions");
  const std::size_t p = L1.p();
  const std::size_t d1e = L1.bottom_dim(), d2e = L2.bottom_dim();
  const std::size_t d1t = L1.top_dim(), d2t = L2.top_dim();
  const std::size_t ee = d1e * d2e, tt = d1t * d2t;
  const std::size_t ambient = ee + tt;

  // top-level relations: a (x) t(y) - r(a) (x) y and t(x) (x) b - x (x) r(b)
  std::vector<Vec> top_rels;
  top_rels.reserve(d1t * d2e + d1e * d2t);
  for (std::size_t i = 0; i < d1t; ++i)
    for (std::size_t j = 0; j < d2e; ++j) {
      Vec v = zero_vec(ambient);
      for (std::size_t k = 0; k < d2t; ++k) v[ee + i * d2t + k] += L2.t().at(k, j);
      for (std::size_t m = 0; m < d1e; ++m) v[m * d2e + j] -= L1.r().at(m, i);
      top_rels.push_back(std::move(v));
    }
  for (std::size_t i = 0; i < d1e; ++i)
    for (std::size_t j = 0; j < d2t; ++j) {
      Vec v = zero_vec(ambient);
      for (std::size_t k = 0; k < d1t; ++k) v[ee + k * d2t + j] += L1.t().at(k, i);
      for (std::size_t m = 0; m < d2e; ++m) v[i * d2e + m] -= L2.r().at(m, j);
      top_rels.push_back(std::move(v));
    }

  std::vector<Vec> bottom_rels;
  if (exterior) {
    append_diagonal_generators(d1e, 0, ee, bottom_rels);
    append_diagonal_generators(d1e, 0, ambient, top_rels);
    append_diagonal_generators(d1t, ee, ambient, top_rels);
  }

  ProductMackey prod;
  prod.ee_dim = ee;
  prod.bottom = quotient_space(ee, bottom_rels);
  prod.top = quotient_space(ambient, top_rels);

  // restriction on the ambient top: norm on the bottom-tensor block, r (x) r on the other
  Matrix norm_block(ee, ee);
  {
    Matrix c1k = Matrix::identity(d1e), c2k = Matrix::identity(d2e);
    for (std::size_t k = 0; k < p; ++k) {
      norm_block = norm_block + c1k.kronecker(c2k);
      c1k = L1.c() * c1k;
      c2k = L2.c() * c2k;
    }
  }
  Matrix r_ambient = norm_block.stack_right(L1.r().kronecker(L2.r()));

  // well-definedness: the ambient restriction must send relations into relations
  for (std::size_t g = 0; g < top_rels.size(); ++g) {
    Vec image = r_ambient.apply(top_rels[g]);
    bool ok = exterior ? prod.bottom.relations.contains(image) : is_zero(image);
    if (!ok)
      throw InternalCheckError("WellDefinednessFailure",
                               "restriction does not descend: image of relation generator " +
                                   std::to_string(g) + " leaves the relation span");
  }

  Matrix c_bottom_full = L1.c().kronecker(L2.c());
  Matrix embed_ee = Matrix::identity(ee).stack_below(Matrix::zero(tt, ee));
  if (exterior) {
    // the remaining structure maps must also respect the diagonal relations
    for (const Vec& v : bottom_rels) {
      if (!prod.bottom.relations.contains(c_bottom_full.apply(v)))
        throw InternalCheckError("DescentFailure",
                                 "conjugation does not preserve the diagonal relations");
      if (!prod.top.relations.contains(embed_ee.apply(v)))
        throw InternalCheckError("DescentFailure",
                                 "transfer does not preserve the diagonal relations");
    }
  }

  CpMackey m;
  m.p = p;
  m.top_dim = prod.top.dim();
  m.bottom_dim = prod.bottom.dim();
  m.r = prod.bottom.project * (r_ambient * prod.top.representatives);
  m.t = prod.top.project * (embed_ee * prod.bottom.representatives);
  m.c = prod.bottom.project * (c_bottom_full * prod.bottom.representatives);
  prod.underlying = std::move(m);

  ValidationReport report = validate_mackey(prod.underlying);
  if (!report.ok())
    throw InternalCheckError("MackeyAxiomsFailure",
                             std::string(exterior ? "exterior" : "tensor") +
                                 " product violates the Mackey axioms: " + report.summary());

  prod.provenance = std::string(exterior ? "exterior_product" : "tensor_product") +
                    " of C_" + std::to_string(p) + " functors with bottom dims " +
                    std::to_string(d1e) + " and " + std::to_string(d2e);
  return prod;
}

} // namespace

ProductMackey tensor_product(const GreenLieFunctor& L1, const GreenLieFunctor& L2) {
  return build_product(L1, L2, false);
}

ProductMackey exterior_product(const GreenLieFunctor& L1, const GreenLieFunctor& L2) {
  return build_product(L1, L2, true);
}

} // namespace greenlie
