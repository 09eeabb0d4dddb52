#include "greenlie/mackey.hpp"

namespace greenlie {

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

std::string residual_detail(const Matrix& m) {
  std::string out = "residual [";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += to_string(m.at(i, j));
    }
  }
  return out + "]";
}

void check_identity(ValidationReport& report, const std::string& name, const Matrix& lhs,
                    const Matrix& rhs) {
  Matrix diff = lhs - rhs;
  if (!diff.is_zero()) report.add(name, {}, residual_detail(diff));
}

} // namespace

ValidationReport validate_mackey(const CpMackey& m) {
  ValidationReport report;
  if (!is_prime(m.p)) {
    report.add("prime_order", {m.p}, "p must be prime");
    return report;
  }
  if (m.r.rows() != m.bottom_dim || m.r.cols() != m.top_dim ||
      m.t.rows() != m.top_dim || m.t.cols() != m.bottom_dim ||
      m.c.rows() != m.bottom_dim || m.c.cols() != m.bottom_dim) {
    report.add("map_shapes", {}, "r, t, c shapes must match the level dimensions");
    return report;
  }
  check_identity(report, "conjugation_order", m.c.power(m.p), Matrix::identity(m.bottom_dim));
  check_identity(report, "conjugation_fixes_restriction", m.c * m.r, m.r);
  check_identity(report, "transfer_conjugation_invariance", m.t * m.c, m.t);
  Matrix norm(m.bottom_dim, m.bottom_dim);
  for (std::size_t i = 0; i < m.p; ++i) norm = norm + m.c.power(i);
  check_identity(report, "double_coset", m.r * m.t, norm);
  return report;
}

GreenLieFunctor GreenLieFunctor::unchecked(CpMackey mackey, LieAlgebra top, LieAlgebra bottom) {
  if (top.dim() != mackey.top_dim || bottom.dim() != mackey.bottom_dim)
    throw PrecondError("DimensionMismatch", "Lie algebra dimensions must match the Mackey levels");
  GreenLieFunctor L;
  L.mackey_ = std::move(mackey);
  L.top_ = std::move(top);
  L.bottom_ = std::move(bottom);
  return L;
}

GreenLieFunctor GreenLieFunctor::make(CpMackey mackey, LieAlgebra top, LieAlgebra bottom) {
  GreenLieFunctor L = unchecked(std::move(mackey), std::move(top), std::move(bottom));
  ValidationReport report = validate_green_lie(L);
  if (!report.ok()) throw ValidationError(report);
  return L;
}

ValidationReport validate_green_lie(const GreenLieFunctor& L) {
  ValidationReport report = validate_mackey(L.mackey());
  {
    ValidationReport lie_top = check_lie(L.top());
    for (const auto& f : lie_top.findings()) report.add("top_" + f.check, f.indices, f.detail);
    ValidationReport lie_bottom = check_lie(L.bottom());
    for (const auto& f : lie_bottom.findings()) report.add("bottom_" + f.check, f.indices, f.detail);
  }
  {
    ValidationReport r_hom = check_hom(L.top(), L.bottom(), L.r());
    for (const auto& f : r_hom.findings()) report.add("restriction_" + f.check, f.indices, f.detail);
    ValidationReport c_hom = check_hom(L.bottom(), L.bottom(), L.c());
    for (const auto& f : c_hom.findings()) report.add("conjugation_" + f.check, f.indices, f.detail);
  }
  // Frobenius: [t(x), b] = t([x, r(b)]) and [b, t(x)] = t([r(b), x])
  for (std::size_t x = 0; x < L.bottom_dim(); ++x)
    for (std::size_t b = 0; b < L.top_dim(); ++b) {
      Vec tb = L.top().bracket(L.t().column(x), unit_vec(L.top_dim(), b));
      Vec inner = L.bottom().bracket(unit_vec(L.bottom_dim(), x), L.r().column(b));
      Vec rhs = L.t().apply(inner);
      sub_in_place(tb, rhs);
      if (!is_zero(tb)) report.add("frobenius_left", {x, b});

      Vec bt = L.top().bracket(unit_vec(L.top_dim(), b), L.t().column(x));
      Vec inner2 = L.bottom().bracket(L.r().column(b), unit_vec(L.bottom_dim(), x));
      Vec rhs2 = L.t().apply(inner2);
      sub_in_place(bt, rhs2);
      if (!is_zero(bt)) report.add("frobenius_right", {x, b});
    }
  return report;
}

ValidationReport validate_morphism(const GreenLieFunctor& L1, const GreenLieFunctor& L2,
                                   const GreenLieMorphism& f) {
  ValidationReport report;
  if (L1.p() != L2.p()) {
    report.add("prime_mismatch", {L1.p(), L2.p()});
    return report;
  }
  if (f.top.rows() != L2.top_dim() || f.top.cols() != L1.top_dim() ||
      f.bottom.rows() != L2.bottom_dim() || f.bottom.cols() != L1.bottom_dim()) {
    report.add("map_shapes", {}, "morphism component shapes do not match the levels");
    return report;
  }
  {
    ValidationReport top_hom = check_hom(L1.top(), L2.top(), f.top);
    for (const auto& g : top_hom.findings()) report.add("top_" + g.check, g.indices, g.detail);
    ValidationReport bottom_hom = check_hom(L1.bottom(), L2.bottom(), f.bottom);
    for (const auto& g : bottom_hom.findings()) report.add("bottom_" + g.check, g.indices, g.detail);
  }
  check_identity(report, "transfer_square", f.top * L1.t(), L2.t() * f.bottom);
  check_identity(report, "restriction_square", f.bottom * L1.r(), L2.r() * f.top);
  check_identity(report, "conjugation_square", f.bottom * L1.c(), L2.c() * f.bottom);
  return report;
}

GreenLieMorphism compose(const GreenLieMorphism& g, const GreenLieMorphism& f) {
  return GreenLieMorphism{g.top * f.top, g.bottom * f.bottom};
}

ValidationReport validate_bimodule(const GreenLieFunctor& L, const LieBimodule& M) {
  ValidationReport report;
  if (M.underlying.p != L.p()) {
    report.add("prime_mismatch", {M.underlying.p, L.p()});
    return report;
  }
  {
    ValidationReport mackey = validate_mackey(M.underlying);
    for (const auto& f : mackey.findings()) report.add("module_" + f.check, f.indices, f.detail);
  }
  if (M.action_top.algebra != L.top() || M.action_bottom.algebra != L.bottom()) {
    report.add("action_algebra_mismatch", {},
               "representations must be over the functor's own Lie algebras");
    return report;
  }
  if (M.action_top.module_dim != M.top_dim() || M.action_bottom.module_dim != M.bottom_dim()) {
    report.add("map_shapes", {}, "action module dimensions do not match the Mackey levels");
    return report;
  }
  {
    ValidationReport top_rep = check_rep(M.action_top);
    for (const auto& f : top_rep.findings()) report.add("top_" + f.check, f.indices, f.detail);
    ValidationReport bottom_rep = check_rep(M.action_bottom);
    for (const auto& f : bottom_rep.findings()) report.add("bottom_" + f.check, f.indices, f.detail);
  }
  const Matrix& rM = M.underlying.r;
  const Matrix& tM = M.underlying.t;
  const Matrix& cM = M.underlying.c;
  // r_M(a.m) = r_L(a).r_M(m) for top basis a
  for (std::size_t i = 0; i < L.top_dim(); ++i) {
    Matrix lhs = rM * M.action_top.act(i);
    Matrix rhs = M.action_bottom.act_vec(L.r().column(i)) * rM;
    if (!(lhs - rhs).is_zero()) report.add("module_restriction_compat", {i});
  }
  // c_M(x.u) = c_L(x).c_M(u) for bottom basis x
  for (std::size_t j = 0; j < L.bottom_dim(); ++j) {
    Matrix lhs = cM * M.action_bottom.act(j);
    Matrix rhs = M.action_bottom.act_vec(L.c().column(j)) * cM;
    if (!(lhs - rhs).is_zero()) report.add("module_conjugation_compat", {j});
  }
  // t_L(x).m = t_M(x.r_M(m)) for bottom basis x
  for (std::size_t j = 0; j < L.bottom_dim(); ++j) {
    Matrix lhs = M.action_top.act_vec(L.t().column(j));
    Matrix rhs = tM * M.action_bottom.act(j) * rM;
    if (!(lhs - rhs).is_zero()) report.add("module_frobenius_transfer_acts", {j});
  }
  // a.t_M(u) = t_M(r_L(a).u) for top basis a
  for (std::size_t i = 0; i < L.top_dim(); ++i) {
    Matrix lhs = M.action_top.act(i) * tM;
    Matrix rhs = tM * M.action_bottom.act_vec(L.r().column(i));
    if (!(lhs - rhs).is_zero()) report.add("module_frobenius_acts_transfer", {i});
  }
  if (M.bracket_top || M.bracket_bottom) {
    if (!M.bracket_top || !M.bracket_bottom)
      report.add("module_bracket_levels", {}, "Lie structure must be given at both levels");
    else if (M.bracket_top->dim() != M.top_dim() || M.bracket_bottom->dim() != M.bottom_dim())
      report.add("module_bracket_shapes", {}, "bracket dimensions do not match the levels");
  }
  return report;
}

LieBimodule adjoint_bimodule(const GreenLieFunctor& L) {
  LieBimodule M;
  M.underlying = L.mackey();
  M.action_top = adjoint_rep(L.top());
  M.action_bottom = adjoint_rep(L.bottom());
  M.bracket_top = L.top();
  M.bracket_bottom = L.bottom();
  return M;
}

LieBimodule trivial_bimodule(const GreenLieFunctor& L, std::size_t dim) {
  LieBimodule M;
  M.underlying.p = L.p();
  M.underlying.top_dim = dim;
  M.underlying.bottom_dim = dim;
  M.underlying.r = Matrix::identity(dim);
  M.underlying.t = Matrix::identity(dim).scaled(Rational(L.p()));
  M.underlying.c = Matrix::identity(dim);
  M.action_top = trivial_rep(L.top(), dim);
  M.action_bottom = trivial_rep(L.bottom(), dim);
  M.bracket_top = LieAlgebra::abelian(dim);
  M.bracket_bottom = LieAlgebra::abelian(dim);
  return M;
}

} // namespace greenlie
