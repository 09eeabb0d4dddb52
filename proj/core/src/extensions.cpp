#include "greenlie/extensions.hpp"

#include <array>

namespace greenlie {

namespace {

std::string vec_detail(const Vec& v) {
  std::string out = "residual [";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + "]";
}

std::string indices_detail(const std::vector<std::size_t>& indices) {
  std::string out = "(";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(indices[i]);
  }
  return out + ")";
}

void check_identity(ValidationReport& report, const std::string& name, const Matrix& lhs,
                    const Matrix& rhs) {
  Matrix diff = lhs - rhs;
  if (diff.is_zero()) return;
  std::string detail = "residual [";
  for (std::size_t i = 0; i < diff.rows(); ++i) {
    if (i) detail += "; ";
    for (std::size_t j = 0; j < diff.cols(); ++j) {
      if (j) detail += ",";
      detail += to_string(diff.at(i, j));
    }
  }
  report.add(name, {}, detail + "]");
}

void merge_prefixed(ValidationReport& into, const std::string& prefix,
                    const ValidationReport& from) {
  for (const auto& f : from.findings()) into.add(prefix + f.check, f.indices, f.detail);
}

Matrix kernel_inclusion(std::size_t dm, std::size_t dl) {
  return Matrix::identity(dm).stack_below(Matrix::zero(dl, dm));
}

Matrix quotient_projection(std::size_t dm, std::size_t dl) {
  return Matrix::zero(dl, dm).stack_right(Matrix::identity(dl));
}

Matrix canonical_section(std::size_t dm, std::size_t dl) {
  return Matrix::zero(dm, dl).stack_below(Matrix::identity(dl));
}

CpMackey direct_sum_mackey(const CpMackey& m, const CpMackey& l) {
  CpMackey out;
  out.p = m.p;
  out.top_dim = m.top_dim + l.top_dim;
  out.bottom_dim = m.bottom_dim + l.bottom_dim;
  out.r = m.r.block_diag(l.r);
  out.t = m.t.block_diag(l.t);
  out.c = m.c.block_diag(l.c);
  return out;
}

/// M + L with ((u,x), (v,y)) -> (x.v - y.u + f(x,y), [x,y]); module coordinates first.
LieAlgebra twisted_algebra(const LieAlgebra& quotient, const Representation& action,
                           const AltMap& f) {
  const std::size_t dm = action.module_dim, dl = quotient.dim(), db = dm + dl;
  std::vector<Rational> structure(db * db * db);
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    structure[(i * db + j) * db + k] = v;
  };
  for (std::size_t x = 0; x < dl; ++x)
    for (std::size_t u = 0; u < dm; ++u) {
      Vec xu = action.act(x).column(u);
      for (std::size_t k = 0; k < dm; ++k)
        if (!xu[k].is_zero()) {
          put(dm + x, u, k, xu[k]);
          put(u, dm + x, k, -xu[k]);
        }
    }
  for (std::size_t x = 0; x < dl; ++x)
    for (std::size_t y = 0; y < dl; ++y) {
      if (x == y) continue;
      Vec fv = f.eval_basis(std::array<std::size_t, 2>{x, y});
      for (std::size_t k = 0; k < dm; ++k) put(dm + x, dm + y, k, fv[k]);
      Vec br = quotient.bracket_basis(x, y);
      for (std::size_t k = 0; k < dl; ++k) put(dm + x, dm + y, dm + k, br[k]);
    }
  return LieAlgebra::unchecked(db, std::move(structure));
}

/// Abelian kernel and induced action at one level. The quotient basis is lifted through
/// the section when present, else by a deterministic solve against j.
void check_kernel_level(ValidationReport& report, const std::string& level,
                        const LieAlgebra& total, const Matrix& i, const Matrix& j,
                        const Matrix* s, const Representation& action) {
  for (std::size_t a = 0; a < i.cols(); ++a)
    for (std::size_t b = a + 1; b < i.cols(); ++b)
      if (!is_zero(total.bracket(i.column(a), i.column(b))))
        report.add("kernel_abelian_" + level, {a, b});
  for (std::size_t x = 0; x < j.rows(); ++x) {
    Vec lift;
    if (s) {
      lift = s->column(x);
    } else {
      auto sol = solve(j, unit_vec(j.rows(), x));
      if (!sol) return; // covered by the surjectivity finding
      lift = *sol;
    }
    for (std::size_t u = 0; u < i.cols(); ++u) {
      Vec lhs = total.bracket(lift, i.column(u));
      sub_in_place(lhs, i.apply(action.act(x).column(u)));
      if (!is_zero(lhs)) report.add("module_action_" + level, {x, u}, vec_detail(lhs));
    }
  }
}

/// f(x,y) = i^{-1}([s x, s y] - s [x,y]) on basis pairs of the quotient.
AltMap section_defect(const LieAlgebra& total, const LieAlgebra& quotient, const Matrix& s,
                      const Matrix& i, std::size_t module_dim) {
  AltMap f = AltMap::zero(2, quotient.dim(), module_dim);
  TupleTable pairs(quotient.dim(), 2);
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto& t = pairs[idx];
    Vec d = total.bracket(s.column(t[0]), s.column(t[1]));
    sub_in_place(d, s.apply(quotient.bracket_basis(t[0], t[1])));
    auto u = solve(i, d);
    if (!u)
      throw InternalCheckError("PreimageFailure",
                               "bracket defect at " + indices_detail({t[0], t[1]}) +
                                   " escapes the kernel image");
    for (std::size_t k = 0; k < module_dim; ++k) f.coeff[idx * module_dim + k] = (*u)[k];
  }
  return f;
}

/// Degree-1 alternating map as a module_dim x source_dim matrix.
Matrix cochain_matrix(const AltMap& h) {
  Matrix out(h.module_dim, h.source_dim);
  for (std::size_t j = 0; j < h.source_dim; ++j)
    for (std::size_t k = 0; k < h.module_dim; ++k) out.at(k, j) = h.coeff[j * h.module_dim + k];
  return out;
}

/// beta(u,x) = (u + h(x), x) as the unit-triangular block matrix [I h; 0 I].
Matrix beta_matrix(std::size_t dm, const Matrix& h) {
  Matrix upper = Matrix::identity(dm).stack_right(h);
  Matrix lower = Matrix::zero(h.cols(), dm).stack_right(Matrix::identity(h.cols()));
  return upper.stack_below(lower);
}

/// Re-verifies that the witness h really connects the twisted extensions of f and g:
/// beta must be a Lie homomorphism at both levels (invertible by shape) and commute
/// with r, t and c.
void verify_equivalence(const GreenLieFunctor& L, const LieBimodule& M, const EquivCochain& f,
                        const EquivCochain& g, const EquivCochain& h) {
  Matrix beta_top = beta_matrix(M.top_dim(), cochain_matrix(h.top));
  Matrix beta_bottom = beta_matrix(M.bottom_dim(), cochain_matrix(h.bottom));
  if (!check_hom(twisted_algebra(L.top(), M.action_top, f.top),
                 twisted_algebra(L.top(), M.action_top, g.top), beta_top)
           .ok() ||
      !check_hom(twisted_algebra(L.bottom(), M.action_bottom, f.bottom),
                 twisted_algebra(L.bottom(), M.action_bottom, g.bottom), beta_bottom)
           .ok())
    throw InternalCheckError("WellDefinednessFailure",
                             "equivalence witness is not a Lie homomorphism");
  CpMackey mb = direct_sum_mackey(M.underlying, L.mackey());
  if (!(mb.r * beta_top - beta_bottom * mb.r).is_zero() ||
      !(mb.t * beta_bottom - beta_top * mb.t).is_zero() ||
      !(mb.c * beta_bottom - beta_bottom * mb.c).is_zero())
    throw InternalCheckError("WellDefinednessFailure",
                             "equivalence witness does not commute with the structure maps");
}

} // namespace

ValidationReport check_cocycle_conditions(const GreenLieFunctor& L, const LieBimodule& M,
                                          const EquivCochain& f) {
  if (f.degree != 2)
    throw PrecondError("DegreeMismatch", "cocycle conditions apply to degree-2 cochains");
  if (f.top.source_dim != L.top_dim() || f.top.module_dim != M.top_dim() ||
      f.bottom.source_dim != L.bottom_dim() || f.bottom.module_dim != M.bottom_dim())
    throw PrecondError("DimensionMismatch", "cochain pair does not match the levels");
  ValidationReport report;
  auto add_cocycle_findings = [&report](const std::string& name, const AltMap& df) {
    TupleTable triples(df.source_dim, 3);
    for (std::size_t t = 0; t < triples.size(); ++t) {
      Vec res(df.coeff.begin() + t * df.module_dim, df.coeff.begin() + (t + 1) * df.module_dim);
      if (!is_zero(res))
        report.add(name, {triples[t][0], triples[t][1], triples[t][2]}, vec_detail(res));
    }
  };
  add_cocycle_findings("condition_1_top_cocycle", ce_apply(M.action_top, f.top));
  add_cocycle_findings("condition_2_bottom_cocycle", ce_apply(M.action_bottom, f.bottom));
  for (std::size_t a = 0; a < L.bottom_dim(); ++a)
    for (std::size_t b = a + 1; b < L.bottom_dim(); ++b) {
      std::array<Vec, 2> args{L.c().column(a), L.c().column(b)};
      Vec lhs = f.bottom.eval(args);
      sub_in_place(lhs, M.underlying.c.apply(
                            f.bottom.eval_basis(std::array<std::size_t, 2>{a, b})));
      if (!is_zero(lhs)) report.add("condition_3_conjugation", {a, b}, vec_detail(lhs));
    }
  for (std::size_t x = 0; x < L.top_dim(); ++x)
    for (std::size_t y = x + 1; y < L.top_dim(); ++y) {
      std::array<Vec, 2> args{L.r().column(x), L.r().column(y)};
      Vec lhs = f.bottom.eval(args);
      sub_in_place(lhs, M.underlying.r.apply(
                            f.top.eval_basis(std::array<std::size_t, 2>{x, y})));
      if (!is_zero(lhs)) report.add("condition_4_restriction", {x, y}, vec_detail(lhs));
    }
  for (std::size_t x = 0; x < L.bottom_dim(); ++x)
    for (std::size_t a = 0; a < L.top_dim(); ++a) {
      std::array<Vec, 2> first{L.t().column(x), unit_vec(L.top_dim(), a)};
      Vec lhs = f.top.eval(first);
      std::array<Vec, 2> inner{unit_vec(L.bottom_dim(), x), L.r().column(a)};
      sub_in_place(lhs, M.underlying.t.apply(f.bottom.eval(inner)));
      if (!is_zero(lhs)) report.add("condition_5_transfer_first", {x, a}, vec_detail(lhs));

      std::array<Vec, 2> last{unit_vec(L.top_dim(), a), L.t().column(x)};
      Vec rhs = f.top.eval(last);
      std::array<Vec, 2> inner2{L.r().column(a), unit_vec(L.bottom_dim(), x)};
      sub_in_place(rhs, M.underlying.t.apply(f.bottom.eval(inner2)));
      if (!is_zero(rhs)) report.add("condition_6_transfer_last", {a, x}, vec_detail(rhs));
    }
  return report;
}

Extension build_extension(const GreenLieFunctor& L, const LieBimodule& M,
                          const EquivCochain& f) {
  if (M.underlying.p != L.p())
    throw PrecondError("DimensionMismatch", "module and functor have different group orders");
  ValidationReport conditions = check_cocycle_conditions(L, M, f);
  LieAlgebra top = twisted_algebra(L.top(), M.action_top, f.top);
  LieAlgebra bottom = twisted_algebra(L.bottom(), M.action_bottom, f.bottom);
  CpMackey mackey = direct_sum_mackey(M.underlying, L.mackey());
  if (!conditions.ok()) {
    ValidationReport axioms = validate_green_lie(GreenLieFunctor::unchecked(mackey, top, bottom));
    const Finding& cond = conditions.findings().front();
    std::string msg = cond.check + " fails at " + indices_detail(cond.indices) + ", " + cond.detail;
    if (axioms.ok())
      msg += "; yet the unchecked total space passes validation";
    else
      msg += "; the unchecked total space violates " + axioms.findings().front().check +
             " at " + indices_detail(axioms.findings().front().indices);
    throw PrecondError("NotACocycle", msg);
  }
  GreenLieFunctor B = GreenLieFunctor::make(std::move(mackey), std::move(top), std::move(bottom));
  const std::size_t mt = M.top_dim(), mb = M.bottom_dim();
  const std::size_t lt = L.top_dim(), lb = L.bottom_dim();
  return Extension{L, M, std::move(B),
                   GreenLieMorphism{kernel_inclusion(mt, lt), kernel_inclusion(mb, lb)},
                   GreenLieMorphism{quotient_projection(mt, lt), quotient_projection(mb, lb)},
                   SectionPair{canonical_section(mt, lt), canonical_section(mb, lb)}};
}

ValidationReport validate_extension(const Extension& E) {
  ValidationReport report;
  const std::size_t mt = E.M.top_dim(), mb = E.M.bottom_dim();
  const std::size_t lt = E.L.top_dim(), lb = E.L.bottom_dim();
  const std::size_t bt = E.B.top_dim(), bb = E.B.bottom_dim();
  if (E.L.p() != E.B.p() || E.M.underlying.p != E.L.p()) {
    report.add("prime_mismatch", {E.L.p(), E.B.p(), E.M.underlying.p});
    return report;
  }
  if (E.i.top.rows() != bt || E.i.top.cols() != mt || E.i.bottom.rows() != bb ||
      E.i.bottom.cols() != mb || E.j.top.rows() != lt || E.j.top.cols() != bt ||
      E.j.bottom.rows() != lb || E.j.bottom.cols() != bb) {
    report.add("map_shapes", {}, "i or j shapes do not match the levels");
    return report;
  }
  if (E.s && (E.s->top.rows() != bt || E.s->top.cols() != lt || E.s->bottom.rows() != bb ||
              E.s->bottom.cols() != lb)) {
    report.add("section_shapes", {}, "section shapes do not match the levels");
    return report;
  }
  merge_prefixed(report, "L_", validate_green_lie(E.L));
  merge_prefixed(report, "B_", validate_green_lie(E.B));
  merge_prefixed(report, "M_", validate_bimodule(E.L, E.M));
  merge_prefixed(report, "j_", validate_morphism(E.B, E.L, E.j));
  if (rank(E.i.top) != mt) report.add("i_injective_top", {});
  if (rank(E.i.bottom) != mb) report.add("i_injective_bottom", {});
  if (rank(E.j.top) != lt) report.add("j_surjective_top", {});
  if (rank(E.j.bottom) != lb) report.add("j_surjective_bottom", {});
  check_identity(report, "i_restriction_square", E.B.r() * E.i.top,
                 E.i.bottom * E.M.underlying.r);
  check_identity(report, "i_transfer_square", E.B.t() * E.i.bottom,
                 E.i.top * E.M.underlying.t);
  check_identity(report, "i_conjugation_square", E.B.c() * E.i.bottom,
                 E.i.bottom * E.M.underlying.c);
  if (kernel_basis(E.j.top) != column_space(E.i.top))
    report.add("exactness_top", {}, "ker j != im i");
  if (kernel_basis(E.j.bottom) != column_space(E.i.bottom))
    report.add("exactness_bottom", {}, "ker j != im i");
  check_kernel_level(report, "top", E.B.top(), E.i.top, E.j.top, E.s ? &E.s->top : nullptr,
                     E.M.action_top);
  check_kernel_level(report, "bottom", E.B.bottom(), E.i.bottom, E.j.bottom,
                     E.s ? &E.s->bottom : nullptr, E.M.action_bottom);
  if (E.s) {
    check_identity(report, "section_splits_top", E.j.top * E.s->top, Matrix::identity(lt));
    check_identity(report, "section_splits_bottom", E.j.bottom * E.s->bottom,
                   Matrix::identity(lb));
    check_identity(report, "section_restriction_square", E.B.r() * E.s->top,
                   E.s->bottom * E.L.r());
    check_identity(report, "section_transfer_square", E.B.t() * E.s->bottom,
                   E.s->top * E.L.t());
    check_identity(report, "section_conjugation_square", E.B.c() * E.s->bottom,
                   E.s->bottom * E.L.c());
  }
  return report;
}

EquivCochain extract_cocycle(const Extension& E) {
  if (!E.s) throw PrecondError("SectionMissing", "extracting a cocycle needs a section of j");
  const SectionPair& s = *E.s;
  const std::size_t lt = E.L.top_dim(), lb = E.L.bottom_dim();
  if (s.top.rows() != E.B.top_dim() || s.top.cols() != lt ||
      s.bottom.rows() != E.B.bottom_dim() || s.bottom.cols() != lb ||
      E.i.top.rows() != E.B.top_dim() || E.i.top.cols() != E.M.top_dim() ||
      E.i.bottom.rows() != E.B.bottom_dim() || E.i.bottom.cols() != E.M.bottom_dim() ||
      E.j.top.rows() != lt || E.j.top.cols() != E.B.top_dim() || E.j.bottom.rows() != lb ||
      E.j.bottom.cols() != E.B.bottom_dim())
    throw PrecondError("DimensionMismatch", "extension maps do not match the levels");
  auto require_square = [](const char* name, const Matrix& lhs, const Matrix& rhs) {
    if (!(lhs - rhs).is_zero())
      throw PrecondError("SectionNotCompatible", std::string(name) + " fails");
  };
  require_square("section_splits_top", E.j.top * s.top, Matrix::identity(lt));
  require_square("section_splits_bottom", E.j.bottom * s.bottom, Matrix::identity(lb));
  require_square("section_restriction_square", E.B.r() * s.top, s.bottom * E.L.r());
  require_square("section_transfer_square", E.B.t() * s.bottom, s.top * E.L.t());
  require_square("section_conjugation_square", E.B.c() * s.bottom, s.bottom * E.L.c());
  EquivCochain f{2, section_defect(E.B.top(), E.L.top(), s.top, E.i.top, E.M.top_dim()),
                 section_defect(E.B.bottom(), E.L.bottom(), s.bottom, E.i.bottom,
                                E.M.bottom_dim())};
  if (!is_cocycle(E.L, E.M, 2, Level::top, f.to_pair()))
    throw InternalCheckError("ConstraintViolation", "extracted cochain is not a cocycle pair");
  return f;
}

std::optional<EquivCochain> find_equivalence(const GreenLieFunctor& L, const LieBimodule& M,
                                             const EquivCochain& f, const EquivCochain& g) {
  for (const EquivCochain* z : {&f, &g}) {
    ValidationReport conditions = check_cocycle_conditions(L, M, *z);
    if (!conditions.ok()) {
      const Finding& cond = conditions.findings().front();
      throw PrecondError("NotACocycle", cond.check + " fails at " +
                                            indices_detail(cond.indices) + ", " + cond.detail);
    }
  }
  const CochainSpace c1 = cochain_space(L, M, 1);
  Matrix basis = Matrix::from_columns(c1.top_space.ambient_dim(), c1.top_space.basis());
  Vec target = f.to_pair();
  sub_in_place(target, g.to_pair());
  auto coords = solve(pair_coboundary(L, M, 1) * basis, target);
  if (!coords) return std::nullopt;
  EquivCochain h = pair_to_cochain(L, M, 1, basis.apply(*coords));
  verify_equivalence(L, M, f, g, h);
  return h;
}

ExtensionClassification classify_extensions(const GreenLieFunctor& L, const LieBimodule& M) {
  ExtensionClassification out{cohomology(L, M, 2), {}, {}};
  for (const Vec& rep : out.h2.representatives_top) {
    EquivCochain f = pair_to_cochain(L, M, 2, rep);
    out.extensions.push_back(build_extension(L, M, f));
    out.representatives.push_back(std::move(f));
  }
  return out;
}

} // namespace greenlie
