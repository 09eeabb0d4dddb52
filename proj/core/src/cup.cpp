#include "greenlie/cup.hpp"

namespace greenlie {

namespace {

const LieAlgebra& require_bracket(const std::optional<LieAlgebra>& b, std::size_t dim) {
  if (!b) throw PrecondError("NoBracketOnM", "module carries no Lie bracket at this level");
  if (b->dim() != dim)
    throw PrecondError("DimensionMismatch", "module bracket does not match the level");
  return *b;
}

Vec coeff_block(const AltMap& f, std::size_t tuple_idx) {
  auto first = f.coeff.begin() + static_cast<std::ptrdiff_t>(tuple_idx * f.module_dim);
  return Vec(first, first + static_cast<std::ptrdiff_t>(f.module_dim));
}

/// Subsequence of `tuple` at the given positions (positions increasing, so the result of
/// an increasing tuple stays increasing).
std::vector<std::size_t> pick(const std::vector<std::size_t>& tuple,
                              const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(tuple[p]);
  return out;
}

void check_cup_operands(const AltMap& f, const AltMap& g) {
  if (f.source_dim != g.source_dim || f.module_dim != g.module_dim)
    throw PrecondError("DimensionMismatch", "cup operands live on different spaces");
}

} // namespace

std::vector<Shuffle> shuffles(std::size_t m, std::size_t n) {
  std::vector<Shuffle> out;
  TupleTable lefts(m + n, m);
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    Shuffle s;
    s.left = lefts[i];
    std::size_t inversions = 0;
    std::vector<bool> taken(m + n, false);
    for (std::size_t k = 0; k < m; ++k) {
      taken[s.left[k]] = true;
      inversions += s.left[k] - k; // positions to the right of slot k it jumped over
    }
    for (std::size_t p = 0; p < m + n; ++p)
      if (!taken[p]) s.right.push_back(p);
    s.sign = inversions % 2 == 0 ? 1 : -1;
    out.push_back(std::move(s));
  }
  return out;
}

AltMap cup_level(const AltMap& f, const AltMap& g, const LieAlgebra& bracket) {
  check_cup_operands(f, g);
  if (bracket.dim() != f.module_dim)
    throw PrecondError("DimensionMismatch", "bracket does not match the coefficient space");
  const std::size_t m = f.degree, n = g.degree, d = f.source_dim;
  AltMap out = AltMap::zero(m + n, d, f.module_dim);
  std::vector<Shuffle> sigma = shuffles(m, n);
  TupleTable tuples(d, m + n);
  TupleTable left_tuples(d, m), right_tuples(d, n);
  for (std::size_t u = 0; u < tuples.size(); ++u) {
    Vec val(f.module_dim);
    for (const Shuffle& s : sigma) {
      Vec vf = coeff_block(f, left_tuples.index_of(pick(tuples[u], s.left)));
      Vec vg = coeff_block(g, right_tuples.index_of(pick(tuples[u], s.right)));
      axpy(val, Rational(s.sign), bracket.bracket(vf, vg));
    }
    for (std::size_t k = 0; k < f.module_dim; ++k) out.coeff[u * f.module_dim + k] = val[k];
  }
  return out;
}

AltMap bottom_cup(const LieBimodule& M, const AltMap& f, const AltMap& g) {
  return cup_level(f, g, require_bracket(M.bracket_bottom, M.bottom_dim()));
}

EquivCochain cup(const GreenLieFunctor& L, const LieBimodule& M, const EquivCochain& f,
                 const EquivCochain& g) {
  const LieAlgebra& bt = require_bracket(M.bracket_top, M.top_dim());
  const LieAlgebra& be = require_bracket(M.bracket_bottom, M.bottom_dim());
  EquivCochain out;
  out.degree = f.degree + g.degree;
  out.top = cup_level(f.top, g.top, bt);
  out.bottom = cup_level(f.bottom, g.bottom, be);
  bool constrained = is_zero(constraint_matrix(L, M, f.degree).apply(f.to_pair())) &&
                     is_zero(constraint_matrix(L, M, g.degree).apply(g.to_pair()));
  if (constrained && !is_zero(constraint_matrix(L, M, out.degree).apply(out.to_pair())))
    throw InternalCheckError("ConstraintViolation",
                             "cup product of constrained cochains violates the pair "
                             "constraints at degree " +
                                 std::to_string(out.degree));
  return out;
}

namespace {

void report_diff(ValidationReport& report, const std::string& check, const AltMap& lhs,
                 const AltMap& rhs) {
  for (std::size_t i = 0; i < lhs.coeff.size(); ++i)
    if (lhs.coeff[i] != rhs.coeff[i])
      report.add(check, {i / lhs.module_dim, i % lhs.module_dim},
                 to_string(lhs.coeff[i] - rhs.coeff[i]));
}

AltMap leibniz_rhs(const Representation& rho, const LieAlgebra& bracket, const AltMap& f,
                   const AltMap& g) {
  AltMap first = cup_level(ce_apply(rho, f), g, bracket);
  AltMap second = cup_level(f, ce_apply(rho, g), bracket);
  return first + scaled(second, Rational(f.degree % 2 == 0 ? 1 : -1));
}

AltMap conj_cochain(const GreenLieFunctor& L, const LieBimodule& M, const AltMap& f) {
  AltMap out = f;
  out.coeff = cochain_conjugation(L, M, f.degree).apply(f.coeff);
  return out;
}

} // namespace

ValidationReport check_leibniz(const GreenLieFunctor& L, const LieBimodule& M,
                               const EquivCochain& f, const EquivCochain& g) {
  const LieAlgebra& bt = require_bracket(M.bracket_top, M.top_dim());
  const LieAlgebra& be = require_bracket(M.bracket_bottom, M.bottom_dim());
  ValidationReport report;
  report_diff(report, "leibniz_1",
              ce_apply(M.action_top, cup_level(f.top, g.top, bt)),
              leibniz_rhs(M.action_top, bt, f.top, g.top));
  // the second and third identities both evaluate at level e
  AltMap lhs_e = ce_apply(M.action_bottom, cup_level(f.bottom, g.bottom, be));
  AltMap rhs_e = leibniz_rhs(M.action_bottom, be, f.bottom, g.bottom);
  report_diff(report, "leibniz_2", lhs_e, rhs_e);
  report_diff(report, "leibniz_3", lhs_e, rhs_e);
  return report;
}

ValidationReport check_pairing_axioms(const GreenLieFunctor& L, const LieBimodule& M,
                                      const EquivCochain& f, const EquivCochain& g) {
  const LieAlgebra& be = require_bracket(M.bracket_bottom, M.bottom_dim());
  require_bracket(M.bracket_top, M.top_dim());
  ValidationReport report;
  EquivCochain fg = cup(L, M, f, g);
  // restriction: the bottom component of the pair cup is the level-e cup of the bottoms
  report_diff(report, "pairing_restriction", fg.bottom,
              cup_level(cochain_restriction(f), cochain_restriction(g), be));
  // conjugation equivariance at level e
  report_diff(report, "pairing_conjugation",
              cup_level(conj_cochain(L, M, f.bottom), conj_cochain(L, M, g.bottom), be),
              conj_cochain(L, M, cup_level(f.bottom, g.bottom, be)));
  // transfer Frobenius, first argument: T(f_e) cup g = T(f_e cup_e R(g))
  {
    EquivCochain lhs = cup(L, M, cochain_transfer(L, M, f.bottom), g);
    EquivCochain rhs =
        cochain_transfer(L, M, cup_level(f.bottom, cochain_restriction(g), be));
    report_diff(report, "pairing_transfer_first", lhs.top, rhs.top);
    report_diff(report, "pairing_transfer_first", lhs.bottom, rhs.bottom);
  }
  // transfer Frobenius, second argument: f cup T(g_e) = T(R(f) cup_e g_e)
  {
    EquivCochain lhs = cup(L, M, f, cochain_transfer(L, M, g.bottom));
    EquivCochain rhs =
        cochain_transfer(L, M, cup_level(cochain_restriction(f), g.bottom, be));
    report_diff(report, "pairing_transfer_last", lhs.top, rhs.top);
    report_diff(report, "pairing_transfer_last", lhs.bottom, rhs.bottom);
  }
  return report;
}

namespace {

/// Class of v in the representative basis, solving against [reps | boundaries].
Vec table_class(const std::vector<Vec>& reps, const Subspace& boundaries,
                std::size_t ambient, const Vec& v, const std::string& context) {
  std::vector<Vec> cols = reps;
  for (const Vec& b : boundaries.basis()) cols.push_back(b);
  auto x = solve(Matrix::from_columns(ambient, cols), v);
  if (!x) throw InternalCheckError("DescentFailure", context + ": image is not a cocycle");
  return Vec(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(reps.size()));
}

struct LevelData {
  std::vector<Vec> reps;              ///< cohomology representatives
  Subspace boundaries = Subspace(0);  ///< coboundary subspace
  std::size_t ambient = 0;            ///< cochain coordinates
};

} // namespace

GradedCohomologyTable graded_cohomology_table(const GreenLieFunctor& L,
                                              const LieBimodule& M,
                                              std::size_t max_degree) {
  const LieAlgebra& bt = require_bracket(M.bracket_top, M.top_dim());
  const LieAlgebra& be = require_bracket(M.bracket_bottom, M.bottom_dim());
  GradedCohomologyTable table;
  table.max_degree = max_degree;
  std::vector<LevelData> top(max_degree + 1), bottom(max_degree + 1);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    table.groups.push_back(cohomology(L, M, k));
    const CohomologyResult& h = table.groups.back();
    PairLayout layout = pair_layout(L, M, k);
    top[k].ambient = layout.total();
    top[k].reps = h.representatives_top;
    bottom[k].ambient = layout.bottom_block;
    bottom[k].reps = h.representatives_bottom;
    if (k == 0) {
      top[k].boundaries = Subspace(top[k].ambient);
      bottom[k].boundaries = Subspace(bottom[k].ambient);
    } else {
      CochainSpace prev = cochain_space(L, M, k - 1);
      Matrix prev_basis =
          Matrix::from_columns(prev.top_space.ambient_dim(), prev.top_space.basis());
      top[k].boundaries = column_space(pair_coboundary(L, M, k - 1) * prev_basis);
      bottom[k].boundaries = column_space(ce_coboundary(M.action_bottom, k - 1));
    }
  }
  // induced products on classes, with the cocycle-cup-coboundary absorption asserted
  for (std::size_t m = 0; m <= max_degree; ++m)
    for (std::size_t n = 0; m + n <= max_degree; ++n) {
      GradedProductEntry entry;
      entry.m = m;
      entry.n = n;
      const LevelData &tm = top[m], &tn = top[n], &tk = top[m + n];
      const LevelData &bm = bottom[m], &bn = bottom[n], &bk = bottom[m + n];
      entry.top = Matrix(tk.reps.size(), tm.reps.size() * tn.reps.size());
      entry.bottom = Matrix(bk.reps.size(), bm.reps.size() * bn.reps.size());
      auto top_cup_pair = [&](const Vec& a, const Vec& b) {
        EquivCochain fa = pair_to_cochain(L, M, m, a);
        EquivCochain gb = pair_to_cochain(L, M, n, b);
        return cup(L, M, fa, gb).to_pair();
      };
      for (std::size_t i = 0; i < tm.reps.size(); ++i) {
        for (std::size_t j = 0; j < tn.reps.size(); ++j) {
          Vec cls = table_class(tk.reps, tk.boundaries, tk.ambient,
                                top_cup_pair(tm.reps[i], tn.reps[j]),
                                "cup product on classes");
          for (std::size_t r = 0; r < cls.size(); ++r)
            entry.top.at(r, i * tn.reps.size() + j) = cls[r];
        }
        // absorption: cocycle cup coboundary stays a coboundary
        for (const Vec& b : tn.boundaries.basis())
          if (!tk.boundaries.contains(top_cup_pair(tm.reps[i], b)))
            throw InternalCheckError("DescentFailure",
                                     "cocycle cup coboundary escapes the coboundaries");
      }
      for (const Vec& b : tm.boundaries.basis())
        for (std::size_t j = 0; j < tn.reps.size(); ++j)
          if (!tk.boundaries.contains(top_cup_pair(b, tn.reps[j])))
            throw InternalCheckError("DescentFailure",
                                     "coboundary cup cocycle escapes the coboundaries");
      auto bottom_cup_vec = [&](const Vec& a, const Vec& b) {
        AltMap fa = AltMap::zero(m, L.bottom_dim(), M.bottom_dim());
        fa.coeff = a;
        AltMap gb = AltMap::zero(n, L.bottom_dim(), M.bottom_dim());
        gb.coeff = b;
        return cup_level(fa, gb, be).coeff;
      };
      for (std::size_t i = 0; i < bm.reps.size(); ++i) {
        for (std::size_t j = 0; j < bn.reps.size(); ++j) {
          Vec cls = table_class(bk.reps, bk.boundaries, bk.ambient,
                                bottom_cup_vec(bm.reps[i], bn.reps[j]),
                                "level-e cup product on classes");
          for (std::size_t r = 0; r < cls.size(); ++r)
            entry.bottom.at(r, i * bn.reps.size() + j) = cls[r];
        }
        for (const Vec& b : bn.boundaries.basis())
          if (!bk.boundaries.contains(bottom_cup_vec(bm.reps[i], b)))
            throw InternalCheckError("DescentFailure",
                                     "cocycle cup coboundary escapes the coboundaries");
      }
      for (const Vec& b : bm.boundaries.basis())
        for (std::size_t j = 0; j < bn.reps.size(); ++j)
          if (!bk.boundaries.contains(bottom_cup_vec(b, bn.reps[j])))
            throw InternalCheckError("DescentFailure",
                                     "coboundary cup cocycle escapes the coboundaries");
      table.products.push_back(std::move(entry));
    }
  // graded-Lie antisymmetry defects, reported rather than enforced
  auto find_entry = [&](std::size_t m, std::size_t n) -> const GradedProductEntry& {
    for (const auto& e : table.products)
      if (e.m == m && e.n == n) return e;
    throw PrecondError("ParameterRange", "missing table entry");
  };
  for (auto& entry : table.products) {
    const GradedProductEntry& flipped = find_entry(entry.n, entry.m);
    Rational koszul((entry.m * entry.n) % 2 == 0 ? 1 : -1);
    std::size_t dt = table.groups[entry.n].dim_top;
    std::size_t db = table.groups[entry.n].dim_bottom;
    std::size_t ft = table.groups[entry.m].dim_top;
    std::size_t fb = table.groups[entry.m].dim_bottom;
    for (std::size_t i = 0; i < ft; ++i)
      for (std::size_t j = 0; j < dt; ++j)
        for (std::size_t r = 0; r < entry.top.rows(); ++r)
          if (entry.top.at(r, i * dt + j) + koszul * flipped.top.at(r, j * ft + i) != 0)
            ++entry.top_defect_entries;
    for (std::size_t i = 0; i < fb; ++i)
      for (std::size_t j = 0; j < db; ++j)
        for (std::size_t r = 0; r < entry.bottom.rows(); ++r)
          if (entry.bottom.at(r, i * db + j) + koszul * flipped.bottom.at(r, j * fb + i) !=
              0)
            ++entry.bottom_defect_entries;
  }
  return table;
}

} // namespace greenlie
