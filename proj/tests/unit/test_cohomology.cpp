#include "doctest.h"

#include "greenlie/cohomology.hpp"
#include "greenlie/functor_examples.hpp"

#include <random>

using namespace greenlie;

namespace {

std::mt19937 rng(273551);

Rational rand_rat() {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  return Rational(num(rng), den(rng));
}

Vec rand_vec(std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = rand_rat();
  return v;
}

Matrix rand_matrix(std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rand_rat();
  return m;
}

/// h3 with the automorphism x <-> y, z -> -z.
GreenLieFunctor h3_swap_functor() {
  Matrix a(3, 3);
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  a.at(2, 2) = -1;
  return fixed_point_functor(heisenberg_algebra(1), a, 2);
}

GreenLieFunctor zero_functor() {
  CpMackey m;
  m.p = 2;
  m.top_dim = 0;
  m.bottom_dim = 0;
  m.r = Matrix(0, 0);
  m.t = Matrix(0, 0);
  m.c = Matrix(0, 0);
  return GreenLieFunctor::make(m, LieAlgebra::abelian(0), LieAlgebra::abelian(0));
}

/// Columns of a as Vec values, for AltMap::eval.
std::vector<Vec> columns_of(const Matrix& a, const std::vector<std::size_t>& idx) {
  std::vector<Vec> out;
  for (std::size_t j : idx) out.push_back(a.column(j));
  return out;
}

} // namespace

TEST_CASE("pair layout block arithmetic") {
  auto L = heisenberg_example(2, 2);
  auto M = adjoint_bimodule(L);
  for (std::size_t n = 0; n <= 4; ++n) {
    PairLayout layout = pair_layout(L, M, n);
    CHECK(layout.top_tuples == binomial(3, n));
    CHECK(layout.bottom_tuples == binomial(5, n));
    CHECK(layout.top_block == layout.top_tuples * 3);
    CHECK(layout.bottom_block == layout.bottom_tuples * 5);
    CHECK(layout.total() == layout.top_block + layout.bottom_block);
  }
}

TEST_CASE("pair_to_cochain splits and to_pair rebuilds") {
  auto L = heisenberg_example(2, 2);
  auto M = adjoint_bimodule(L);
  PairLayout layout = pair_layout(L, M, 2);
  Vec pair = rand_vec(layout.total());
  EquivCochain f = pair_to_cochain(L, M, 2, pair);
  CHECK(f.top.source_dim == 3);
  CHECK(f.top.module_dim == 3);
  CHECK(f.bottom.source_dim == 5);
  CHECK(f.bottom.module_dim == 5);
  CHECK(f.to_pair() == pair);
  CHECK_THROWS_AS((void)pair_to_cochain(L, M, 1, pair), PrecondError);
}

TEST_CASE("slotwise_conjugate matches direct evaluation") {
  // F = module_map o f o (A slots), checked on all basis tuples of the new source.
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2;
    Matrix a = rand_matrix(3, 2);      // slots: Q^2 -> Q^3
    Matrix mm = rand_matrix(2, 2);     // module: Q^2 -> Q^2
    Matrix op = slotwise_conjugate(a, n, mm);
    AltMap f = AltMap::zero(n, 3, 2);
    f.coeff = rand_vec(f.coeff.size());
    Vec image = op.apply(f.coeff);
    AltMap g = AltMap::zero(n, 2, 2);
    g.coeff = image;
    TupleTable tuples(2, n);
    for (std::size_t v = 0; v < tuples.size(); ++v) {
      std::vector<Vec> args = columns_of(a, tuples[v]);
      CHECK(g.eval_basis(tuples[v]) == mm.apply(f.eval(args)));
    }
  }
  // degree 0 reduces to the module map, degree 1 to transposed-index kron
  Matrix a = rand_matrix(3, 2), mm = rand_matrix(2, 2);
  CHECK(slotwise_conjugate(a, 0, mm) == mm);
  Matrix deg1 = slotwise_conjugate(a, 1, mm);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
          CHECK(deg1.at(j * 2 + x, i * 2 + y) == a.at(i, j) * mm.at(x, y));
}

TEST_CASE("degree-1 constraint matrix against a hand-assembled oracle") {
  // Degree-1 pairs are matrices F: L(C_p) -> M(C_p), G: L(e) -> M(e) with
  //   c_M G = G c_L,   r_M F = G r_L,   F t_L = t_M G,
  // assembled here with plain loops, no tuple machinery.
  auto L = sl_transpose_example(2);
  auto M = adjoint_bimodule(L);
  const std::size_t dt = L.top_dim(), de = L.bottom_dim();
  const std::size_t mt = M.top_dim(), me = M.bottom_dim();
  const std::size_t ambient = dt * mt + de * me;
  auto fcol = [&](std::size_t j, std::size_t a) { return j * mt + a; };
  auto gcol = [&](std::size_t j, std::size_t a) { return dt * mt + j * me + a; };
  std::vector<Vec> rows;
  const Matrix &cL = L.c(), &rL = L.r(), &tL = L.t();
  const Matrix &cM = M.underlying.c, &rM = M.underlying.r, &tM = M.underlying.t;
  for (std::size_t j = 0; j < de; ++j) // (c_M G - G c_L) e_j = 0
    for (std::size_t a = 0; a < me; ++a) {
      Vec row(ambient);
      for (std::size_t b = 0; b < me; ++b) row[gcol(j, b)] += cM.at(a, b);
      for (std::size_t k = 0; k < de; ++k) row[gcol(k, a)] -= cL.at(k, j);
      rows.push_back(row);
    }
  for (std::size_t j = 0; j < dt; ++j) // (r_M F - G r_L) e_j = 0
    for (std::size_t a = 0; a < me; ++a) {
      Vec row(ambient);
      for (std::size_t b = 0; b < mt; ++b) row[fcol(j, b)] += rM.at(a, b);
      for (std::size_t k = 0; k < de; ++k) row[gcol(k, a)] -= rL.at(k, j);
      rows.push_back(row);
    }
  for (std::size_t j = 0; j < de; ++j) // (F t_L - t_M G) e_j = 0
    for (std::size_t a = 0; a < mt; ++a) {
      Vec row(ambient);
      for (std::size_t k = 0; k < dt; ++k) row[fcol(k, a)] += tL.at(k, j);
      for (std::size_t b = 0; b < me; ++b) row[gcol(j, b)] -= tM.at(a, b);
      rows.push_back(row);
    }
  Subspace oracle = kernel_basis(Matrix::from_rows(ambient, rows));
  CochainSpace cs = cochain_space(L, M, 1);
  CHECK(cs.top_space == oracle);
  CHECK(cs.top_space.dim() == 5); // frozen
  CHECK(cs.bottom_dim == de * me);
}

TEST_CASE("degree-0 constrained pairs are the graph of r_M") {
  for (auto [L, M] : {std::pair{heisenberg_example(2, 2), adjoint_bimodule(heisenberg_example(2, 2))},
                      std::pair{sl_transpose_example(2), trivial_bimodule(sl_transpose_example(2), 2)},
                      std::pair{h3_swap_functor(), adjoint_bimodule(h3_swap_functor())}}) {
    CochainSpace cs = cochain_space(L, M, 0);
    CHECK(cs.top_space.dim() == M.top_dim());
    for (const Vec& v : cs.top_space.basis()) {
      Vec u(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(M.top_dim()));
      Vec w(v.begin() + static_cast<std::ptrdiff_t>(M.top_dim()), v.end());
      CHECK(M.underlying.r.apply(u) == w);
    }
  }
}

TEST_CASE("bottom cohomology of h3 with trivial coefficients") {
  auto L = h3_swap_functor();
  auto M = trivial_bimodule(L, 1);
  std::vector<std::size_t> expected = {1, 2, 2, 1}; // frozen hand computation
  for (std::size_t n = 0; n <= 3; ++n) {
    CohomologyResult h = cohomology(L, M, n);
    CHECK(h.dim_bottom == expected[n]);
    CHECK(h.representatives_bottom.size() == h.dim_bottom);
    CHECK(h.representatives_top.size() == h.dim_top);
  }
  CHECK(cohomology(L, M, 4).dim_bottom == 0);
}

TEST_CASE("abelian functor: zero differentials make cohomology the cochain space") {
  auto L = direct_sum_example(LieAlgebra::abelian(2), 2);
  auto M = trivial_bimodule(L, 2);
  for (std::size_t n = 0; n <= 3; ++n) {
    CohomologyResult h = cohomology(L, M, n);
    CHECK(h.dim_bottom == 2 * binomial(4, n));
    CHECK(h.dim_top == cochain_space(L, M, n).top_space.dim());
  }
}

TEST_CASE("pair coboundary squares to zero and preserves the constraints") {
  std::vector<std::pair<GreenLieFunctor, LieBimodule>> roster;
  {
    auto L = heisenberg_example(2, 2);
    roster.emplace_back(L, adjoint_bimodule(L));
    roster.emplace_back(L, trivial_bimodule(L, 1));
  }
  {
    auto L = sl_transpose_example(2);
    roster.emplace_back(L, adjoint_bimodule(L));
  }
  {
    auto L = direct_sum_example(heisenberg_algebra(1), 3);
    roster.emplace_back(L, trivial_bimodule(L, 1));
  }
  for (const auto& [L, M] : roster)
    for (std::size_t n = 0; n <= 3; ++n) {
      CHECK((pair_coboundary(L, M, n + 1) * pair_coboundary(L, M, n)).is_zero());
      CochainSpace cs = cochain_space(L, M, n);
      CochainSpace next = cochain_space(L, M, n + 1);
      Matrix b = pair_coboundary(L, M, n);
      for (const Vec& v : cs.top_space.basis()) CHECK(next.top_space.contains(b.apply(v)));
    }
}

TEST_CASE("cochain Mackey functor satisfies the Mackey axioms") {
  std::vector<std::pair<GreenLieFunctor, LieBimodule>> roster;
  {
    auto L = heisenberg_example(2, 2);
    roster.emplace_back(L, adjoint_bimodule(L));
  }
  {
    auto L = h3_swap_functor();
    roster.emplace_back(L, trivial_bimodule(L, 2));
  }
  {
    auto L = direct_sum_example(heisenberg_algebra(1), 3);
    roster.emplace_back(L, adjoint_bimodule(L));
  }
  for (const auto& [L, M] : roster)
    for (std::size_t n = 0; n <= 2; ++n) {
      CpMackey cm = cochain_mackey(L, M, n);
      CHECK(validate_mackey(cm).ok());
      // r o t on raw cochains is the full averaged conjugation sum
      Matrix rt = cochain_restriction_matrix(L, M, n) * cochain_transfer_matrix(L, M, n);
      Matrix conj = cochain_conjugation(L, M, n);
      Matrix expect(rt.rows(), rt.cols());
      for (std::size_t k = 0; k < L.p(); ++k) expect = expect + conj.power(k);
      CHECK(rt == expect);
    }
}

TEST_CASE("trivial conjugation collapses the transfer to multiplication by p") {
  auto L = derivation_example(dual_numbers(), Matrix::identity(2), 2);
  auto M = trivial_bimodule(L, 2);
  for (std::size_t n = 0; n <= 1; ++n) {
    PairLayout layout = pair_layout(L, M, n);
    Matrix t = cochain_transfer_matrix(L, M, n);
    for (std::size_t i = 0; i < layout.bottom_block; ++i)
      for (std::size_t j = 0; j < layout.bottom_block; ++j)
        CHECK(t.at(layout.top_block + i, j) == (i == j ? Rational(2) : Rational(0)));
  }
}

TEST_CASE("cochain transfer matches pointwise evaluation of its formula") {
  auto L = heisenberg_example(2, 2);
  auto M = adjoint_bimodule(L);
  const Matrix &cL = L.c(), &rL = L.r();
  const Matrix &cM = M.underlying.c, &tM = M.underlying.t;
  for (int trial = 0; trial < 5; ++trial) {
    AltMap gamma = AltMap::zero(2, 5, 5);
    gamma.coeff = rand_vec(gamma.coeff.size());
    EquivCochain out = cochain_transfer(L, M, gamma);
    // top: t_M(gamma(r a_1, r a_2)) on all increasing top basis pairs
    TupleTable tt(3, 2);
    for (std::size_t v = 0; v < tt.size(); ++v) {
      std::vector<Vec> args = columns_of(rL, tt[v]);
      CHECK(out.top.eval_basis(tt[v]) == tM.apply(gamma.eval(args)));
    }
    // bottom: sum_k c_M^k gamma(c_L^{p-k} u, c_L^{p-k} v) on random vectors
    Vec u = rand_vec(5), w = rand_vec(5);
    Vec expect(5);
    for (std::size_t k = 0; k < 2; ++k) {
      Matrix a = cL.power(2 - k);
      std::vector<Vec> args = {a.apply(u), a.apply(w)};
      add_in_place(expect, cM.power(k).apply(gamma.eval(args)));
    }
    std::vector<Vec> uw = {u, w};
    CHECK(out.bottom.eval(uw) == expect);
    CHECK(cochain_restriction(out).coeff == out.bottom.coeff);
  }
  AltMap bad = AltMap::zero(1, 2, 5);
  CHECK_THROWS_AS((void)cochain_transfer(L, M, bad), PrecondError);
}

TEST_CASE("induced Mackey structure on cohomology") {
  std::vector<std::pair<GreenLieFunctor, LieBimodule>> roster;
  {
    auto L = heisenberg_example(2, 2);
    roster.emplace_back(L, trivial_bimodule(L, 1));
    roster.emplace_back(L, adjoint_bimodule(L));
  }
  {
    auto L = h3_swap_functor();
    roster.emplace_back(L, trivial_bimodule(L, 1));
  }
  for (const auto& [L, M] : roster)
    for (std::size_t n = 0; n <= 2; ++n) {
      CohomologyResult h = cohomology(L, M, n);
      CpMackey induced;
      induced.p = L.p();
      induced.top_dim = h.dim_top;
      induced.bottom_dim = h.dim_bottom;
      induced.r = h.induced_r;
      induced.t = h.induced_t;
      induced.c = h.induced_c;
      CHECK(validate_mackey(induced).ok());
    }
}

TEST_CASE("degree-0 cohomology of the trivial module counts invariants") {
  // bottom: H^0 = M(e)^{L(e)} = all of M(e) for the trivial action;
  // top: constrained 0-cocycles modulo nothing.
  auto L = heisenberg_example(2, 2);
  auto M = trivial_bimodule(L, 3);
  CohomologyResult h = cohomology(L, M, 0);
  CHECK(h.dim_bottom == 3);
  CHECK(h.dim_top == 3);
  // r on H^0 followed by t recovers the double coset sum on classes
  Matrix rt = h.induced_r * h.induced_t;
  Matrix expect(h.dim_bottom, h.dim_bottom);
  for (std::size_t k = 0; k < L.p(); ++k) expect = expect + h.induced_c.power(k);
  CHECK(rt == expect);
}

TEST_CASE("zero algebra functor concentrates cohomology in degree zero") {
  auto L = zero_functor();
  auto M = trivial_bimodule(L, 3);
  CohomologyResult h0 = cohomology(L, M, 0);
  CHECK(h0.dim_top == 3);
  CHECK(h0.dim_bottom == 3);
  for (std::size_t n = 1; n <= 2; ++n) {
    CohomologyResult h = cohomology(L, M, n);
    CHECK(h.dim_top == 0);
    CHECK(h.dim_bottom == 0);
  }
}

TEST_CASE("coboundary_matrix level views agree with the pair differential") {
  auto L = heisenberg_example(2, 2);
  auto M = adjoint_bimodule(L);
  for (std::size_t n = 1; n <= 2; ++n) {
    CHECK(coboundary_matrix(L, M, n, Level::top) == pair_coboundary(L, M, n));
    CHECK(coboundary_matrix(L, M, n, Level::bottom) == ce_coboundary(M.action_bottom, n));
  }
  // degree 0 top view takes m to the pair (a -> a.m, x -> x.r_M(m))
  Matrix b0 = coboundary_matrix(L, M, 0, Level::top);
  CHECK(b0.cols() == M.top_dim());
  Matrix pair0 = pair_coboundary(L, M, 0);
  for (std::size_t j = 0; j < M.top_dim(); ++j) {
    Vec u(M.top_dim());
    u[j] = 1;
    CHECK(b0.column(j) == pair0.apply(concat(u, M.underlying.r.apply(u))));
  }
}

TEST_CASE("cocycle and coboundary membership") {
  auto L = heisenberg_example(2, 2);
  auto M = adjoint_bimodule(L);
  CohomologyResult h1 = cohomology(L, M, 1);
  for (const Vec& v : h1.representatives_top) {
    CHECK(is_cocycle(L, M, 1, Level::top, v));
    CHECK_FALSE(is_coboundary(L, M, 1, Level::top, v));
  }
  for (const Vec& v : h1.representatives_bottom) {
    CHECK(is_cocycle(L, M, 1, Level::bottom, v));
    CHECK_FALSE(is_coboundary(L, M, 1, Level::bottom, v));
  }
  // images of the differential are cocycles and coboundaries at both levels
  CochainSpace cs0 = cochain_space(L, M, 0);
  Vec mix(cs0.top_space.ambient_dim());
  for (const Vec& b : cs0.top_space.basis()) axpy(mix, rand_rat(), b);
  Vec img = pair_coboundary(L, M, 0).apply(mix);
  CHECK(is_cocycle(L, M, 1, Level::top, img));
  CHECK(is_coboundary(L, M, 1, Level::top, img));
  Vec low = rand_vec(binomial(5, 1) * 5);
  Vec img_b = ce_coboundary(M.action_bottom, 1).apply(low);
  CHECK(is_cocycle(L, M, 2, Level::bottom, img_b));
  CHECK(is_coboundary(L, M, 2, Level::bottom, img_b));
  // an unconstrained pair vector is rejected as a top cocycle even if closed
  Vec skew(pair_layout(L, M, 0).total());
  skew[0] = 1; // (e_0^*, 0) is not on the graph of r_M
  if (is_zero(pair_coboundary(L, M, 0).apply(skew)))
    CHECK_FALSE(is_cocycle(L, M, 0, Level::top, skew));
}

TEST_CASE("degree-0 membership conventions") {
  auto L = h3_swap_functor();
  auto M = trivial_bimodule(L, 1);
  CochainSpace cs0 = cochain_space(L, M, 0);
  const Vec& v = cs0.top_space.basis().front();
  CHECK(is_cocycle(L, M, 0, Level::top, v));
  CHECK_FALSE(is_coboundary(L, M, 0, Level::top, v));
  CHECK(is_coboundary(L, M, 0, Level::top, Vec(pair_layout(L, M, 0).total())));
}
