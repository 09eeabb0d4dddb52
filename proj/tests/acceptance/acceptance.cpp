// End-to-end acceptance gate: one pass/fail line per criterion, nonzero exit when any
// fails. Runtime budgets are asserted where stated. Oracles here are deliberately
// independent straight-line reimplementations, not calls back into the engine.

#include "greenlie/extensions.hpp"
#include "greenlie/functor_examples.hpp"
#include "greenlie/serialization.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace greenlie;
using Clock = std::chrono::steady_clock;

namespace {

std::mt19937 rng(905177);

Rational rand_rat() {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  return Rational(num(rng), den(rng));
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %d. %s: %s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

struct Example {
  std::string name;
  GreenLieFunctor g;
};

std::vector<Example> example_roster() {
  std::vector<Example> out;
  out.push_back({"heisenberg(2,2)", heisenberg_example(2, 2)});
  out.push_back({"heisenberg(3,2)", heisenberg_example(3, 2)});
  out.push_back({"heisenberg(3,3)", heisenberg_example(3, 3)});
  out.push_back({"sl_transpose(2)", sl_transpose_example(2)});
  out.push_back({"sl_transpose(3)", sl_transpose_example(3)});
  GreenLieFunctor sl2 = sl_transpose_example(2);
  out.push_back({"fixed_point(sl2)", fixed_point_functor(sl2.bottom(), sl2.c(), 2)});
  GreenLieFunctor h22 = heisenberg_example(2, 2);
  out.push_back({"fixed_point(h5)", fixed_point_functor(h22.bottom(), h22.c(), 2)});
  out.push_back({"direct_sum(h3,2)", direct_sum_example(heisenberg_algebra(1), 2)});
  out.push_back({"direct_sum(h3,3)", direct_sum_example(heisenberg_algebra(1), 3)});
  out.push_back({"derivation(dual,2)", build_example("derivation_dual_numbers", {2})});
  return out;
}

/// p = 2 functor with the same algebra at both levels, r = id, t = 2 id, c = id.
GreenLieFunctor doubled_functor(const LieAlgebra& g) {
  CpMackey mk;
  mk.p = 2;
  mk.top_dim = g.dim();
  mk.bottom_dim = g.dim();
  mk.r = Matrix::identity(g.dim());
  mk.t = Matrix::identity(g.dim()).scaled(Rational(2));
  mk.c = Matrix::identity(g.dim());
  return GreenLieFunctor::make(mk, g, g);
}

GreenLieFunctor abelian_seed() {
  CpMackey mk;
  mk.p = 2;
  mk.top_dim = 0;
  mk.bottom_dim = 2;
  mk.r = Matrix(2, 0);
  mk.t = Matrix(0, 2);
  mk.c = Matrix::identity(2).scaled(Rational(-1));
  return GreenLieFunctor::make(mk, LieAlgebra::abelian(0), LieAlgebra::abelian(2));
}

Matrix basis_matrix(const Subspace& s) {
  return Matrix::from_columns(s.ambient_dim(), s.basis());
}

EquivCochain random_constrained(const GreenLieFunctor& L, const LieBimodule& M,
                                std::size_t n) {
  CochainSpace cs = cochain_space(L, M, n);
  Vec combo = zero_vec(cs.top_space.ambient_dim());
  for (const Vec& b : cs.top_space.basis()) axpy(combo, rand_rat(), b);
  return pair_to_cochain(L, M, n, combo);
}

EquivCochain random_cocycle(const GreenLieFunctor& L, const LieBimodule& M, std::size_t n) {
  CochainSpace cs = cochain_space(L, M, n);
  Matrix basis = basis_matrix(cs.top_space);
  Subspace closed = kernel_basis(pair_coboundary(L, M, n) * basis);
  Vec combo = zero_vec(cs.top_space.ambient_dim());
  for (const Vec& z : closed.basis()) axpy(combo, rand_rat(), basis.apply(z));
  return pair_to_cochain(L, M, n, combo);
}

EquivCochain random_coboundary(const GreenLieFunctor& L, const LieBimodule& M,
                               std::size_t n) {
  EquivCochain h = random_constrained(L, M, n - 1);
  return pair_to_cochain(L, M, n, pair_coboundary(L, M, n - 1).apply(h.to_pair()));
}

// ---------------------------------------------------------------------------
// independent naive oracle: CE differential with trivial coefficients assembled from
// first principles with its own tuple bookkeeping and its own elimination rank

std::vector<std::vector<std::size_t>> combinations(std::size_t d, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n > d) return out;
  std::vector<std::size_t> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    if (n == 0) break;
    std::size_t i = n;
    while (i-- > 0) {
      if (cur[i] + (n - i) < d) {
        ++cur[i];
        for (std::size_t k = i + 1; k < n; ++k) cur[k] = cur[k - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
  return out;
}

std::size_t tuple_position(const std::vector<std::vector<std::size_t>>& tuples,
                           const std::vector<std::size_t>& t) {
  for (std::size_t i = 0; i < tuples.size(); ++i)
    if (tuples[i] == t) return i;
  return tuples.size();
}

/// delta_n : C^n -> C^{n+1}, trivial coefficients of dimension one:
/// (delta f)(x_0..x_n) = sum_{i<j} (-1)^{i+j} f([x_i, x_j], x_0..^i..^j..x_n)
std::vector<std::vector<Rational>> naive_delta(const LieAlgebra& g, std::size_t n) {
  const std::size_t d = g.dim();
  auto rows_t = combinations(d, n + 1);
  auto cols_t = combinations(d, n);
  std::vector<std::vector<Rational>> m(rows_t.size(),
                                       std::vector<Rational>(cols_t.size()));
  for (std::size_t r = 0; r < rows_t.size(); ++r) {
    const auto& T = rows_t[r];
    for (std::size_t i = 0; i + 1 < T.size(); ++i)
      for (std::size_t j = i + 1; j < T.size(); ++j) {
        Vec br = g.bracket_basis(T[i], T[j]);
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < T.size(); ++k)
          if (k != i && k != j) rest.push_back(T[k]);
        for (std::size_t a = 0; a < d; ++a) {
          if (br[a].is_zero()) continue;
          bool repeats = false;
          std::size_t pos = 0;
          for (std::size_t x : rest) {
            if (x == a) repeats = true;
            if (x < a) ++pos;
          }
          if (repeats) continue;
          std::vector<std::size_t> col = rest;
          col.insert(col.begin() + static_cast<std::ptrdiff_t>(pos), a);
          Rational sign = ((i + j) % 2 ? -1 : 1) * (pos % 2 ? -1 : 1);
          m[r][tuple_position(cols_t, col)] += sign * br[a];
        }
      }
  }
  return m;
}

std::size_t elimination_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Rational factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::size_t naive_binomial(std::size_t d, std::size_t n) {
  if (n > d) return 0;
  std::size_t out = 1;
  for (std::size_t i = 0; i < n; ++i) out = out * (d - i) / (i + 1);
  return out;
}

// ---------------------------------------------------------------------------
// beta verification for criterion 7(b)

Matrix degree_one_matrix(const AltMap& h) {
  Matrix out(h.module_dim, h.source_dim);
  for (std::size_t j = 0; j < h.source_dim; ++j)
    for (std::size_t k = 0; k < h.module_dim; ++k) out.at(k, j) = h.coeff[j * h.module_dim + k];
  return out;
}

Matrix beta_level(std::size_t dm, const Matrix& h) {
  return Matrix::identity(dm).stack_right(h).stack_below(
      Matrix::zero(h.cols(), dm).stack_right(Matrix::identity(h.cols())));
}

bool beta_connects(const GreenLieFunctor& L, const LieBimodule& M, const EquivCochain& f,
                   const EquivCochain& g, const EquivCochain& h) {
  Extension Ef = build_extension(L, M, f), Eg = build_extension(L, M, g);
  Matrix beta_top = beta_level(M.top_dim(), degree_one_matrix(h.top));
  Matrix beta_bottom = beta_level(M.bottom_dim(), degree_one_matrix(h.bottom));
  bool ok = check_hom(Ef.B.top(), Eg.B.top(), beta_top).ok() &&
            check_hom(Ef.B.bottom(), Eg.B.bottom(), beta_bottom).ok();
  ok = ok && beta_top * Ef.i.top == Eg.i.top && beta_bottom * Ef.i.bottom == Eg.i.bottom;
  ok = ok && Eg.j.top * beta_top == Ef.j.top && Eg.j.bottom * beta_bottom == Ef.j.bottom;
  ok = ok && Eg.B.r() * beta_top == beta_bottom * Ef.B.r();
  ok = ok && Eg.B.t() * beta_bottom == beta_top * Ef.B.t();
  ok = ok && Eg.B.c() * beta_bottom == beta_bottom * Ef.B.c();
  return ok;
}

bool action_identity_holds(const Extension& E) {
  if (!E.s) return false;
  for (std::size_t x = 0; x < E.L.top_dim(); ++x)
    for (std::size_t u = 0; u < E.M.top_dim(); ++u)
      if (E.B.top().bracket(E.s->top.column(x), E.i.top.column(u)) !=
          E.i.top.apply(E.M.action_top.act(x).column(u)))
        return false;
  for (std::size_t x = 0; x < E.L.bottom_dim(); ++x)
    for (std::size_t u = 0; u < E.M.bottom_dim(); ++u)
      if (E.B.bottom().bracket(E.s->bottom.column(x), E.i.bottom.column(u)) !=
          E.i.bottom.apply(E.M.action_bottom.act(x).column(u)))
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// CLI runner for the determinism criterion

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(GREENLIE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

// ---------------------------------------------------------------------------

void criterion_1_2(const std::vector<Example>& examples) {
  bool ok = true;
  double worst = 0;
  std::string offender;
  for (const Example& ex : examples) {
    auto start = Clock::now();
    ValidationReport report = validate_green_lie(ex.g);
    double ms = elapsed_ms(start);
    if (!report.ok() || ms >= 1000.0) {
      ok = false;
      offender = ex.name + (report.ok() ? " too slow" : " has findings");
    }
    if (ms > worst) worst = ms;
  }
  report(1, "example validity",
         ok, ok ? std::to_string(examples.size()) + " constructors, worst " +
                      std::to_string(worst) + " ms (< 1000 per example)"
                : offender);

  bool mackey_ok = true;
  std::string detail = "r t = sum c^i, c^p = id, c r = r, t c = t on every example";
  for (const Example& ex : examples) {
    const GreenLieFunctor& g = ex.g;
    Matrix norm(g.bottom_dim(), g.bottom_dim());
    Matrix power = Matrix::identity(g.bottom_dim());
    for (std::size_t i = 0; i < g.p(); ++i) {
      norm = norm + power;
      power = g.c() * power;
    }
    bool here = g.r() * g.t() == norm && power == Matrix::identity(g.bottom_dim()) &&
                g.c() * g.r() == g.r() && g.t() * g.c() == g.t();
    if (!here) {
      mackey_ok = false;
      detail = ex.name + " violates a double-coset identity";
    }
  }
  report(2, "Mackey axiom specialization", mackey_ok, detail);
}

using SparseCol = std::vector<std::pair<std::size_t, Rational>>;

/// Columns of the degree-n differential, one sparse column per basis cochain.
std::vector<SparseCol> differential_columns(const Representation& rho, std::size_t n) {
  const std::size_t count = binomial(rho.algebra.dim(), n) * rho.module_dim;
  std::vector<SparseCol> cols(count);
  for (std::size_t k = 0; k < count; ++k) {
    AltMap e = AltMap::zero(n, rho.algebra.dim(), rho.module_dim);
    e.coeff[k] = 1;
    AltMap image = ce_apply(rho, e);
    for (std::size_t r = 0; r < image.coeff.size(); ++r)
      if (!image.coeff[r].is_zero()) cols[k].emplace_back(r, image.coeff[r]);
  }
  return cols;
}

void criterion_3_4(const std::vector<Example>& examples) {
  auto start = Clock::now();
  bool chain_ok = true;
  std::size_t checked = 0;
  for (const Example& ex : examples) {
    for (const LieBimodule& M : {trivial_bimodule(ex.g, 1), adjoint_bimodule(ex.g)}) {
      for (const Representation* rho : {&M.action_top, &M.action_bottom}) {
        const std::size_t d = rho->algebra.dim();
        std::vector<SparseCol> next = differential_columns(*rho, 0);
        for (std::size_t n = 0; n <= 3; ++n) {
          std::vector<SparseCol> cur = std::move(next);
          next = differential_columns(*rho, n + 1);
          Vec acc = zero_vec(binomial(d, n + 2) * rho->module_dim);
          for (const SparseCol& col : cur) {
            for (Rational& entry : acc) entry = 0;
            for (const auto& [r, v] : col)
              for (const auto& [r2, v2] : next[r]) acc[r2] += v * v2;
            if (!is_zero(acc)) chain_ok = false;
            ++checked;
          }
        }
      }
    }
  }
  double chain_ms = elapsed_ms(start);
  bool in_budget = chain_ms < 10000.0;
  report(3, "differentials square to zero", chain_ok && in_budget,
         std::to_string(checked) + " basis cochains at both levels, degrees 0..3, " +
             std::to_string(chain_ms) + " ms (< 10000)");

  bool preserved = true;
  std::string detail = "constrained image stays constrained, degrees 0..3";
  for (const Example& ex : examples) {
    for (const LieBimodule& M : {trivial_bimodule(ex.g, 1), adjoint_bimodule(ex.g)}) {
      for (std::size_t n = 0; n <= 3 && preserved; ++n) {
        CochainSpace cs = cochain_space(ex.g, M, n);
        Matrix delta = pair_coboundary(ex.g, M, n);
        std::vector<Matrix> families;
        for (ConstraintFamily fam :
             {ConstraintFamily::conjugation, ConstraintFamily::restriction,
              ConstraintFamily::transfer_first, ConstraintFamily::transfer_last})
          families.push_back(constraint_family_matrix(ex.g, M, n + 1, fam));
        for (const Vec& v : cs.top_space.basis()) {
          Vec w = delta.apply(v);
          for (const Matrix& F : families)
            if (!is_zero(F.apply(w))) {
              preserved = false;
              detail = ex.name + " leaks the constraints at degree " + std::to_string(n);
            }
        }
      }
    }
  }
  report(4, "constraint preservation", preserved, detail);
}

void criterion_5() {
  bool ok = true;
  std::string detail;

  // abelian bottom levels: H^n = m * C(d, n) exactly
  for (std::size_t d = 1; d <= 4 && ok; ++d)
    for (std::size_t m = 1; m <= 2 && ok; ++m) {
      GreenLieFunctor L = doubled_functor(LieAlgebra::abelian(d));
      LieBimodule M = trivial_bimodule(L, m);
      for (std::size_t n = 0; n <= d + 1 && ok; ++n) {
        std::size_t expected = m * naive_binomial(d, n);
        std::size_t got = cohomology(L, M, n).dim_bottom;
        if (got != expected) {
          ok = false;
          detail = "abelian d=" + std::to_string(d) + " m=" + std::to_string(m) +
                   " n=" + std::to_string(n) + ": engine " + std::to_string(got) +
                   " vs formula " + std::to_string(expected);
        }
      }
    }

  // Heisenberg h3 with the independent straight-line oracle
  LieAlgebra h3 = heisenberg_algebra(1);
  GreenLieFunctor L3 = doubled_functor(h3);
  LieBimodule M3 = trivial_bimodule(L3, 1);
  const std::size_t frozen[] = {0, 2, 2, 1}; // H^1..H^3 regression alongside the oracle
  for (std::size_t n = 1; n <= 3 && ok; ++n) {
    std::size_t cn = naive_binomial(3, n);
    std::size_t closed = cn - elimination_rank(naive_delta(h3, n));
    std::size_t exact = elimination_rank(naive_delta(h3, n - 1));
    std::size_t oracle = closed - exact;
    std::size_t got = cohomology(L3, M3, n).dim_bottom;
    if (got != oracle || got != frozen[n]) {
      ok = false;
      detail = "h3 H^" + std::to_string(n) + ": engine " + std::to_string(got) +
               " vs oracle " + std::to_string(oracle);
    }
  }
  if (ok)
    detail = "abelian d<=4, m<=2 formula and h3 straight-line oracle (2, 2, 1) agree";
  report(5, "classical cohomology oracle", ok, detail);
}

void criterion_6() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;
  std::size_t leibniz_checked = 0, membership_checked = 0, pairing_checked = 0;

  std::vector<std::pair<GreenLieFunctor, std::string>> hosts;
  hosts.push_back({heisenberg_example(2, 2), "heisenberg(2,2)"});
  hosts.push_back({sl_transpose_example(2), "sl_transpose(2)"});

  for (const auto& [L, name] : hosts) {
    LieBimodule M = adjoint_bimodule(L);

    // exhaustive constrained basis pairs with m + n <= 2
    for (std::size_t m = 0; m <= 2 && ok; ++m)
      for (std::size_t n = 0; m + n <= 2 && ok; ++n) {
        CochainSpace cm = cochain_space(L, M, m), cn = cochain_space(L, M, n);
        for (const Vec& vf : cm.top_space.basis())
          for (const Vec& vg : cn.top_space.basis()) {
            EquivCochain f = pair_to_cochain(L, M, m, vf);
            EquivCochain g = pair_to_cochain(L, M, n, vg);
            if (!check_leibniz(L, M, f, g).ok() || !check_pairing_axioms(L, M, f, g).ok()) {
              ok = false;
              detail = name + " basis pair at degrees (" + std::to_string(m) + "," +
                       std::to_string(n) + ")";
            }
            ++leibniz_checked;
            ++pairing_checked;
          }
      }

    // 50 random pairs per host with m + n <= 3
    const std::size_t degree_pairs[][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1},
                                           {0, 3}, {3, 0}, {2, 0}, {0, 2}, {1, 0}};
    for (std::size_t t = 0; t < 50 && ok; ++t) {
      const auto& dp = degree_pairs[t % 10];
      EquivCochain f = random_constrained(L, M, dp[0]);
      EquivCochain g = random_constrained(L, M, dp[1]);
      if (!check_leibniz(L, M, f, g).ok() || !check_pairing_axioms(L, M, f, g).ok()) {
        ok = false;
        detail = name + " random pair at degrees (" + std::to_string(dp[0]) + "," +
                 std::to_string(dp[1]) + ")";
      }
      ++leibniz_checked;
      ++pairing_checked;
    }

    // graded membership: Z cup Z in Z, B cup Z and Z cup B in B
    for (std::size_t m = 1; m <= 2 && ok; ++m)
      for (std::size_t n = 1; m + n <= 3 && ok; ++n)
        for (std::size_t t = 0; t < 3 && ok; ++t) {
          EquivCochain zf = random_cocycle(L, M, m), zg = random_cocycle(L, M, n);
          EquivCochain bf = random_coboundary(L, M, m);
          if (!is_cocycle(L, M, m + n, Level::top, cup(L, M, zf, zg).to_pair())) {
            ok = false;
            detail = name + ": Z cup Z left Z";
          }
          if (!is_coboundary(L, M, m + n, Level::top, cup(L, M, bf, zg).to_pair()) ||
              !is_coboundary(L, M, m + n, Level::top, cup(L, M, zg, bf).to_pair())) {
            ok = false;
            detail = name + ": B cup Z or Z cup B left B";
          }
          membership_checked += 3;
        }
  }

  double ms = elapsed_ms(start);
  bool in_budget = ms < 60000.0;
  if (ok && in_budget)
    detail = std::to_string(leibniz_checked) + " Leibniz, " +
             std::to_string(pairing_checked) + " pairing, " +
             std::to_string(membership_checked) + " membership checks, " +
             std::to_string(ms) + " ms (< 60000)";
  report(6, "cup product suite", ok && in_budget, detail);
}

void criterion_7_8() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;
  std::vector<Extension> constructed;

  GreenLieFunctor heis = heisenberg_example(2, 2);
  GreenLieFunctor sl2 = sl_transpose_example(2);
  GreenLieFunctor seed = abelian_seed();
  struct Combo {
    GreenLieFunctor L;
    LieBimodule M;
  };
  std::vector<Combo> combos;
  combos.push_back({heis, trivial_bimodule(heis, 1)});
  combos.push_back({heis, adjoint_bimodule(heis)});
  combos.push_back({sl2, adjoint_bimodule(sl2)});
  combos.push_back({seed, trivial_bimodule(seed, 2)});

  // (a) 100 random cocycle round trips
  std::size_t round_trips = 0;
  for (const Combo& combo : combos)
    for (std::size_t t = 0; t < 25 && ok; ++t) {
      EquivCochain f = random_cocycle(combo.L, combo.M, 2);
      Extension E = build_extension(combo.L, combo.M, f);
      if (extract_cocycle(E).to_pair() != f.to_pair()) {
        ok = false;
        detail = "round trip broke";
      }
      constructed.push_back(std::move(E));
      ++round_trips;
    }

  // (b) three-way agreement on representative rosters
  std::size_t agreements = 0;
  for (const Combo& combo : {combos[0], combos[3]}) {
    CohomologyResult h2 = cohomology(combo.L, combo.M, 2);
    std::vector<EquivCochain> roster;
    for (const Vec& v : h2.representatives_top)
      roster.push_back(pair_to_cochain(combo.L, combo.M, 2, v));
    roster.push_back(EquivCochain{2, AltMap::zero(2, combo.L.top_dim(), combo.M.top_dim()),
                                  AltMap::zero(2, combo.L.bottom_dim(),
                                               combo.M.bottom_dim())});
    roster.push_back(random_coboundary(combo.L, combo.M, 2));
    if (!roster.empty()) {
      Vec shifted = roster.front().to_pair();
      add_in_place(shifted, random_coboundary(combo.L, combo.M, 2).to_pair());
      roster.push_back(pair_to_cochain(combo.L, combo.M, 2, shifted));
    }
    for (const EquivCochain& f : roster)
      for (const EquivCochain& g : roster) {
        Vec diff = f.to_pair();
        sub_in_place(diff, g.to_pair());
        bool member = is_coboundary(combo.L, combo.M, 2, Level::top, diff);
        auto h = find_equivalence(combo.L, combo.M, f, g);
        bool witness = h.has_value();
        bool beta_ok = !witness || beta_connects(combo.L, combo.M, f, g, *h);
        if (witness != member || !beta_ok) {
          ok = false;
          detail = "equivalence three-way agreement broke";
        }
        ++agreements;
      }
  }

  // (c) 20 random non-cocycles each reject with a concrete violation
  std::size_t rejections = 0;
  {
    const Combo& combo = combos[0];
    CochainSpace cs = cochain_space(combo.L, combo.M, 2);
    while (rejections < 20 && ok) {
      Vec v = zero_vec(cs.top_space.ambient_dim());
      for (const Vec& b : cs.top_space.basis()) axpy(v, rand_rat(), b);
      if (is_cocycle(combo.L, combo.M, 2, Level::top, v)) continue;
      try {
        build_extension(combo.L, combo.M, pair_to_cochain(combo.L, combo.M, 2, v));
        ok = false;
        detail = "a non-cocycle was accepted";
      } catch (const PrecondError& e) {
        std::string what = e.what();
        if (e.code() != "NotACocycle" ||
            what.find("the unchecked total space violates") == std::string::npos) {
          ok = false;
          detail = "rejection lacked a concrete axiom violation: " + what;
        }
      }
      ++rejections;
    }
  }

  double ms = elapsed_ms(start);
  bool in_budget = ms < 120000.0;
  if (ok && in_budget)
    detail = std::to_string(round_trips) + " round trips, " + std::to_string(agreements) +
             " equivalence agreements, " + std::to_string(rejections) +
             " concrete rejections, " + std::to_string(ms) + " ms (< 120000)";
  report(7, "extension theorem at desk scale", ok && in_budget, detail);

  bool action_ok = true;
  for (const Extension& E : constructed)
    if (!action_identity_holds(E)) action_ok = false;
  for (const Combo& combo : {combos[0], combos[3]})
    for (const Extension& E : classify_extensions(combo.L, combo.M).extensions)
      if (!action_identity_holds(E)) action_ok = false;
  report(8, "sections bracket onto the module action", action_ok,
         "i(x.u) = [s(x), i(u)] on all basis pairs of " +
             std::to_string(constructed.size()) + "+ extensions");
}

void criterion_9() {
  std::string data = GREENLIE_TEST_DATA_DIR;
  bool ok = true;
  std::string detail = "byte-identical reruns";
  for (const std::string& job :
       {"cohomology " + data + "/heisenberg_2_2.json --module trivial:1 --max-degree 2",
        "classify " + data + "/heisenberg_2_2.json --module trivial:1",
        "cup " + data + "/sl_transpose_2.json --module adjoint --max-degree 2",
        "validate " + data + "/derivation_dual_numbers_2.json"}) {
    RunResult a = run_cli(job), b = run_cli(job);
    if (a.status != 0 || b.status != 0 || a.out != b.out || a.out.empty()) {
      ok = false;
      detail = "output diverged for: " + job;
    }
  }
  report(9, "deterministic command line reports", ok, detail);
}

} // namespace

int main() {
  auto start = Clock::now();
  std::vector<Example> examples = example_roster();
  try {
    criterion_1_2(examples);
    criterion_3_4(examples);
    criterion_5();
    criterion_6();
    criterion_7_8();
    criterion_9();
  } catch (const std::exception& e) {
    std::printf("[FAIL] unexpected exception: %s\n", e.what());
    ++failures;
  }
  std::printf("acceptance %s in %.0f ms\n", failures ? "FAILED" : "passed",
              elapsed_ms(start));
  return failures ? 1 : 0;
}
