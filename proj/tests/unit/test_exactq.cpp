#include "doctest.h"

#include "greenlie/exactq.hpp"
#include "greenlie/validation.hpp"

#include <random>

using namespace greenlie;

namespace {

std::mt19937_64 rng(20260819);

Rational random_rational(int num_range = 9, int den_range = 3) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Rational(num(rng), den(rng));
}

Matrix random_matrix(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_rational();
  return m;
}

} // namespace

TEST_CASE("rational literals parse and render in canonical form") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-2/-4")) == "1/2");
  CHECK(to_string(parse_rational("2/-4")) == "-1/2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(to_string(parse_rational("-0")) == "0");
  CHECK(to_string(parse_rational("12")) == "12");
  CHECK(to_string(parse_rational("+5/10")) == "1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("-1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("/2"), ParseError);
}

TEST_CASE("rational arithmetic round trips exactly") {
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = random_rational(50, 20);
    Rational b = random_rational(50, 20);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(parse_rational(to_string(a)) == a);
  }
}

TEST_CASE("rref is deterministic, idempotent, and respects the pivot contract") {
  Matrix m(3, 4);
  // rows: (0 2 4 6), (1 1 1 1), (1 3 5 7)
  const int entries[3][4] = {{0, 2, 4, 6}, {1, 1, 1, 1}, {1, 3, 5, 7}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = entries[i][j];
  RrefResult r = rref(m);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  // leading entries are 1, pivot columns are elementary
  for (std::size_t k = 0; k < r.pivots.size(); ++k) {
    CHECK(r.mat.at(k, r.pivots[k]) == 1);
    for (std::size_t i = 0; i < r.mat.rows(); ++i)
      if (i != k) CHECK(r.mat.at(i, r.pivots[k]).is_zero());
  }
  RrefResult again = rref(r.mat);
  CHECK(again.mat == r.mat);

  for (int trial = 0; trial < 25; ++trial) {
    Matrix a = random_matrix(5, 7);
    RrefResult first = rref(a);
    CHECK(rref(first.mat).mat == first.mat);
    CHECK(rref(a).mat == first.mat);
  }
}

TEST_CASE("kernel basis satisfies rank-nullity and the spec example") {
  Matrix m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  Subspace ker = kernel_basis(m);
  REQUIRE(ker.dim() == 1);
  CHECK(ker.basis()[0] == Vec{Rational(1), Rational(-1)});

  for (int trial = 0; trial < 30; ++trial) {
    Matrix a = random_matrix(4, 6);
    Subspace k = kernel_basis(a);
    CHECK(k.dim() == 6 - rank(a));
    for (const auto& v : k.basis()) CHECK(is_zero(a.apply(v)));
  }
}

TEST_CASE("solve returns an exact particular solution with zero free coordinates") {
  for (int trial = 0; trial < 30; ++trial) {
    Matrix a = random_matrix(4, 6);
    Vec x(6);
    for (auto& e : x) e = random_rational();
    Vec b = a.apply(x);
    auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == b);
  }
  // inconsistent system
  Matrix a(2, 1);
  a.at(0, 0) = 1;
  a.at(1, 0) = 1;
  CHECK_FALSE(solve(a, Vec{Rational(1), Rational(2)}).has_value());
  // free columns get zero
  Matrix wide(1, 3);
  wide.at(0, 0) = 1;
  wide.at(0, 1) = 2;
  wide.at(0, 2) = 3;
  auto sol = solve(wide, Vec{Rational(5)});
  REQUIRE(sol.has_value());
  CHECK(*sol == Vec{Rational(5), Rational(0), Rational(0)});
}

TEST_CASE("subspaces are canonical: same span, same representation") {
  std::vector<Vec> gens1 = {{Rational(1), Rational(2), Rational(3)},
                            {Rational(0), Rational(1), Rational(1)}};
  std::vector<Vec> gens2 = {{Rational(2), Rational(5), Rational(7)},
                            {Rational(1), Rational(3), Rational(4)},
                            {Rational(3), Rational(8), Rational(11)}};
  CHECK(Subspace::span(3, gens1) == Subspace::span(3, gens2));
  Subspace s = Subspace::span(3, gens1);
  CHECK(s.dim() == 2);
  CHECK(s.contains(Vec{Rational(1), Rational(3), Rational(4)}));
  CHECK_FALSE(s.contains(Vec{Rational(0), Rational(0), Rational(1)}));
  auto coords = s.coordinates(Vec{Rational(1), Rational(3), Rational(4)});
  REQUIRE(coords.has_value());
  Vec rebuilt(3);
  for (std::size_t i = 0; i < s.dim(); ++i) axpy(rebuilt, (*coords)[i], s.basis()[i]);
  CHECK(rebuilt == Vec{Rational(1), Rational(3), Rational(4)});
}

TEST_CASE("quotient dimension and representatives") {
  Subspace big = Subspace::full(4);
  Subspace small = Subspace::span(4, {{Rational(1), Rational(1), Rational(0), Rational(0)}});
  QuotientResult q = quotient_dim(big, small);
  CHECK(q.dim == 3);
  CHECK(q.representatives.size() == 3);
  // representatives together with the denominator span everything
  std::vector<Vec> all = q.representatives;
  for (const auto& b : small.basis()) all.push_back(b);
  CHECK(Subspace::span(4, all).dim() == 4);

  Subspace not_inside = Subspace::span(4, {{Rational(0), Rational(0), Rational(0), Rational(1)}});
  Subspace plane = Subspace::span(4, {{Rational(1), Rational(0), Rational(0), Rational(0)},
                                      {Rational(0), Rational(1), Rational(0), Rational(0)}});
  CHECK_THROWS_AS(quotient_dim(plane, not_inside), PrecondError);
  // zero quotient
  QuotientResult zero = quotient_dim(plane, plane);
  CHECK(zero.dim == 0);
  CHECK(zero.representatives.empty());
}

TEST_CASE("column space, matrix algebra helpers") {
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = random_matrix(4, 3);
    Subspace cs = column_space(a);
    for (std::size_t j = 0; j < 3; ++j) CHECK(cs.contains(a.column(j)));
    CHECK(cs.dim() == rank(a));
    CHECK(rank(a.transpose()) == rank(a));
  }
  Matrix id3 = Matrix::identity(3);
  CHECK(id3.power(5) == id3);
  CHECK(id3.scaled(Rational(2)).power(2) == id3.scaled(Rational(4)));
  Matrix blocks = id3.block_diag(Matrix::zero(2, 2));
  CHECK(blocks.rows() == 5);
  CHECK(rank(blocks) == 3);
}
