#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "homlie/matrix.hpp"

using namespace homlie;
using homlie::testing::v;

namespace {

// Independent membership oracle: x lies in span(rows) iff appending x to the
// spanning set leaves the rank unchanged.
bool in_span_oracle(const std::vector<Vec>& rows, const Vec& x, std::size_t n) {
  Matrix a = Matrix::from_rows(rows, n);
  Matrix b = Matrix::from_rows(rows, n).vstack(Matrix::from_rows({x}, n));
  return a.rank() == b.rank();
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> entry(-4, 4);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(entry(rng));
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rat_str(rat_parse("2/4")) == "1/2");
  CHECK(rat_str(rat_parse("-6/4")) == "-3/2");
  CHECK(rat_str(rat_parse("7")) == "7");
  CHECK(rat_str(rat_parse("+3/9")) == "1/3");
  CHECK(rat_parse("0/5") == Rat(0));
  CHECK_THROWS_AS(rat_parse("1/0"), HomlieError);
  CHECK_THROWS_AS(rat_parse("a"), HomlieError);
  CHECK_THROWS_AS(rat_parse("1/2/3"), HomlieError);
  CHECK_THROWS_AS(rat_parse(""), HomlieError);
}

TEST_CASE("kernel: identity, zero and the 1x2 example") {
  CHECK(kernel(Matrix::identity(3)).dim() == 0);

  Subspace k = kernel(Matrix(2, 3));
  CHECK(k.dim() == 3);
  CHECK(k == Subspace::full(3));

  // kernel([[1,2]]) is the line through (-2,1); canonical rref row (1,-1/2).
  Matrix m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  Subspace line = kernel(m);
  REQUIRE(line.dim() == 1);
  CHECK(line.basis_row(0) == Vec{Rat(1), Rat(-1, 2)});
  CHECK(line.contains(v({-2, 1})));
}

TEST_CASE("kernel vectors solve the system and satisfy rank-nullity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    Matrix m = random_matrix(rng, dim(rng), dim(rng));
    Subspace k = kernel(m);  // kernel() itself asserts rank-nullity
    CHECK(k.dim() + m.rank() == m.cols());
    for (std::size_t i = 0; i < k.dim(); ++i)
      CHECK(vec_is_zero(m.apply(k.basis_row(i))));
  }
}

TEST_CASE("solve: unique, inconsistent and affine classification") {
  SUBCASE("identity") {
    SolveResult r = solve(Matrix::identity(3), v({4, -1, 2}));
    REQUIRE(r.kind == SolveKind::Unique);
    CHECK(r.particular == v({4, -1, 2}));
  }
  SUBCASE("zero matrix, nonzero rhs") {
    SolveResult r = solve(Matrix(2, 2), v({1, 0}));
    CHECK(r.kind == SolveKind::Inconsistent);
  }
  SUBCASE("underdetermined row") {
    Matrix a(1, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    SolveResult r = solve(a, v({1}));
    REQUIRE(r.kind == SolveKind::Affine);
    CHECK(r.particular == v({1, 0}));
    REQUIRE(r.kernel.size() == 1);
    CHECK(r.kernel[0] == Vec{Rat(1), Rat(-1)});
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(solve(Matrix(2, 2), v({1})), HomlieError);
  }
}

TEST_CASE("subspace canonical form is basis-order independent") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(rng, 4, 5);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < 4; ++i) rows.push_back(m.row(i));
    Subspace a = Subspace::span(5, rows);
    std::shuffle(rows.begin(), rows.end(), rng);
    Subspace b = Subspace::span(5, rows);
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
  }
}

TEST_CASE("lattice: idempotence, axes sum, and the derived intersection") {
  Subspace xaxis = Subspace::span(2, {v({1, 0})});
  Subspace yaxis = Subspace::span(2, {v({0, 1})});
  CHECK(intersect(xaxis, xaxis) == xaxis);
  CHECK(sum(xaxis, yaxis) == Subspace::full(2));

  Subspace diag = Subspace::span(3, {v({1, 1, 0})});
  Subspace plane = Subspace::span(3, {v({1, 0, 0}), v({0, 1, 0})});
  Subspace meet = intersect(diag, plane);

  // Brute-force oracle: scan a grid of multiples of the diagonal generator
  // and keep those lying in the plane.
  std::vector<Vec> grid_hits;
  for (long a = -3; a <= 3; ++a) {
    Vec cand = vec_scale(Rat(a), v({1, 1, 0}));
    if (in_span_oracle({v({1, 0, 0}), v({0, 1, 0})}, cand, 3) &&
        in_span_oracle({v({1, 1, 0})}, cand, 3))
      grid_hits.push_back(cand);
  }
  Subspace oracle = Subspace::span(3, grid_hits);
  CHECK(meet == oracle);
  CHECK(meet == diag);
}

TEST_CASE("dimension formula dim(A)+dim(B) = dim(A+B)+dim(A.B)") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::size_t> rowcount(0, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 5;
    std::vector<Vec> ra, rb;
    for (std::size_t i = 0; i < rowcount(rng); ++i)
      ra.push_back(random_matrix(rng, 1, n).row(0));
    for (std::size_t i = 0; i < rowcount(rng); ++i)
      rb.push_back(random_matrix(rng, 1, n).row(0));
    Subspace a = Subspace::span(n, ra);
    Subspace b = Subspace::span(n, rb);
    CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
  }
}

TEST_CASE("containment and reduction") {
  Subspace plane = Subspace::span(3, {v({1, 0, 2}), v({0, 1, -1})});
  CHECK(plane.contains(v({2, 3, 1})));
  CHECK_FALSE(plane.contains(v({0, 0, 1})));
  CHECK(vec_is_zero(plane.reduce(v({2, 3, 1}))));
  CHECK(plane.contains(Subspace::span(3, {v({1, 1, 1})})));
  CHECK(Subspace::full(3).contains(plane));
  CHECK_THROWS_AS(sum(plane, Subspace::full(2)), HomlieError);
}
