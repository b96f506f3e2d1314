#include <doctest.h>

#include "corpus.hpp"
#include "homlie/repth.hpp"

using namespace homlie;
using namespace homlie::testing;

TEST_CASE("check_representation basics") {
  HomLieSuperalgebra g = sl2();

  SUBCASE("the zero representation passes") {
    Representation r;
    r.module_dim = 2;
    r.module_parity = {0, 0};
    r.rho.assign(3, Matrix(2, 2));
    r.beta = Matrix::identity(2);
    CHECK(check_representation(g, r).pass());
  }
  SUBCASE("the adjoint of sl(2) passes") {
    CHECK(check_representation(g, adjoint(g, 0)).pass());
  }
  SUBCASE("a corrupted action matrix is detected with a witness pair") {
    HomLieSuperalgebra a = affine(AffineTwist::Projection);
    Representation r = adjoint(a, 1);
    CHECK(check_representation(a, r).pass());
    r.rho[0].at(0, 1) += 1;
    RepresentationReport report = check_representation(a, r);
    CHECK_FALSE(report.pass());
    CHECK_FALSE(report.bracket_compatible);
    CHECK(report.witnesses.count("bracket_compatible"));
  }
  SUBCASE("shape mismatches are rejected") {
    Representation r;
    r.module_dim = 2;
    r.module_parity = {0, 0};
    r.rho.assign(2, Matrix(2, 2));  // one matrix short
    r.beta = Matrix::identity(2);
    CHECK_THROWS_AS(check_representation(g, r), HomlieError);
  }
}

TEST_CASE("adjoint representations") {
  SUBCASE("alpha = id: all powers coincide") {
    HomLieSuperalgebra g = sl2();
    Representation a0 = adjoint(g, 0), a2 = adjoint(g, 2);
    for (std::size_t i = 0; i < 3; ++i) CHECK(a0.rho[i] == a2.rho[i]);
  }
  SUBCASE("sl(2): rho(h) = diag(0, 2, -2) on (h, e, f)") {
    Representation r = adjoint(sl2(), 0);
    Matrix expect(3, 3);
    expect.at(1, 1) = 2;
    expect.at(2, 2) = -2;
    CHECK(r.rho[0] == expect);
  }
  SUBCASE("affine projection twist at s = 1 kills e3") {
    Representation r = adjoint(affine(AffineTwist::Projection), 1);
    CHECK(r.rho[2].is_zero());
  }
  SUBCASE("non-multiplicative algebras get a warning note") {
    CHECK(adjoint(sl2(), 0).note.empty());
    Matrix alpha = Matrix::identity(3);
    alpha.at(1, 1) = 4;
    alpha.at(2, 2) = Rat(1, 4);
    HomLieSuperalgebra g = HomLieSuperalgebra::from_table(
        {"h", "e", "f"}, {0, 0, 0}, std::nullopt,
        {{0, 1, v({0, 2, 0})}, {0, 2, v({0, 0, -2})}, {1, 2, v({1, 0, 0})}},
        alpha);
    CHECK_FALSE(adjoint(g, 0).note.empty());
  }
}

TEST_CASE("adjoint passes check_representation for s in {0,1,2} on multiplicative corpus") {
  for (const CorpusEntry& entry : corpus()) {
    if (!entry.g.check_axioms().multiplicative) continue;
    for (unsigned s : {0u, 1u, 2u}) {
      RepresentationReport r =
          check_representation(entry.g, adjoint(entry.g, s));
      std::string label = entry.name + " s=" + std::to_string(s);
      CHECK_MESSAGE(r.pass(), label);
    }
  }
}

TEST_CASE("spin closures") {
  SUBCASE("no operators: the span of the seeds") {
    Subspace s = spin({}, {v({1, 2, 0})}, 3);
    CHECK(s == Subspace::span(3, {v({1, 2, 0})}));
  }
  SUBCASE("zero operators keep the seed span") {
    Subspace s = spin({Matrix(3, 3)}, {v({1, 0, 0}), v({0, 1, 0})}, 3);
    CHECK(s.dim() == 2);
  }
  SUBCASE("sl(2) adjoint operators spin e to the full space") {
    HomLieSuperalgebra g = sl2();
    std::vector<Matrix> ops = {g.ad(0), g.ad(1), g.ad(2)};
    CHECK(spin(ops, {g.basis_vector(1)}, 3) == Subspace::full(3));
  }
  SUBCASE("output is invariant and spinning is idempotent") {
    HomLieSuperalgebra g = gl11();
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < 4; ++i) ops.push_back(g.ad(i));
    for (std::size_t seed = 0; seed < 4; ++seed) {
      Subspace s = spin(ops, {g.basis_vector(seed)}, 4);
      for (const Matrix& m : ops)
        for (std::size_t r = 0; r < s.dim(); ++r)
          CHECK(s.contains(m.apply(s.basis_row(r))));
      std::vector<Vec> rows;
      for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(s.basis_row(r));
      CHECK(spin(ops, rows, 4) == s);
    }
  }
}

TEST_CASE("irreducibility verdicts") {
  SUBCASE("dimension 1 is irreducible, dimension 0 rejected") {
    CHECK(irreducible({}, 1).status == IrreducibilityVerdict::Status::Irreducible);
    CHECK_THROWS_AS(irreducible({}, 0), HomlieError);
  }
  SUBCASE("two trivial summands are reducible with a coordinate witness") {
    IrreducibilityVerdict r = irreducible({Matrix(2, 2)}, 2);
    REQUIRE(r.status == IrreducibilityVerdict::Status::Reducible);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->dim() == 1);
  }
  SUBCASE("sl(2) adjoint module is certified irreducible") {
    HomLieSuperalgebra g = sl2();
    IrreducibilityVerdict r = irreducible({g.ad(0), g.ad(1), g.ad(2)}, 3);
    CHECK(r.status == IrreducibilityVerdict::Status::Irreducible);
    CHECK(r.certificate.find("Norton") != std::string::npos);
  }
  SUBCASE("block-diagonal doubles are reducible") {
    HomLieSuperalgebra g = sl2_direct_sum();
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < 6; ++i) ops.push_back(g.ad(i));
    IrreducibilityVerdict r = irreducible(ops, 6);
    REQUIRE(r.status == IrreducibilityVerdict::Status::Reducible);
    REQUIRE(r.witness.has_value());
    for (const Matrix& m : ops)
      for (std::size_t row = 0; row < r.witness->dim(); ++row)
        CHECK(r.witness->contains(m.apply(r.witness->basis_row(row))));
    CHECK(r.witness->dim() > 0);
    CHECK(r.witness->dim() < 6);
  }
  SUBCASE("a rational rotation has no invariant line: honest inconclusive") {
    // x^2 + 1 is irreducible over Q and Q[M] is a field, so no nonzero
    // singular element exists for the Norton hunt.
    Matrix rot(2, 2);
    rot.at(0, 1) = -1;
    rot.at(1, 0) = 1;
    IrreducibilityVerdict r = irreducible({rot}, 2);
    CHECK(r.status == IrreducibilityVerdict::Status::Inconclusive);
  }
  SUBCASE("diagonal operators with distinct eigenvalues are reducible") {
    Matrix d(3, 3);
    d.at(0, 0) = 1;
    d.at(1, 1) = 2;
    d.at(2, 2) = 3;
    IrreducibilityVerdict r = irreducible({d}, 3);
    REQUIRE(r.status == IrreducibilityVerdict::Status::Reducible);
    CHECK(r.witness->dim() < 3);
  }
  SUBCASE("beta stability of witnesses is reported when beta is given") {
    Matrix beta = Matrix::identity(2);
    IrreducibilityVerdict r = irreducible({Matrix(2, 2)}, 2, beta);
    REQUIRE(r.witness_beta_stable.has_value());
    CHECK(*r.witness_beta_stable);
    Matrix swap(2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    IrreducibilityVerdict r2 = irreducible({Matrix(2, 2)}, 2, swap);
    REQUIRE(r2.witness_beta_stable.has_value());
    CHECK_FALSE(*r2.witness_beta_stable);
  }
}

TEST_CASE("reducible witnesses are proper, nonzero and invariant") {
  for (const CorpusEntry& entry : corpus()) {
    std::size_t n = entry.g.dim();
    if (n == 0) continue;
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < n; ++i) ops.push_back(entry.g.ad(i));
    IrreducibilityVerdict r = irreducible(ops, n);
    if (r.status != IrreducibilityVerdict::Status::Reducible) continue;
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->dim() > 0);
    CHECK(r.witness->dim() < n);
    for (const Matrix& m : ops)
      for (std::size_t row = 0; row < r.witness->dim(); ++row)
        CHECK(r.witness->contains(m.apply(r.witness->basis_row(row))));
  }
}
