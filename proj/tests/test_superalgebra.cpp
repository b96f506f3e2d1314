#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "homlie/superalgebra.hpp"

using namespace homlie;
using namespace homlie::testing;

namespace {

// Independent oracle: the classical super-Jacobi identity of a Lie
// superalgebra, [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]], checked over
// all basis triples. For alpha = id it must agree with the hom-Jacobi flag.
bool classical_jacobi(const HomLieSuperalgebra& g) {
  std::size_t n = g.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vec lhs = g.bracket(g.basis_vector(x), g.ad(y).col(z));
        Vec r1 = g.bracket(g.ad(x).col(y), g.basis_vector(z));
        Vec r2 = g.bracket(g.basis_vector(y), g.ad(x).col(z));
        int s = koszul_sign(g.parity()[x], g.parity()[y]);
        for (std::size_t k = 0; k < n; ++k)
          if (lhs[k] != r1[k] + Rat(s) * r2[k]) return false;
      }
  return true;
}

HomLieSuperalgebra permuted(const HomLieSuperalgebra& g,
                            const std::vector<std::size_t>& pi) {
  std::size_t n = g.dim();
  std::vector<std::string> names(n);
  std::vector<int> parity(n);
  std::optional<std::vector<long>> degree;
  if (g.has_degree()) degree = std::vector<long>(n);
  std::vector<Matrix> ad(n, Matrix(n, n));
  Matrix alpha(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    names[pi[i]] = g.names()[i];
    parity[pi[i]] = g.parity()[i];
    if (degree) (*degree)[pi[i]] = (*g.degree())[i];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        ad[pi[i]].at(pi[k], pi[j]) = g.c(i, j, k);
      alpha.at(pi[i], pi[j]) = g.alpha().at(i, j);
    }
  return HomLieSuperalgebra::from_tensor(names, parity, degree, ad, alpha);
}

}  // namespace

TEST_CASE("affine algebra loads with the supersymmetric fill") {
  HomLieSuperalgebra g = affine(AffineTwist::Id);
  CHECK(g.dim() == 3);
  // [e2,e1] = -e1 is filled in from [e1,e2] = e1.
  CHECK(g.c(1, 0, 0) == Rat(-1));
  CHECK(g.bracket(g.basis_vector(0), g.basis_vector(1)) == v({1, 0, 0}));
}

TEST_CASE("load rejections: even squares, parity violations, odd alpha") {
  CHECK_THROWS_AS(HomLieSuperalgebra::from_table(
                      {"e1", "e2"}, {0, 0}, std::nullopt,
                      {{0, 0, v({0, 1})}}, Matrix::identity(2)),
                  HomlieError);
  // [e1,e2] = e3 with e3 odd but e1, e2 even.
  CHECK_THROWS_AS(HomLieSuperalgebra::from_table(
                      {"e1", "e2", "e3"}, {0, 0, 1}, std::nullopt,
                      {{0, 1, v({0, 0, 1})}}, Matrix::identity(3)),
                  HomlieError);
  Matrix mixing(2, 2);
  mixing.at(0, 1) = 1;  // alpha(odd) has an even component
  mixing.at(1, 0) = 1;
  CHECK_THROWS_AS(HomLieSuperalgebra::from_table({"a", "b"}, {0, 1},
                                                 std::nullopt, {}, mixing),
                  HomlieError);
  CHECK_THROWS_AS(HomLieSuperalgebra::from_table(
                      {"a", "b"}, {0, 0}, std::nullopt,
                      {{1, 0, v({1, 0})}}, Matrix::identity(2)),
                  HomlieError);
}

TEST_CASE("odd squares are legitimate input") {
  HomLieSuperalgebra g = HomLieSuperalgebra::from_table(
      {"x", "z"}, {1, 0}, std::nullopt, {{0, 0, v({0, 1})}},
      Matrix::identity(2));
  CHECK(g.bracket(g.basis_vector(0), g.basis_vector(0)) == v({0, 1}));
  CHECK(g.c(0, 0, 1) == Rat(1));
}

TEST_CASE("bracket is bilinear: affine [e2, e1+e3] = -e1") {
  HomLieSuperalgebra g = affine(AffineTwist::Id);
  Vec x = g.basis_vector(1);
  Vec y = vec_add(g.basis_vector(0), g.basis_vector(2));
  CHECK(g.bracket(x, y) == v({-1, 0, 0}));
  // [x, x] = 0 for any even-supported x.
  Vec even = vec_add(g.basis_vector(0), vec_scale(Rat(3), g.basis_vector(1)));
  CHECK(vec_is_zero(g.bracket(even, even)));
}

TEST_CASE("check_axioms on the affine twists") {
  SUBCASE("identity twist passes everything") {
    AxiomReport r = affine(AffineTwist::Id).check_axioms();
    CHECK(r.parity_graded);
    CHECK(r.supersymmetric);
    CHECK(r.hom_jacobi);
    CHECK(r.multiplicative);
    CHECK(r.regular);
    CHECK(r.alpha_idempotent);
    CHECK(r.core_pass());
  }
  SUBCASE("projection twist: multiplicative and idempotent, not regular") {
    AxiomReport r = affine(AffineTwist::Projection).check_axioms();
    CHECK(r.hom_jacobi);
    CHECK(r.multiplicative);
    CHECK(r.alpha_idempotent);
    CHECK_FALSE(r.regular);
  }
  SUBCASE("shear twist: multiplicative but not idempotent, witness e2") {
    AxiomReport r = affine(AffineTwist::Shear).check_axioms();
    CHECK(r.hom_jacobi);
    CHECK(r.multiplicative);
    REQUIRE_FALSE(r.alpha_idempotent);
    REQUIRE(r.witnesses.count("alpha_idempotent"));
    CHECK(r.witnesses.at("alpha_idempotent").labels ==
          std::vector<std::string>{"e2"});
  }
}

TEST_CASE("hom-Jacobi with alpha = id agrees with the classical identity") {
  for (const CorpusEntry& entry : corpus()) {
    bool id_twist = entry.g.alpha() == Matrix::identity(entry.g.dim());
    if (!id_twist) continue;
    AxiomReport r = entry.g.check_axioms();
    CHECK_MESSAGE(r.hom_jacobi == classical_jacobi(entry.g), entry.name);
  }
}

TEST_CASE("a twisted bracket failing Jacobi is caught with a witness") {
  // sl(2) with a regular non-multiplicative scaling twist breaks hom-Jacobi.
  Matrix alpha = Matrix::identity(3);
  alpha.at(1, 1) = 4;
  alpha.at(2, 2) = Rat(1, 4);
  HomLieSuperalgebra g = HomLieSuperalgebra::from_table(
      {"h", "e", "f"}, {0, 0, 0}, std::nullopt,
      {{0, 1, v({0, 2, 0})}, {0, 2, v({0, 0, -2})}, {1, 2, v({1, 0, 0})}},
      alpha);
  AxiomReport r = g.check_axioms();
  CHECK_FALSE(r.hom_jacobi);
  CHECK(r.witnesses.count("hom_jacobi"));
}

TEST_CASE("check_axioms flags are basis-order independent") {
  std::mt19937 rng(5);
  for (const CorpusEntry& entry : corpus()) {
    std::vector<std::size_t> pi(entry.g.dim());
    for (std::size_t i = 0; i < pi.size(); ++i) pi[i] = i;
    std::shuffle(pi.begin(), pi.end(), rng);
    HomLieSuperalgebra shuffled = permuted(entry.g, pi);
    AxiomReport a = entry.g.check_axioms();
    AxiomReport b = shuffled.check_axioms();
    CHECK(a.parity_graded == b.parity_graded);
    CHECK(a.supersymmetric == b.supersymmetric);
    CHECK(a.hom_jacobi == b.hom_jacobi);
    CHECK(a.multiplicative == b.multiplicative);
    CHECK(a.regular == b.regular);
    CHECK(a.alpha_idempotent == b.alpha_idempotent);
  }
}

TEST_CASE("the whole corpus satisfies the defining axioms") {
  for (const CorpusEntry& entry : corpus()) {
    AxiomReport r = entry.g.check_axioms();
    CHECK_MESSAGE(r.core_pass(), entry.name);
    for (std::size_t i = 0; i < entry.g.dim(); ++i)
      for (std::size_t j = 0; j < entry.g.dim(); ++j) {
        Vec lhs = entry.g.bracket(entry.g.basis_vector(j), entry.g.basis_vector(i));
        Vec rhs = vec_scale(
            Rat(-koszul_sign(entry.g.parity()[i], entry.g.parity()[j])),
            entry.g.bracket(entry.g.basis_vector(i), entry.g.basis_vector(j)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("degree-aware axiom check") {
  HomLieSuperalgebra g = sl2();
  AxiomReport r = g.check_axioms();
  REQUIRE(r.z_grading_compatible.has_value());
  CHECK(*r.z_grading_compatible);

  // Break the degree map: e gets degree 2, so [h,e] leaves its degree.
  HomLieSuperalgebra bad = HomLieSuperalgebra::from_table(
      {"h", "e", "f"}, {0, 0, 0}, std::vector<long>{0, 2, -1},
      {{0, 1, v({0, 2, 0})}, {0, 2, v({0, 0, -2})}, {1, 2, v({1, 0, 0})}},
      Matrix::identity(3));
  AxiomReport rb = bad.check_axioms();
  REQUIRE(rb.z_grading_compatible.has_value());
  CHECK_FALSE(*rb.z_grading_compatible);
}
