#include <doctest.h>

#include "corpus.hpp"
#include "homlie/grading.hpp"

using namespace homlie;
using namespace homlie::testing;

TEST_CASE("check_grading") {
  SUBCASE("sl(2) is compatible but not consistent") {
    GradingReport r = check_grading(sl2());
    CHECK(r.compatible);
    CHECK_FALSE(r.consistent);  // e is even in odd degree
    CHECK(r.degree_min == -1);
    CHECK(r.degree_max == 1);
    CHECK(r.dims_per_degree.at(0) == 1);
  }
  SUBCASE("the super Heisenberg algebra is compatible and consistent") {
    GradingReport r = check_grading(heisenberg_super());
    CHECK(r.compatible);
    CHECK(r.consistent);
  }
  SUBCASE("all degrees zero: compatible, consistent iff purely even") {
    HomLieSuperalgebra g = HomLieSuperalgebra::from_table(
        {"a", "b"}, {0, 1}, std::vector<long>{0, 0}, {}, Matrix::identity(2));
    GradingReport r = check_grading(g);
    CHECK(r.compatible);
    CHECK_FALSE(r.consistent);
  }
  SUBCASE("degree-moving alpha breaks compatibility") {
    Matrix alpha(3, 3);
    alpha.at(0, 0) = 1;
    alpha.at(1, 2) = 1;  // alpha(f) = e moves degree -1 to 1
    alpha.at(2, 1) = 1;
    HomLieSuperalgebra g = HomLieSuperalgebra::from_table(
        {"h", "e", "f"}, {0, 0, 0}, std::vector<long>{0, 1, -1}, {}, alpha);
    GradingReport r = check_grading(g);
    CHECK_FALSE(r.compatible);
  }
  SUBCASE("missing degrees are an error") {
    CHECK_THROWS_AS(check_grading(affine(AffineTwist::Id)), HomlieError);
  }
}

TEST_CASE("transitivity") {
  SUBCASE("sl(2) is transitive and bitransitive") {
    TransitivityReport r = transitivity(sl2());
    CHECK(r.transitive);
    CHECK(r.bitransitive);
  }
  SUBCASE("abelian with degrees (-1, 0) is not transitive") {
    TransitivityReport r = transitivity(abelian_mixed());
    CHECK_FALSE(r.transitive);
    REQUIRE(r.witnesses.count("transitive"));
  }
  SUBCASE("super Heisenberg: the center kills g_{-1}, witness z") {
    TransitivityReport r = transitivity(heisenberg_super());
    CHECK_FALSE(r.transitive);
    REQUIRE(r.witnesses.count("transitive"));
    CHECK(r.witnesses.at("transitive").labels ==
          std::vector<std::string>{"z"});
  }
}

TEST_CASE("graded_irreducible") {
  SUBCASE("sl(2): g_{-1} is one-dimensional") {
    IrreducibilityVerdict r = graded_irreducible(sl2());
    CHECK(r.status == IrreducibilityVerdict::Status::Irreducible);
  }
  SUBCASE("two sl(2) summands: reducible with a block witness") {
    IrreducibilityVerdict r = graded_irreducible(sl2_direct_sum());
    CHECK(r.status == IrreducibilityVerdict::Status::Reducible);
  }
  SUBCASE("super Heisenberg: one-dimensional again") {
    CHECK(graded_irreducible(heisenberg_super()).status ==
          IrreducibilityVerdict::Status::Irreducible);
  }
  SUBCASE("empty g_{-1} is an error") {
    HomLieSuperalgebra g = HomLieSuperalgebra::from_table(
        {"a"}, {0}, std::vector<long>{0}, {}, Matrix::identity(1));
    CHECK_THROWS_AS(graded_irreducible(g), HomlieError);
  }
}

TEST_CASE("is_simple") {
  SUBCASE("sl(2) is simple") {
    SimplicityVerdict r = is_simple(sl2());
    CHECK(r.status == SimplicityVerdict::Status::Simple);
  }
  SUBCASE("the affine algebra is not: witness span{e3}") {
    SimplicityVerdict r = is_simple(affine(AffineTwist::Id));
    REQUIRE(r.status == SimplicityVerdict::Status::NotSimple);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == Subspace::span(3, {v({0, 0, 1})}));
  }
  SUBCASE("abelian algebras fail the derived clause") {
    SimplicityVerdict r = is_simple(abelian_even());
    CHECK(r.status == SimplicityVerdict::Status::NotSimple);
    CHECK(r.reason.find("[g,g]") != std::string::npos);
    CHECK_FALSE(r.witness.has_value());
  }
  SUBCASE("a direct sum is not simple; the witness is a graded hom-ideal") {
    SimplicityVerdict r = is_simple(sl2_direct_sum());
    REQUIRE(r.status == SimplicityVerdict::Status::NotSimple);
    REQUIRE(r.witness.has_value());
    IdealVerdict verdict = classify_subspace(sl2_direct_sum(), *r.witness);
    CHECK(verdict.is_hom_ideal());
    CHECK(is_degree_homogeneous(sl2_direct_sum(), *r.witness));
  }
  SUBCASE("graded and ungraded verdicts are both reported when graded") {
    SimplicityVerdict r = is_simple(sl2());
    REQUIRE(r.ungraded_status.has_value());
    CHECK(*r.ungraded_status == SimplicityVerdict::Status::Simple);
  }
  SUBCASE("simple implies zero center across the corpus") {
    for (const CorpusEntry& entry : corpus()) {
      SimplicityVerdict r = is_simple(entry.g);
      if (r.status == SimplicityVerdict::Status::Simple)
        CHECK_MESSAGE(derived_and_center(entry.g).center.dim() == 0,
                      entry.name);
    }
  }
}

TEST_CASE("structural criteria on the named instances") {
  SUBCASE("sl(2): simple with all graded conclusions true") {
    CriteriaReport r = structural_criteria(sl2());
    CHECK_FALSE(r.any_alarm);
    CHECK(r.local_generates);
    for (const CriterionCheck& c : r.checks) {
      if (c.name != "simple_implies_transitive_irreducible") continue;
      REQUIRE(c.applicable);
      CHECK(c.hypotheses.at("simple"));
      CHECK(c.conclusions.at("transitive"));
      CHECK(c.conclusions.at("irreducible"));
      CHECK(c.conclusions.at("bracket_g_m1_g_1_is_g_0"));
      CHECK(c.conclusions.at("g_0_nonzero"));
      CHECK(c.conclusions.at("g_1_nonzero"));
    }
  }
  SUBCASE("sl(2): the partial converse also fires consistently") {
    CriteriaReport r = structural_criteria(sl2());
    for (const CriterionCheck& c : r.checks) {
      if (c.name != "transitive_irreducible_generated_implies_simple") continue;
      REQUIRE(c.applicable);
      CHECK(c.hypotheses_hold());
      CHECK(c.conclusions.at("simple"));
    }
  }
  SUBCASE("super Heisenberg: hypotheses fail, implications vacuous") {
    CriteriaReport r = structural_criteria(heisenberg_super());
    CHECK_FALSE(r.any_alarm);
  }
  SUBCASE("affine: the odd-action criterion has a false bracket hypothesis") {
    CriteriaReport r = structural_criteria(affine(AffineTwist::Id));
    CHECK_FALSE(r.any_alarm);
    for (const CriterionCheck& c : r.checks) {
      if (c.name != "faithful_irreducible_odd_action_implies_simple") continue;
      CHECK_FALSE(c.hypotheses.at("odd_brackets_span_even"));
    }
  }
}

TEST_CASE("structural criteria raise no alarms across the corpus") {
  for (const CorpusEntry& entry : corpus()) {
    CriteriaReport r = structural_criteria(entry.g);
    CHECK_MESSAGE(!r.any_alarm, entry.name);
  }
}
