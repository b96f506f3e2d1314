#pragma once

#include "homlie/repth.hpp"
#include "homlie/structure.hpp"

namespace homlie {

/// Compatibility diagnostics of a Z-grading (Z-degrees must be present).
struct GradingReport {
  bool compatible = true;  // brackets add degrees and alpha preserves them
  bool consistent = true;  // parity == degree mod 2
  long degree_min = 0, degree_max = 0;
  std::map<long, std::size_t> dims_per_degree;
  std::map<std::string, Witness> witnesses;
};

GradingReport check_grading(const HomLieSuperalgebra& g);

struct TransitivityReport {
  bool transitive = true;
  bool bitransitive = true;
  std::map<std::string, Witness> witnesses;
};

/// Degreewise annihilator test: transitive iff no nonzero element of
/// nonnegative degree kills g_{-1}; bitransitive additionally on the
/// nonpositive side against g_{+1}.
TransitivityReport transitivity(const HomLieSuperalgebra& g);

/// Irreducibility of the g_0 action on g_{-1}.
IrreducibilityVerdict graded_irreducible(const HomLieSuperalgebra& g);

struct SimplicityVerdict {
  enum class Status { Simple, NotSimple, Inconclusive };
  Status status = Status::Inconclusive;
  std::optional<Subspace> witness;  // offending hom-ideal when NotSimple
  std::string reason;
  /// When a grading is present, the verdict ignoring the grading as well.
  std::optional<Status> ungraded_status;
  std::optional<Subspace> ungraded_witness;
};

/// Simplicity via invariant-subspace search over the adjoint operators,
/// alpha, the parity projections and (when graded) the degree projections;
/// a nontrivial invariant subspace of that operator set is exactly a
/// nontrivial homogeneous hom-ideal.
SimplicityVerdict is_simple(const HomLieSuperalgebra& g);

/// One instance-level check of a proposition: hypothesis and conclusion
/// clauses evaluated independently; an alarm means the implication failed
/// on this instance.
struct CriterionCheck {
  std::string name;
  bool applicable = false;
  std::map<std::string, bool> hypotheses;
  std::map<std::string, bool> conclusions;
  bool alarm = false;
  std::string note;

  bool hypotheses_hold() const {
    for (const auto& [k, v] : hypotheses)
      if (!v) return false;
    return true;
  }
};

struct CriteriaReport {
  std::vector<CriterionCheck> checks;
  bool local_generates = false;  // graded algebras only
  bool any_alarm = false;
};

/// Evaluates the simplicity/transitivity criteria on the instance:
/// simple + local part generates => bitransitive; faithful irreducible even
/// part action with [g1,g1] = g0 => simple; simple => transitive,
/// irreducible, [g_{-1},g_1] = g_0 (and the partial converse).
CriteriaReport structural_criteria(const HomLieSuperalgebra& g);

/// Whether the degree-(|d| <= 1) part generates g under bracket and alpha.
bool local_part_generates(const HomLieSuperalgebra& g);

}  // namespace homlie
