#pragma once

#include "homlie/superalgebra.hpp"

namespace homlie {

/// Classification of a subspace relative to the bracket and the twist map.
struct IdealVerdict {
  Subspace subspace{0};
  bool alpha_stable = true;
  bool bracket_closed = true;   // [V, V] subset of V
  bool absorbs = true;          // [V, g] subset of V
  bool is_abelian = true;       // [V, V] = 0
  std::map<std::string, Witness> witnesses;

  bool is_subalgebra() const { return alpha_stable && bracket_closed; }
  bool is_hom_ideal() const { return is_subalgebra() && absorbs; }
};

IdealVerdict classify_subspace(const HomLieSuperalgebra& g, const Subspace& v);

/// Least subspace containing the generators that is stable under alpha,
/// under x -> [e_i, x] for every basis element, and under the parity
/// projections (so the result is a genuine homogeneous hom-ideal).
Subspace ideal_closure(const HomLieSuperalgebra& g,
                       const std::vector<Vec>& generators);

enum class IdealOp { Sum, Intersect, Bracket };

struct IdealArithmeticResult {
  Subspace value{0};
  IdealVerdict verdict;  // the result classified again, per Lemma-style closure
};

/// Sum, intersection or bracket span of two hom-ideals. Both inputs must
/// classify as hom-ideals; the output carries its own classification so the
/// closure property can be audited rather than assumed.
IdealArithmeticResult ideal_arithmetic(const HomLieSuperalgebra& g,
                                       const Subspace& i, const Subspace& j,
                                       IdealOp op);

struct DerivedCenter {
  Subspace derived{0};
  Subspace center{0};
};

DerivedCenter derived_and_center(const HomLieSuperalgebra& g);

/// Quotient by a parity-homogeneous hom-ideal. The coset basis consists of
/// the standard basis vectors at the non-pivot columns of the ideal's
/// canonical basis, keeping their labels, parities and degrees.
HomLieSuperalgebra quotient(const HomLieSuperalgebra& g, const Subspace& ideal);

/// True iff every canonical basis row of v is parity-homogeneous. For a
/// homogeneous subspace this holds automatically; a mixed row proves the
/// subspace is not a direct sum of its even and odd parts.
bool is_parity_homogeneous(const HomLieSuperalgebra& g, const Subspace& v);

bool is_degree_homogeneous(const HomLieSuperalgebra& g, const Subspace& v);

}  // namespace homlie
