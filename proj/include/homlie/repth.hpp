#pragma once

#include "homlie/superalgebra.hpp"

namespace homlie {

/// Representation data: one action matrix per basis element of the algebra,
/// plus the module twist beta.
struct Representation {
  std::size_t module_dim = 0;
  std::vector<int> module_parity;
  std::vector<Matrix> rho;
  Matrix beta;
  std::string note;  // e.g. a warning that the algebra is not multiplicative
};

struct RepresentationReport {
  bool rho_even = true;
  bool beta_even = true;
  bool twist_compatible = true;    // rho(alpha x) beta = beta rho(x)
  bool bracket_compatible = true;  // rho([x,y]) beta = rho(ax) rho(y) -+ ...
  std::map<std::string, Witness> witnesses;
  bool pass() const {
    return rho_even && beta_even && twist_compatible && bracket_compatible;
  }
};

RepresentationReport check_representation(const HomLieSuperalgebra& g,
                                          const Representation& r);

/// alpha^s-adjoint representation: rho(e_i) = [alpha^s(e_i), -], beta = alpha.
/// When g is not multiplicative a note is attached, since the representation
/// identities are then not guaranteed.
Representation adjoint(const HomLieSuperalgebra& g, unsigned s);

/// Least subspace containing the seeds and invariant under every operator.
Subspace spin(const std::vector<Matrix>& operators, const std::vector<Vec>& seeds,
              std::size_t ambient_dim);

struct IrreducibilityVerdict {
  enum class Status { Irreducible, Reducible, Inconclusive };
  Status status = Status::Inconclusive;
  std::optional<Subspace> witness;  // proper nonzero invariant subspace
  std::string certificate;          // how the verdict was reached
  /// Present when a beta matrix was supplied: whether the witness is also
  /// beta-stable (the definition leaves this requirement open).
  std::optional<bool> witness_beta_stable;
};

/// Invariant-subspace search over Q with a deterministic schedule: spins of
/// the standard basis vectors, then a Norton-style singular-element hunt
/// through words in the generators, integer shifts and seeded random
/// combinations. Irreducible verdicts are certified by a nullity-one element
/// whose kernel vector spins to the full space on both the module and the
/// transpose module; when no certificate is found within the budget the
/// verdict is an honest Inconclusive.
IrreducibilityVerdict irreducible(const std::vector<Matrix>& operators,
                                  std::size_t dim,
                                  const std::optional<Matrix>& beta = std::nullopt);

}  // namespace homlie
