#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homlie/matrix.hpp"

namespace homlie {

/// First tuple of basis labels exhibiting a failed check.
struct Witness {
  std::vector<std::string> labels;
  std::string detail;
};

struct AxiomReport {
  bool parity_graded = true;
  bool supersymmetric = true;
  bool hom_jacobi = true;
  bool multiplicative = true;
  bool regular = true;
  bool alpha_idempotent = true;
  std::optional<bool> z_grading_compatible;  // present iff degrees are set
  std::map<std::string, Witness> witnesses;  // keyed by flag name

  /// The defining axioms; the remaining flags are structural qualifiers.
  bool core_pass() const {
    return parity_graded && supersymmetric && hom_jacobi &&
           z_grading_compatible.value_or(true);
  }
};

/// Entry of a bracket table: [e_i, e_j] = value, with i <= j.
struct BracketEntry {
  std::size_t i = 0, j = 0;
  Vec value;
};

/// Finite-dimensional hom-Lie superalgebra presented by structure constants
/// over a homogeneous basis, with twist map alpha. Immutable after
/// construction. Vectors are coefficient columns over the basis; matrices
/// act on the left, so alpha(e_j) is column j of the alpha matrix.
class HomLieSuperalgebra {
 public:
  /// The zero-dimensional algebra; useful as a placeholder result slot.
  HomLieSuperalgebra() = default;

  /// Builds from upper-triangular bracket entries (i <= j); the i > j side
  /// is filled in by supersymmetry. Validates the structural invariants:
  /// parity-homogeneous brackets, even alpha, zero even squares.
  static HomLieSuperalgebra from_table(std::vector<std::string> names,
                                       std::vector<int> parity,
                                       std::optional<std::vector<long>> degree,
                                       const std::vector<BracketEntry>& entries,
                                       Matrix alpha);

  /// Builds from a complete structure tensor c[i][j][k]; the supersymmetry
  /// convention is verified rather than imposed.
  static HomLieSuperalgebra from_tensor(std::vector<std::string> names,
                                        std::vector<int> parity,
                                        std::optional<std::vector<long>> degree,
                                        const std::vector<Matrix>& ad,
                                        Matrix alpha);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& parity() const { return parity_; }
  const std::optional<std::vector<long>>& degree() const { return degree_; }
  const Matrix& alpha() const { return alpha_; }

  /// Matrix of x -> [e_i, x].
  const Matrix& ad(std::size_t i) const { return ad_[i]; }
  /// Matrix of y -> [x, y] for an arbitrary coefficient vector x.
  Matrix ad_of(const Vec& x) const;

  /// Structure constant: coefficient of e_k in [e_i, e_j].
  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return ad_[i].at(k, j);
  }

  Vec bracket(const Vec& x, const Vec& y) const;
  Vec basis_vector(std::size_t i) const;

  /// Parity of a nonzero vector if it is homogeneous; nullopt otherwise or
  /// for zero.
  std::optional<int> parity_of(const Vec& v) const;
  std::optional<long> degree_of(const Vec& v) const;

  /// Indices of basis elements of the given Z-degree (requires degrees).
  std::vector<std::size_t> degree_indices(long d) const;
  std::vector<std::size_t> parity_indices(int p) const;

  AxiomReport check_axioms() const;

  bool has_degree() const { return degree_.has_value(); }

 private:
  void validate_structure() const;

  std::vector<std::string> names_;
  std::vector<int> parity_;
  std::optional<std::vector<long>> degree_;
  std::vector<Matrix> ad_;  // ad_[i](k, j) = c[i][j][k]
  Matrix alpha_;
};

/// Sign (-1)^{pq} for parities p, q.
inline int koszul_sign(int p, int q) { return (p & q & 1) ? -1 : 1; }

/// Human-readable rendering of a coefficient vector, e.g. "e1 - 1/2*e3".
std::string lincomb_string(const HomLieSuperalgebra& g, const Vec& v);

}  // namespace homlie
