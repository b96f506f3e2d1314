#pragma once

#include "homlie/superalgebra.hpp"

namespace homlie {

/// Sign handling in the tensor-space operator recursion. Verbatim applies
/// the defining formulas with no extra signs; Koszul inserts
/// (-1)^{|op||first factor|} in front of the pass-through term, which is
/// the convention that makes the operator relations hold for odd elements.
enum class PhiSigns { Verbatim, Koszul };

/// Local hom-Lie superalgebra: pieces of degrees -1, 0, 1 with the bracket
/// defined exactly when |i+j| <= 1, an idempotent degree-preserving twist,
/// and the partial hom-Jacobi identity wherever all three terms exist.
class LocalAlgebra {
 public:
  static LocalAlgebra from_table(std::vector<std::string> names,
                                 std::vector<int> parity,
                                 std::vector<int> degree,
                                 const std::vector<BracketEntry>& entries,
                                 Matrix alpha);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& parity() const { return parity_; }
  const std::vector<int>& degree() const { return degree_; }
  const Matrix& alpha() const { return alpha_; }
  const std::vector<std::size_t>& piece(int d) const;

  bool defined(std::size_t i, std::size_t j) const {
    return std::abs(degree_[i] + degree_[j]) <= 1;
  }
  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return ad_[i].at(k, j);
  }
  /// [e_i, e_j] as a coefficient vector; the pair must be defined.
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  /// Bilinear extension; throws if a nonzero coefficient pair is undefined.
  Vec bracket(const Vec& x, const Vec& y) const;

 private:
  LocalAlgebra() = default;
  std::vector<std::string> names_;
  std::vector<int> parity_;
  std::vector<int> degree_;  // values in {-1, 0, 1}
  std::vector<Matrix> ad_;
  Matrix alpha_;
  std::vector<std::size_t> neg_, zero_, pos_;
};

/// Truncated tensor space over g_{-1}: levels T_0 = span{1}, T_k =
/// g_{-1}^{(tensor k)} for k <= cap. Level k carries Z-degree -k. Basis
/// elements are factor tuples in row-major order, first factor most
/// significant.
struct TensorWindow {
  std::size_t m = 0;                // dim g_{-1}
  int cap = 0;                      // highest retained tensor level
  std::vector<std::size_t> offset;  // offset[k] = first index of level k
  std::vector<int> level;           // per window index
  std::vector<int> parity;          // per window index

  static TensorWindow make(const LocalAlgebra& local, int cap);
  std::size_t dim() const { return level.size(); }
  /// First index of the level-k block, = total size of levels < k.
  std::size_t block_start(int k) const { return offset[k]; }
};

/// The operator images of the local basis on the tensor window, one matrix
/// per basis element, all exact. A degree-d basis element acts with window
/// block shift -d (level k maps to level k - d), truncated above the cap.
struct PhiOperators {
  TensorWindow window;
  PhiSigns signs = PhiSigns::Verbatim;
  std::vector<Matrix> phi;  // indexed like the local basis
};

PhiOperators phi_operators(const LocalAlgebra& local, int cap,
                           PhiSigns signs = PhiSigns::Verbatim);

/// Matrix identity checks of the three supercommutator relations between
/// operator images, asserted on the safe sub-window T_0..T_{cap-1} where
/// truncation cannot interfere.
struct PhiRelationsReport {
  bool negative_zero = true;  // [phi(ay), phi(az)] = phi([ay, az])
  bool positive_negative = true;
  bool zero_positive = true;
  std::map<std::string, Witness> witnesses;
  bool all_pass() const {
    return negative_zero && positive_negative && zero_positive;
  }
};

PhiRelationsReport verify_phi_relations(const LocalAlgebra& local,
                                        const PhiOperators& ops);

enum class Recovery { Faithful, QuotientRealized };

struct ProlongResult {
  HomLieSuperalgebra algebra;
  Recovery recovery = Recovery::Faithful;
  std::map<long, std::size_t> dims;  // per degree, -d_max..d_max
  PhiRelationsReport relations;      // recorded precondition
  bool relations_pass = false;
  bool closed = true;  // no nonzero brackets escaping the degree range
  std::string note;
};

/// Realizes the minimal Z-graded algebra of the local part as the span of
/// the operator images and their iterated supercommutators, with degree-d
/// pieces [G_{+-1}, G_{+-n}] up to |d| = d_max. Structure constants are read
/// off by re-expressing supercommutators in the computed piece bases, with
/// operator equality asserted only on windows untouched by truncation. The
/// induced twist is phi(alpha(b)) on generators and is extended degree by
/// degree by an exact linear solve.
ProlongResult prolong_minimal(const LocalAlgebra& local, int d_max, int cap,
                              PhiSigns signs = PhiSigns::Verbatim);

}  // namespace homlie
