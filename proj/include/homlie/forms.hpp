#pragma once

#include "homlie/structure.hpp"

namespace homlie {

/// Supersymmetry sign convention. Classical reads f(x,y) = (-1)^{|x||y|}
/// f(y,x) (symmetric on the even part); Paper reads f(x,y) = -(-1)^{|x||y|}
/// f(y,x). Both are implemented since the definitions in circulation differ.
enum class FormSign { Classical, Paper };

struct BilinearForm {
  Matrix gram;  // square over the algebra basis
  /// Degree blocks |i| on which values were prescribed (graded bookkeeping).
  std::vector<long> known_blocks;
};

struct FormReport {
  bool consistent = true;       // f(even, odd) = 0
  bool supersymmetric = true;   // under the active convention
  bool invariant = true;        // f([x,y],z) = f(x,[y,z])
  bool alpha_invariant = true;  // f(alpha x, y) = f(x, alpha y)
  bool nondegenerate = true;
  Subspace radical{0};
  std::map<std::string, Witness> witnesses;
};

FormReport check_form(const HomLieSuperalgebra& g, const BilinearForm& b,
                      FormSign sign = FormSign::Classical);

/// The radical of an invariant form classified as a subspace; invariance is
/// a precondition.
IdealVerdict form_radical_ideal(const HomLieSuperalgebra& g,
                                const BilinearForm& b,
                                FormSign sign = FormSign::Classical);

/// Factor lambda with gram(b1) = lambda * gram(b2), when one exists.
std::optional<Rat> proportional(const BilinearForm& b1, const BilinearForm& b2);

enum class ExtendVerdict { Unique, Underdetermined, Inconsistent };

struct ExtendResult {
  BilinearForm extended;
  ExtendVerdict verdict = ExtendVerdict::Unique;
  FormReport final_check;  // the whole-algebra re-verification
  std::string note;
};

/// Extends gram values given on the degree-(|i| <= 1) part of a graded
/// algebra, one degree block at a time, by solving the exact linear system
/// of all invariance and alpha-invariance constraints that touch the block.
/// Preconditions: compatible grading generated by the local part; the given
/// block values are consistent, supersymmetric, alpha-invariant and
/// invariant on every triple lying fully inside the local part.
ExtendResult extend_form(const HomLieSuperalgebra& g, const Matrix& local_gram,
                         long k_max, FormSign sign = FormSign::Classical);

}  // namespace homlie
