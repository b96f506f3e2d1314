#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "homlie/rational.hpp"

namespace homlie {

/// Dense exact-rational matrix, row major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  /// Convenience for literals in tests: from_int({{1,2},{3,4}}).
  static Matrix from_int(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);

  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Rat& c) const;
  bool operator==(const Matrix& o) const = default;

  Vec apply(const Vec& v) const;  // matrix * column vector

  /// In-place reduced row echelon form. Returns the pivot columns, in order.
  std::vector<std::size_t> rref();
  std::size_t rank() const;

  /// Rows i of `rows` appended below this matrix (column counts must agree).
  Matrix vstack(const Matrix& below) const;

  /// Copy of the given column range [0, upto).
  Matrix left_columns(std::size_t upto) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

class Subspace;

enum class SolveKind { Unique, Affine, Inconsistent };

/// Exact classification of a linear system a x = b.
struct SolveResult {
  SolveKind kind = SolveKind::Inconsistent;
  Vec particular;          // valid for Unique and Affine
  std::vector<Vec> kernel; // spanning set of homogeneous solutions (Affine)
};

SolveResult solve(const Matrix& a, const Vec& b);

/// Subspace of Q^n in canonical form: basis rows in reduced row echelon
/// form, nonzero, pivots 1, pivot columns strictly increasing and cleared
/// elsewhere. Equality of subspaces is equality of basis matrices.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }
  std::vector<std::size_t> pivots() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const = default;

  /// Residue of v after eliminating all pivot coordinates; zero iff v lies
  /// in the subspace. The residue is supported on non-pivot columns only.
  Vec reduce(const Vec& v) const;

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_;
  Matrix basis_;
};

/// Null space {v : m v = 0} in canonical form. Checks rank-nullity on every
/// call and aborts the computation if it ever fails.
Subspace kernel(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace homlie
