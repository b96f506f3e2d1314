#include "homlie/matrix.hpp"

#include <stdexcept>

namespace homlie {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_int(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw HomlieError("ragged matrix literal");
    std::size_t j = 0;
    for (long x : row) m.at(i, j++) = Rat(x);
    ++i;
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw HomlieError("row size mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw HomlieError("column size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const Rat& x : a_)
    if (!homlie::is_zero(x)) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw HomlieError("matrix shape mismatch in +");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw HomlieError("matrix shape mismatch in -");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw HomlieError("matrix shape mismatch in *");
  Matrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (homlie::is_zero(aik)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        m.at(i, j) += aik * o.at(k, j);
    }
  return m;
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = c * a_[i];
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw HomlieError("vector size mismatch in apply");
  Vec out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!homlie::is_zero(at(i, j))) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
    std::size_t sel = lead;
    while (sel < rows_ && homlie::is_zero(at(sel, col))) ++sel;
    if (sel == rows_) continue;
    if (sel != lead)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(lead, j));
    Rat inv = 1 / at(lead, col);
    for (std::size_t j = col; j < cols_; ++j) at(lead, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == lead || homlie::is_zero(at(i, col))) continue;
      Rat f = at(i, col);
      for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref().size();
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_ && rows_ != 0 && below.rows_ != 0)
    throw HomlieError("column mismatch in vstack");
  std::size_t c = rows_ == 0 ? below.cols_ : cols_;
  Matrix m(rows_ + below.rows_, c);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < below.cols_; ++j)
      m.at(rows_ + i, j) = below.at(i, j);
  return m;
}

Matrix Matrix::left_columns(std::size_t upto) const {
  if (upto > cols_) throw HomlieError("left_columns out of range");
  Matrix m(rows_, upto);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < upto; ++j) m.at(i, j) = at(i, j);
  return m;
}

namespace {

// Canonical basis of the row space: rref rows with zero rows dropped.
Matrix row_space_basis(Matrix m) {
  std::vector<std::size_t> pivots = m.rref();
  Matrix basis(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    basis.set_row(i, m.row(i));
  return basis;
}

}  // namespace

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  for (const Vec& v : vectors)
    if (v.size() != ambient_dim) throw HomlieError("span vector of wrong size");
  Subspace s(ambient_dim);
  s.basis_ = row_space_basis(Matrix::from_rows(vectors, ambient_dim));
  return s;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> p;
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!homlie::is_zero(basis_.at(i, j))) {
        p.push_back(j);
        break;
      }
  return p;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw HomlieError("reduce: ambient mismatch");
  Vec r = v;
  std::vector<std::size_t> piv = pivots();
  for (std::size_t i = 0; i < piv.size(); ++i) {
    const Rat& c = r[piv[i]];
    if (homlie::is_zero(c)) continue;
    Rat f = c;  // pivot entries are 1
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw HomlieError("ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_row(i))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw HomlieError("ambient mismatch in sum");
  Subspace s(a.ambient_);
  s.basis_ = row_space_basis(a.basis_.vstack(b.basis_));
  return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw HomlieError("ambient mismatch in intersect");
  // v in both spaces iff v = A^T x = B^T y; the pairs (x, y) form the kernel
  // of [A^T | -B^T].
  std::size_t n = a.ambient_;
  std::size_t r = a.dim(), s = b.dim();
  Matrix m(n, r + s);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(j, i) = a.basis_.at(i, j);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(j, r + i) = -b.basis_.at(i, j);
  Subspace pairs = kernel(m);
  std::vector<Vec> vectors;
  for (std::size_t k = 0; k < pairs.dim(); ++k) {
    Vec xy = pairs.basis_row(k);
    Vec v(n, Rat(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) v[j] += xy[i] * a.basis_.at(i, j);
    vectors.push_back(v);
  }
  return Subspace::span(n, vectors);
}

Subspace kernel(const Matrix& m) {
  Matrix red = m;
  std::vector<std::size_t> pivots = red.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<Vec> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -red.at(i, free);
    vectors.push_back(v);
  }
  Subspace result = Subspace::span(m.cols(), vectors);
  if (result.dim() + pivots.size() != m.cols())
    throw std::logic_error("rank-nullity violated in kernel()");
  for (const Vec& v : vectors)
    if (!vec_is_zero(m.apply(v)))
      throw std::logic_error("kernel() produced a non-solution");
  return result;
}

SolveResult solve(const Matrix& a, const Vec& b) {
  if (a.rows() != b.size()) throw HomlieError("solve: dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = aug.rref();
  SolveResult result;
  if (!pivots.empty() && pivots.back() == a.cols()) {
    result.kind = SolveKind::Inconsistent;
    return result;
  }
  Vec x(a.cols(), Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug.at(i, a.cols());
  result.particular = x;
  if (pivots.size() == a.cols()) {
    result.kind = SolveKind::Unique;
  } else {
    result.kind = SolveKind::Affine;
    Subspace k = kernel(a);
    for (std::size_t i = 0; i < k.dim(); ++i)
      result.kernel.push_back(k.basis_row(i));
  }
  return result;
}

}  // namespace homlie
