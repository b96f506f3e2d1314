#include "homlie/superalgebra.hpp"

namespace homlie {

namespace {

void check_basis_shapes(const std::vector<std::string>& names,
                        const std::vector<int>& parity,
                        const std::optional<std::vector<long>>& degree,
                        const Matrix& alpha) {
  std::size_t n = names.size();
  if (parity.size() != n) throw HomlieError("parity list size mismatch");
  for (int p : parity)
    if (p != 0 && p != 1) throw HomlieError("parity must be 0 or 1");
  if (degree && degree->size() != n)
    throw HomlieError("degree list size mismatch");
  if (alpha.rows() != n || alpha.cols() != n)
    throw HomlieError("alpha must be a square matrix over the basis");
  for (std::size_t i = 0; i < n; ++i) {
    bool dup = false;
    for (std::size_t j = i + 1; j < n; ++j)
      if (names[i] == names[j]) dup = true;
    if (dup) throw HomlieError("duplicate basis label '" + names[i] + "'");
  }
}

}  // namespace

HomLieSuperalgebra HomLieSuperalgebra::from_table(
    std::vector<std::string> names, std::vector<int> parity,
    std::optional<std::vector<long>> degree,
    const std::vector<BracketEntry>& entries, Matrix alpha) {
  check_basis_shapes(names, parity, degree, alpha);
  std::size_t n = names.size();
  std::vector<Matrix> ad(n, Matrix(n, n));
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (const BracketEntry& e : entries) {
    if (e.i >= n || e.j >= n) throw HomlieError("bracket index out of range");
    if (e.i > e.j)
      throw HomlieError("bracket entry [" + names[e.i] + "," + names[e.j] +
                        "] violates the i <= j input convention");
    if (seen[e.i][e.j])
      throw HomlieError("duplicate bracket entry [" + names[e.i] + "," +
                        names[e.j] + "]");
    seen[e.i][e.j] = true;
    if (e.value.size() != n) throw HomlieError("bracket value size mismatch");
    if (e.i == e.j && parity[e.i] == 0 && !vec_is_zero(e.value))
      throw HomlieError("[" + names[e.i] + "," + names[e.i] +
                        "] must vanish for an even basis element");
    for (std::size_t k = 0; k < n; ++k) ad[e.i].at(k, e.j) = e.value[k];
    if (e.i != e.j) {
      int s = -koszul_sign(parity[e.i], parity[e.j]);
      for (std::size_t k = 0; k < n; ++k)
        ad[e.j].at(k, e.i) = Rat(s) * e.value[k];
    }
  }
  HomLieSuperalgebra g;
  g.names_ = std::move(names);
  g.parity_ = std::move(parity);
  g.degree_ = std::move(degree);
  g.ad_ = std::move(ad);
  g.alpha_ = std::move(alpha);
  g.validate_structure();
  return g;
}

HomLieSuperalgebra HomLieSuperalgebra::from_tensor(
    std::vector<std::string> names, std::vector<int> parity,
    std::optional<std::vector<long>> degree, const std::vector<Matrix>& ad,
    Matrix alpha) {
  check_basis_shapes(names, parity, degree, alpha);
  std::size_t n = names.size();
  if (ad.size() != n) throw HomlieError("structure tensor size mismatch");
  for (const Matrix& m : ad)
    if (m.rows() != n || m.cols() != n)
      throw HomlieError("structure tensor shape mismatch");
  HomLieSuperalgebra g;
  g.names_ = std::move(names);
  g.parity_ = std::move(parity);
  g.degree_ = std::move(degree);
  g.ad_ = ad;
  g.alpha_ = std::move(alpha);
  g.validate_structure();
  return g;
}

void HomLieSuperalgebra::validate_structure() const {
  std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int s = -koszul_sign(parity_[i], parity_[j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (c(j, i, k) != Rat(s) * c(i, j, k))
          throw HomlieError("structure tensor violates supersymmetry at [" +
                            names_[i] + "," + names_[j] + "]");
        if (!is_zero(c(i, j, k)) &&
            parity_[k] != ((parity_[i] + parity_[j]) % 2))
          throw HomlieError("bracket [" + names_[i] + "," + names_[j] +
                            "] is not parity-homogeneous");
      }
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(alpha_.at(i, j)) && parity_[i] != parity_[j])
        throw HomlieError("alpha is not even: alpha(" + names_[j] +
                          ") has a component on " + names_[i]);
}

Matrix HomLieSuperalgebra::ad_of(const Vec& x) const {
  if (x.size() != dim()) throw HomlieError("ad_of: dimension mismatch");
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!is_zero(x[i])) m = m + ad_[i].scaled(x[i]);
  return m;
}

Vec HomLieSuperalgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw HomlieError("bracket: dimension mismatch");
  Vec out(dim(), Rat(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_zero(x[i])) continue;
    Vec column = ad_[i].apply(y);
    for (std::size_t k = 0; k < dim(); ++k) out[k] += x[i] * column[k];
  }
  return out;
}

Vec HomLieSuperalgebra::basis_vector(std::size_t i) const {
  Vec v(dim(), Rat(0));
  v[i] = 1;
  return v;
}

std::optional<int> HomLieSuperalgebra::parity_of(const Vec& v) const {
  std::optional<int> p;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_zero(v[i])) continue;
    if (!p)
      p = parity_[i];
    else if (*p != parity_[i])
      return std::nullopt;
  }
  return p;
}

std::optional<long> HomLieSuperalgebra::degree_of(const Vec& v) const {
  if (!degree_) return std::nullopt;
  std::optional<long> d;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_zero(v[i])) continue;
    if (!d)
      d = (*degree_)[i];
    else if (*d != (*degree_)[i])
      return std::nullopt;
  }
  return d;
}

std::vector<std::size_t> HomLieSuperalgebra::degree_indices(long d) const {
  if (!degree_) throw HomlieError("algebra has no Z-degrees");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < dim(); ++i)
    if ((*degree_)[i] == d) idx.push_back(i);
  return idx;
}

std::vector<std::size_t> HomLieSuperalgebra::parity_indices(int p) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < dim(); ++i)
    if (parity_[i] == p) idx.push_back(i);
  return idx;
}

std::string lincomb_string(const HomLieSuperalgebra& g, const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    Rat c = v[i];
    if (s.empty()) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != Rat(1)) s += rat_str(c) + "*";
    s += g.names()[i];
  }
  return s.empty() ? "0" : s;
}

AxiomReport HomLieSuperalgebra::check_axioms() const {
  AxiomReport report;
  std::size_t n = dim();

  for (std::size_t i = 0; i < n && report.parity_graded; ++i)
    for (std::size_t j = 0; j < n && report.parity_graded; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(c(i, j, k)) &&
            parity_[k] != ((parity_[i] + parity_[j]) % 2)) {
          report.parity_graded = false;
          report.witnesses["parity_graded"] = {
              {names_[i], names_[j]},
              "[" + names_[i] + "," + names_[j] + "] has a component of the wrong parity"};
          break;
        }

  for (std::size_t i = 0; i < n && report.supersymmetric; ++i)
    for (std::size_t j = i; j < n && report.supersymmetric; ++j) {
      int s = -koszul_sign(parity_[i], parity_[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (c(j, i, k) != Rat(s) * c(i, j, k)) {
          report.supersymmetric = false;
          report.witnesses["supersymmetric"] = {
              {names_[i], names_[j]}, "supersymmetry fails on this pair"};
          break;
        }
    }

  // Hom-Jacobi, exhaustively over all ordered basis triples.
  for (std::size_t x = 0; x < n && report.hom_jacobi; ++x)
    for (std::size_t y = 0; y < n && report.hom_jacobi; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vec ax = alpha_.col(x), ay = alpha_.col(y), az = alpha_.col(z);
        Vec t1 = bracket(ax, ad_[y].col(z));  // [alpha(x), [y, z]]
        Vec t2 = bracket(ay, ad_[z].col(x));  // [alpha(y), [z, x]]
        Vec t3 = bracket(az, ad_[x].col(y));  // [alpha(z), [x, y]]
        Vec total(n, Rat(0));
        int s1 = koszul_sign(parity_[x], parity_[z]);
        int s2 = koszul_sign(parity_[y], parity_[x]);
        int s3 = koszul_sign(parity_[z], parity_[y]);
        for (std::size_t k = 0; k < n; ++k)
          total[k] = Rat(s1) * t1[k] + Rat(s2) * t2[k] + Rat(s3) * t3[k];
        if (!vec_is_zero(total)) {
          report.hom_jacobi = false;
          report.witnesses["hom_jacobi"] = {
              {names_[x], names_[y], names_[z]},
              "hom-Jacobi sum is nonzero on this triple"};
          break;
        }
      }

  for (std::size_t i = 0; i < n && report.multiplicative; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = alpha_.apply(ad_[i].col(j));
      Vec rhs = bracket(alpha_.col(i), alpha_.col(j));
      if (lhs != rhs) {
        report.multiplicative = false;
        report.witnesses["multiplicative"] = {
            {names_[i], names_[j]},
            "alpha([x,y]) differs from [alpha(x),alpha(y)]"};
        break;
      }
    }

  if (alpha_.rank() != n) {
    report.regular = false;
    report.witnesses["regular"] = {{}, "alpha is singular"};
  }

  Matrix alpha_sq = alpha_ * alpha_;
  if (!(alpha_sq == alpha_)) {
    report.alpha_idempotent = false;
    for (std::size_t j = 0; j < n; ++j)
      if (alpha_sq.col(j) != alpha_.col(j)) {
        report.witnesses["alpha_idempotent"] = {
            {names_[j]}, "alpha^2 and alpha differ on this element"};
        break;
      }
  }

  if (degree_) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(c(i, j, k)) &&
              (*degree_)[k] != (*degree_)[i] + (*degree_)[j]) {
            ok = false;
            report.witnesses["z_grading_compatible"] = {
                {names_[i], names_[j]},
                "[" + names_[i] + "," + names_[j] + "] leaves its degree"};
            break;
          }
    report.z_grading_compatible = ok;
  }
  return report;
}

}  // namespace homlie
