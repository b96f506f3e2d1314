#include "homlie/structure.hpp"

namespace homlie {

namespace {

std::string vec_label(const HomLieSuperalgebra& g, const Vec& v) {
  return lincomb_string(g, v);
}

}  // namespace

IdealVerdict classify_subspace(const HomLieSuperalgebra& g, const Subspace& v) {
  if (v.ambient() != g.dim())
    throw HomlieError("classify_subspace: ambient dimension mismatch");
  IdealVerdict verdict;
  verdict.subspace = v;

  for (std::size_t r = 0; r < v.dim() && verdict.alpha_stable; ++r) {
    Vec image = g.alpha().apply(v.basis_row(r));
    if (!v.contains(image)) {
      verdict.alpha_stable = false;
      verdict.witnesses["alpha_stable"] = {
          {vec_label(g, v.basis_row(r))}, "alpha image leaves the subspace"};
    }
  }
  for (std::size_t r = 0; r < v.dim(); ++r)
    for (std::size_t s = 0; s < v.dim(); ++s) {
      Vec w = g.bracket(v.basis_row(r), v.basis_row(s));
      if (!vec_is_zero(w) && verdict.is_abelian) {
        verdict.is_abelian = false;
        verdict.witnesses["is_abelian"] = {
            {vec_label(g, v.basis_row(r)), vec_label(g, v.basis_row(s))},
            "nonzero bracket inside the subspace"};
      }
      if (!v.contains(w) && verdict.bracket_closed) {
        verdict.bracket_closed = false;
        verdict.witnesses["bracket_closed"] = {
            {vec_label(g, v.basis_row(r)), vec_label(g, v.basis_row(s))},
            "bracket of two members leaves the subspace"};
      }
    }
  for (std::size_t r = 0; r < v.dim() && verdict.absorbs; ++r)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Vec w = g.bracket(v.basis_row(r), g.basis_vector(j));
      if (!v.contains(w)) {
        verdict.absorbs = false;
        verdict.witnesses["absorbs"] = {
            {vec_label(g, v.basis_row(r)), g.names()[j]},
            "[" + vec_label(g, v.basis_row(r)) + "," + g.names()[j] +
                "] leaves the subspace"};
        break;
      }
    }
  return verdict;
}

Subspace ideal_closure(const HomLieSuperalgebra& g,
                       const std::vector<Vec>& generators) {
  std::size_t n = g.dim();
  // Seed with the parity-homogeneous components of each generator.
  std::vector<Vec> seeds;
  for (const Vec& v : generators) {
    if (v.size() != n) throw HomlieError("ideal_closure: generator size");
    Vec even(n, Rat(0)), odd(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      (g.parity()[i] == 0 ? even[i] : odd[i]) = v[i];
    if (!vec_is_zero(even)) seeds.push_back(even);
    if (!vec_is_zero(odd)) seeds.push_back(odd);
  }
  Subspace s = Subspace::span(n, seeds);
  bool grew = true;
  while (grew) {
    grew = false;
    Subspace next = s;
    for (std::size_t r = 0; r < s.dim(); ++r) {
      Vec row = s.basis_row(r);
      next = sum(next, Subspace::span(n, {g.alpha().apply(row)}));
      for (std::size_t i = 0; i < n; ++i)
        next = sum(next, Subspace::span(n, {g.ad(i).apply(row)}));
    }
    if (next.dim() > s.dim()) {
      s = next;
      grew = true;
    }
  }
  return s;
}

IdealArithmeticResult ideal_arithmetic(const HomLieSuperalgebra& g,
                                       const Subspace& i, const Subspace& j,
                                       IdealOp op) {
  for (const Subspace* side : {&i, &j}) {
    IdealVerdict v = classify_subspace(g, *side);
    if (!v.is_hom_ideal()) {
      std::string why = "ideal_arithmetic: operand is not a hom-ideal";
      for (const auto& [flag, w] : v.witnesses)
        why += "; " + flag + ": " + w.detail;
      throw HomlieError(why);
    }
  }
  IdealArithmeticResult out;
  switch (op) {
    case IdealOp::Sum:
      out.value = sum(i, j);
      break;
    case IdealOp::Intersect:
      out.value = intersect(i, j);
      break;
    case IdealOp::Bracket: {
      std::vector<Vec> spans;
      for (std::size_t r = 0; r < i.dim(); ++r)
        for (std::size_t s = 0; s < j.dim(); ++s)
          spans.push_back(g.bracket(i.basis_row(r), j.basis_row(s)));
      out.value = Subspace::span(g.dim(), spans);
      break;
    }
  }
  out.verdict = classify_subspace(g, out.value);
  return out;
}

DerivedCenter derived_and_center(const HomLieSuperalgebra& g) {
  std::size_t n = g.dim();
  DerivedCenter out{Subspace::zero(n), Subspace::zero(n)};

  std::vector<Vec> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) brackets.push_back(g.ad(i).col(j));
  out.derived = Subspace::span(n, brackets);

  // v is central iff [v, e_j] = 0 for all j; stack those linear conditions.
  Matrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        stacked.at(j * n + k, i) = g.c(i, j, k);
  out.center = kernel(stacked);
  return out;
}

bool is_parity_homogeneous(const HomLieSuperalgebra& g, const Subspace& v) {
  for (std::size_t r = 0; r < v.dim(); ++r)
    if (!g.parity_of(v.basis_row(r))) return false;
  return true;
}

bool is_degree_homogeneous(const HomLieSuperalgebra& g, const Subspace& v) {
  if (!g.has_degree()) return false;
  for (std::size_t r = 0; r < v.dim(); ++r) {
    Vec row = v.basis_row(r);
    if (!vec_is_zero(row) && !g.degree_of(row)) return false;
  }
  return true;
}

HomLieSuperalgebra quotient(const HomLieSuperalgebra& g, const Subspace& ideal) {
  IdealVerdict verdict = classify_subspace(g, ideal);
  if (!verdict.is_hom_ideal()) {
    std::string why = "quotient: subspace is not a hom-ideal";
    for (const auto& [flag, w] : verdict.witnesses)
      why += "; " + flag + ": " + w.detail;
    throw HomlieError(why);
  }
  if (!is_parity_homogeneous(g, ideal))
    throw HomlieError("quotient: ideal is not parity-homogeneous");

  std::size_t n = g.dim();
  std::vector<bool> in_ideal(n, false);
  for (std::size_t p : ideal.pivots()) in_ideal[p] = true;

  std::vector<std::size_t> coset;  // ambient indices of the coset basis
  for (std::size_t i = 0; i < n; ++i)
    if (!in_ideal[i]) coset.push_back(i);
  std::size_t m = coset.size();

  std::vector<std::string> names;
  std::vector<int> parity;
  for (std::size_t q : coset) {
    names.push_back(g.names()[q]);
    parity.push_back(g.parity()[q]);
  }
  std::optional<std::vector<long>> degree;
  if (g.has_degree() && is_degree_homogeneous(g, ideal)) {
    std::vector<long> d;
    for (std::size_t q : coset) d.push_back((*g.degree())[q]);
    degree = d;
  }

  auto project = [&](const Vec& v) {
    Vec r = ideal.reduce(v);  // supported on non-pivot columns
    Vec out(m, Rat(0));
    for (std::size_t t = 0; t < m; ++t) out[t] = r[coset[t]];
    return out;
  };

  std::vector<Matrix> ad(m, Matrix(m, m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec w = project(g.ad(coset[a]).col(coset[b]));
      for (std::size_t k = 0; k < m; ++k) ad[a].at(k, b) = w[k];
    }
  Matrix alpha(m, m);
  for (std::size_t b = 0; b < m; ++b) {
    Vec w = project(g.alpha().col(coset[b]));
    for (std::size_t k = 0; k < m; ++k) alpha.at(k, b) = w[k];
  }
  return HomLieSuperalgebra::from_tensor(names, parity, degree, ad, alpha);
}

}  // namespace homlie
