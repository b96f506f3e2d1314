#include "homlie/repth.hpp"

#include <random>

namespace homlie {

RepresentationReport check_representation(const HomLieSuperalgebra& g,
                                          const Representation& r) {
  std::size_t n = g.dim();
  std::size_t d = r.module_dim;
  if (r.rho.size() != n)
    throw HomlieError("check_representation: one rho matrix per basis element required");
  if (r.module_parity.size() != d || r.beta.rows() != d || r.beta.cols() != d)
    throw HomlieError("check_representation: module shape mismatch");
  for (const Matrix& m : r.rho)
    if (m.rows() != d || m.cols() != d)
      throw HomlieError("check_representation: rho shape mismatch");

  RepresentationReport report;
  for (std::size_t i = 0; i < n && report.rho_even; ++i)
    for (std::size_t a = 0; a < d && report.rho_even; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (!is_zero(r.rho[i].at(a, b)) &&
            r.module_parity[a] !=
                ((r.module_parity[b] + g.parity()[i]) % 2)) {
          report.rho_even = false;
          report.witnesses["rho_even"] = {
              {g.names()[i]}, "rho does not shift module parity by |x|"};
          break;
        }
  for (std::size_t a = 0; a < d && report.beta_even; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (!is_zero(r.beta.at(a, b)) && r.module_parity[a] != r.module_parity[b]) {
        report.beta_even = false;
        report.witnesses["beta_even"] = {{}, "beta is not even"};
        break;
      }

  auto rho_of = [&](const Vec& x) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(x[i])) m = m + r.rho[i].scaled(x[i]);
    return m;
  };

  for (std::size_t i = 0; i < n && report.twist_compatible; ++i) {
    Matrix lhs = rho_of(g.alpha().col(i)) * r.beta;
    Matrix rhs = r.beta * r.rho[i];
    if (!(lhs == rhs)) {
      report.twist_compatible = false;
      report.witnesses["twist_compatible"] = {
          {g.names()[i]}, "rho(alpha(x)) beta != beta rho(x)"};
    }
  }
  for (std::size_t i = 0; i < n && report.bracket_compatible; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = rho_of(g.ad(i).col(j)) * r.beta;
      Matrix rhs = rho_of(g.alpha().col(i)) * r.rho[j] -
                   (rho_of(g.alpha().col(j)) * r.rho[i])
                       .scaled(Rat(koszul_sign(g.parity()[i], g.parity()[j])));
      if (!(lhs == rhs)) {
        report.bracket_compatible = false;
        report.witnesses["bracket_compatible"] = {
            {g.names()[i], g.names()[j]},
            "rho([x,y]) beta != rho(ax) rho(y) - (-1)^{|x||y|} rho(ay) rho(x)"};
        break;
      }
    }
  return report;
}

Representation adjoint(const HomLieSuperalgebra& g, unsigned s) {
  std::size_t n = g.dim();
  Matrix alpha_pow = Matrix::identity(n);
  for (unsigned k = 0; k < s; ++k) alpha_pow = g.alpha() * alpha_pow;

  Representation rep;
  rep.module_dim = n;
  rep.module_parity = g.parity();
  rep.beta = g.alpha();
  for (std::size_t i = 0; i < n; ++i)
    rep.rho.push_back(g.ad_of(alpha_pow.col(i)));
  if (!g.check_axioms().multiplicative)
    rep.note = "algebra is not multiplicative; the adjoint identities are not guaranteed";
  return rep;
}

Subspace spin(const std::vector<Matrix>& operators, const std::vector<Vec>& seeds,
              std::size_t ambient_dim) {
  for (const Matrix& m : operators)
    if (m.rows() != ambient_dim || m.cols() != ambient_dim)
      throw HomlieError("spin: operator size mismatch");
  Subspace s = Subspace::span(ambient_dim, seeds);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t r = 0; r < s.dim(); ++r)
      for (const Matrix& m : operators) {
        Vec image = m.apply(s.basis_row(r));
        if (!s.contains(image)) {
          s = sum(s, Subspace::span(ambient_dim, {image}));
          grew = true;
        }
      }
  }
  return s;
}

namespace {

// Annihilator of a space of row functionals: {v : f(v) = 0 for all f}.
Subspace annihilator(const Subspace& dual_space) {
  return kernel(dual_space.basis());
}

struct Search {
  const std::vector<Matrix>& ops;
  std::vector<Matrix> ops_t;
  std::size_t n;
  std::optional<Matrix> beta;

  IrreducibilityVerdict reducible(Subspace witness, std::string how) const {
    IrreducibilityVerdict v;
    v.status = IrreducibilityVerdict::Status::Reducible;
    v.witness = std::move(witness);
    v.certificate = std::move(how);
    if (beta) {
      bool stable = true;
      for (std::size_t r = 0; r < v.witness->dim() && stable; ++r)
        stable = v.witness->contains(beta->apply(v.witness->basis_row(r)));
      v.witness_beta_stable = stable;
    }
    return v;
  }

  // Tries the kernel vectors of a singular candidate. Returns a verdict if
  // the candidate decides the question.
  std::optional<IrreducibilityVerdict> try_candidate(const Matrix& w) {
    if (w.is_zero()) return std::nullopt;
    Subspace ker = kernel(w);
    if (ker.dim() == 0 || ker.dim() == n) return std::nullopt;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
      Subspace span_v = spin(ops, {ker.basis_row(r)}, n);
      if (span_v.dim() < n)
        return reducible(span_v, "spin of a kernel vector of a singular element");
    }
    if (ker.dim() == 1) {
      // Norton: nullity one, kernel vector spins full; the transpose module
      // decides the rest.
      Subspace ker_t = kernel(w.transpose());
      Subspace span_t = spin(ops_t, {ker_t.basis_row(0)}, n);
      if (span_t.dim() < n)
        return reducible(annihilator(span_t),
                         "annihilator of a proper transpose-module spin");
      IrreducibilityVerdict v;
      v.status = IrreducibilityVerdict::Status::Irreducible;
      v.certificate =
          "Norton certificate: nullity-one element with full spins on the module and its transpose";
      return v;
    }
    return std::nullopt;
  }
};

}  // namespace

IrreducibilityVerdict irreducible(const std::vector<Matrix>& operators,
                                  std::size_t dim,
                                  const std::optional<Matrix>& beta) {
  if (dim == 0) throw HomlieError("irreducible: zero-dimensional module");
  for (const Matrix& m : operators)
    if (m.rows() != dim || m.cols() != dim)
      throw HomlieError("irreducible: operator size mismatch");

  IrreducibilityVerdict verdict;
  if (dim == 1) {
    verdict.status = IrreducibilityVerdict::Status::Irreducible;
    verdict.certificate = "dimension 1";
    return verdict;
  }

  Search search{operators, {}, dim, beta};
  for (const Matrix& m : operators) search.ops_t.push_back(m.transpose());

  // Cheap pass: a standard basis vector generating a proper subspace settles it.
  for (std::size_t i = 0; i < dim; ++i) {
    Vec e(dim, Rat(0));
    e[i] = 1;
    Subspace s = spin(operators, {e}, dim);
    if (s.dim() < dim)
      return search.reducible(s, "spin of a standard basis vector");
  }

  // Deterministic candidate schedule for the singular-element hunt.
  std::vector<Matrix> pool;
  for (const Matrix& m : operators)
    if (!m.is_zero()) pool.push_back(m);
  if (pool.empty()) {
    // All operators vanish yet every standard vector spun full: impossible
    // for dim >= 2, so this point is unreachable; keep the honest fallback.
    verdict.status = IrreducibilityVerdict::Status::Inconclusive;
    verdict.certificate = "no nonzero operators";
    return verdict;
  }

  std::vector<Matrix> words = pool;
  for (const Matrix& a : pool)
    for (const Matrix& b : pool) {
      if (words.size() > 120) break;
      words.push_back(a * b);
    }
  for (const Matrix& a : pool)
    for (const Matrix& b : pool) {
      if (words.size() > 220) break;
      words.push_back(a + b);
      words.push_back(a - b);
    }

  std::size_t budget = 400;
  auto consider = [&](const Matrix& w) -> std::optional<IrreducibilityVerdict> {
    if (budget == 0) return std::nullopt;
    --budget;
    auto direct = search.try_candidate(w);
    if (direct) return direct;
    // Integer spectral shifts catch diagonalizable candidates.
    for (long k : {1L, -1L, 2L, -2L, 3L, -3L}) {
      Matrix shifted = w - Matrix::identity(dim).scaled(Rat(k));
      auto v = search.try_candidate(shifted);
      if (v) return v;
    }
    return std::nullopt;
  };

  for (const Matrix& w : words) {
    auto v = consider(w);
    if (v) return *v;
    if (budget == 0) break;
  }

  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int round = 0; round < 200 && budget > 0; ++round) {
    Matrix w(dim, dim);
    for (const Matrix& m : pool) w = w + m.scaled(Rat(coeff(rng)));
    auto v = consider(w);
    if (v) return *v;
  }

  verdict.status = IrreducibilityVerdict::Status::Inconclusive;
  verdict.certificate = "no certifying singular element within the search budget";
  return verdict;
}

}  // namespace homlie
