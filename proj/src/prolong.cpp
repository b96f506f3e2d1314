#include "homlie/prolong.hpp"

#include <cmath>
#include <cstdlib>

namespace homlie {

namespace {

void fill_supersymmetric(std::vector<Matrix>& ad, const std::vector<int>& parity,
                         std::size_t i, std::size_t j, const Vec& value) {
  std::size_t n = parity.size();
  for (std::size_t k = 0; k < n; ++k) ad[i].at(k, j) = value[k];
  if (i != j) {
    int s = -koszul_sign(parity[i], parity[j]);
    for (std::size_t k = 0; k < n; ++k) ad[j].at(k, i) = Rat(s) * value[k];
  }
}

}  // namespace

LocalAlgebra LocalAlgebra::from_table(std::vector<std::string> names,
                                      std::vector<int> parity,
                                      std::vector<int> degree,
                                      const std::vector<BracketEntry>& entries,
                                      Matrix alpha) {
  std::size_t n = names.size();
  if (parity.size() != n || degree.size() != n)
    throw HomlieError("local algebra: parity/degree size mismatch");
  for (int d : degree)
    if (d < -1 || d > 1)
      throw HomlieError("local algebra degrees must lie in {-1, 0, 1}");
  if (alpha.rows() != n || alpha.cols() != n)
    throw HomlieError("local algebra: alpha shape mismatch");

  LocalAlgebra L;
  L.names_ = std::move(names);
  L.parity_ = std::move(parity);
  L.degree_ = std::move(degree);
  L.alpha_ = std::move(alpha);
  L.ad_.assign(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    if (L.degree_[i] == -1) L.neg_.push_back(i);
    if (L.degree_[i] == 0) L.zero_.push_back(i);
    if (L.degree_[i] == 1) L.pos_.push_back(i);
  }

  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (const BracketEntry& e : entries) {
    if (e.i >= n || e.j >= n) throw HomlieError("local bracket index out of range");
    if (e.i > e.j) throw HomlieError("local bracket entries must have i <= j");
    if (seen[e.i][e.j])
      throw HomlieError("duplicate local bracket entry [" + L.names_[e.i] +
                        "," + L.names_[e.j] + "]");
    seen[e.i][e.j] = true;
    if (!L.defined(e.i, e.j))
      throw HomlieError("bracket [" + L.names_[e.i] + "," + L.names_[e.j] +
                        "] is outside the local range |i+j| <= 1");
    if (e.value.size() != n) throw HomlieError("local bracket value size");
    if (e.i == e.j && L.parity_[e.i] == 0 && !vec_is_zero(e.value))
      throw HomlieError("even square bracket must vanish");
    int want_deg = L.degree_[e.i] + L.degree_[e.j];
    int want_par = (L.parity_[e.i] + L.parity_[e.j]) % 2;
    for (std::size_t k = 0; k < n; ++k)
      if (!is_zero(e.value[k]) &&
          (L.degree_[k] != want_deg || L.parity_[k] != want_par))
        throw HomlieError("bracket [" + L.names_[e.i] + "," + L.names_[e.j] +
                          "] lands outside g_{" + std::to_string(want_deg) + "}");
    fill_supersymmetric(L.ad_, L.parity_, e.i, e.j, e.value);
  }

  // alpha: even, degree-preserving, idempotent, multiplicative on defined pairs.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(L.alpha_.at(i, j)) &&
          (L.parity_[i] != L.parity_[j] || L.degree_[i] != L.degree_[j]))
        throw HomlieError("alpha must preserve parity and degree");
  if (!(L.alpha_ * L.alpha_ == L.alpha_))
    throw HomlieError("alpha is not idempotent (alpha^2 != alpha)");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!L.defined(i, j)) continue;
      Vec lhs = L.alpha_.apply(L.bracket_basis(i, j));
      Vec rhs = L.bracket(L.alpha_.col(i), L.alpha_.col(j));
      if (lhs != rhs)
        throw HomlieError("alpha is not multiplicative on [" + L.names_[i] +
                          "," + L.names_[j] + "]");
    }

  // Partial hom-Jacobi over every ordered triple whose three terms exist.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        int dx = L.degree_[x], dy = L.degree_[y], dz = L.degree_[z];
        if (std::abs(dy + dz) > 1 || std::abs(dz + dx) > 1 ||
            std::abs(dx + dy) > 1 || std::abs(dx + dy + dz) > 1)
          continue;
        Vec t1 = L.bracket(L.alpha_.col(x), L.bracket_basis(y, z));
        Vec t2 = L.bracket(L.alpha_.col(y), L.bracket_basis(z, x));
        Vec t3 = L.bracket(L.alpha_.col(z), L.bracket_basis(x, y));
        int s1 = koszul_sign(L.parity_[x], L.parity_[z]);
        int s2 = koszul_sign(L.parity_[y], L.parity_[x]);
        int s3 = koszul_sign(L.parity_[z], L.parity_[y]);
        Vec total(n, Rat(0));
        for (std::size_t k = 0; k < n; ++k)
          total[k] = Rat(s1) * t1[k] + Rat(s2) * t2[k] + Rat(s3) * t3[k];
        if (!vec_is_zero(total))
          throw HomlieError("partial hom-Jacobi fails on (" + L.names_[x] +
                            ", " + L.names_[y] + ", " + L.names_[z] + ")");
      }
  return L;
}

const std::vector<std::size_t>& LocalAlgebra::piece(int d) const {
  switch (d) {
    case -1:
      return neg_;
    case 0:
      return zero_;
    case 1:
      return pos_;
    default:
      throw HomlieError("local piece index must be -1, 0 or 1");
  }
}

Vec LocalAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (!defined(i, j))
    throw HomlieError("bracket [" + names_[i] + "," + names_[j] +
                      "] is not defined in the local algebra");
  return ad_[i].col(j);
}

Vec LocalAlgebra::bracket(const Vec& x, const Vec& y) const {
  std::size_t n = dim();
  if (x.size() != n || y.size() != n)
    throw HomlieError("local bracket: dimension mismatch");
  Vec out(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      if (!defined(i, j))
        throw HomlieError("bracket touches an undefined local pair [" +
                          names_[i] + "," + names_[j] + "]");
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(c(i, j, k))) out[k] += x[i] * y[j] * c(i, j, k);
    }
  }
  return out;
}

TensorWindow TensorWindow::make(const LocalAlgebra& local, int cap) {
  if (cap < 1) throw HomlieError("tensor window too small (cap < 1)");
  TensorWindow w;
  w.m = local.piece(-1).size();
  w.cap = cap;
  std::vector<int> neg_parity;
  for (std::size_t i : local.piece(-1)) neg_parity.push_back(local.parity()[i]);

  std::size_t block = 1;
  for (int k = 0; k <= cap; ++k) {
    w.offset.push_back(w.level.size());
    for (std::size_t t = 0; t < block; ++t) {
      w.level.push_back(k);
      int p = 0;
      std::size_t rest = t;
      for (int f = 0; f < k; ++f) {
        std::size_t unit = 1;
        for (int g = 1; g < k - f; ++g) unit *= w.m;
        p = (p + neg_parity[rest / unit]) % 2;
        rest %= unit;
      }
      w.parity.push_back(p);
    }
    if (k < cap) block *= w.m;
  }
  w.offset.push_back(w.level.size());
  return w;
}

namespace {

std::size_t pow_sz(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

PhiOperators phi_operators(const LocalAlgebra& local, int cap, PhiSigns signs) {
  PhiOperators out;
  out.window = TensorWindow::make(local, cap);
  out.signs = signs;
  const TensorWindow& w = out.window;
  std::size_t D = w.dim();
  std::size_t m = w.m;
  std::size_t n = local.dim();
  out.phi.assign(n, Matrix(D, D));

  const std::vector<std::size_t>& neg = local.piece(-1);
  const std::vector<std::size_t>& zero = local.piece(0);
  const std::vector<std::size_t>& pos = local.piece(1);

  // Left tensor multiplication for the degree -1 piece.
  for (std::size_t r = 0; r < neg.size(); ++r) {
    Matrix& op = out.phi[neg[r]];
    for (int k = 0; k < cap; ++k) {
      std::size_t block = pow_sz(m, k);
      for (std::size_t q = 0; q < block; ++q)
        op.at(w.offset[k + 1] + r * block + q, w.offset[k] + q) = 1;
    }
  }

  // Degree 0: bracket action on level 1, extended as a derivation.
  for (std::size_t zi : zero) {
    Matrix& op = out.phi[zi];
    for (std::size_t j = 0; j < m; ++j) {
      Vec br = local.bracket_basis(zi, neg[j]);
      for (std::size_t r = 0; r < m; ++r)
        op.at(w.offset[1] + r, w.offset[1] + j) = br[neg[r]];
    }
    for (int k = 2; k <= cap; ++k) {
      std::size_t sub = pow_sz(m, k - 1);
      for (std::size_t j = 0; j < m; ++j) {
        Rat pass_sign(signs == PhiSigns::Koszul
                          ? koszul_sign(local.parity()[zi], local.parity()[neg[j]])
                          : 1);
        Vec br = local.bracket_basis(zi, neg[j]);
        for (std::size_t q = 0; q < sub; ++q) {
          std::size_t col = w.offset[k] + j * sub + q;
          for (std::size_t r = 0; r < m; ++r)
            if (!is_zero(br[neg[r]]))
              op.at(w.offset[k] + r * sub + q, col) += br[neg[r]];
          std::size_t subcol = w.offset[k - 1] + q;
          for (std::size_t u = 0; u < sub; ++u) {
            const Rat& val = op.at(w.offset[k - 1] + u, subcol);
            if (!is_zero(val))
              op.at(w.offset[k] + j * sub + u, col) += pass_sign * val;
          }
        }
      }
    }
  }

  // Degree +1: kills levels 0 and 1; the recursion consumes the first
  // factor through alpha and a degree-0 image.
  for (std::size_t xi : pos) {
    Matrix& op = out.phi[xi];
    for (int k = 2; k <= cap; ++k) {
      std::size_t sub = pow_sz(m, k - 1);
      std::size_t subsub = pow_sz(m, k - 2);
      for (std::size_t j = 0; j < m; ++j) {
        Rat pass_sign(signs == PhiSigns::Koszul
                          ? koszul_sign(local.parity()[xi], local.parity()[neg[j]])
                          : 1);
        // [x, alpha(f_j)] as a degree-0 element.
        Vec zvec(n, Rat(0));
        for (std::size_t r = 0; r < m; ++r) {
          const Rat& a = local.alpha().at(neg[r], neg[j]);
          if (is_zero(a)) continue;
          Vec br = local.bracket_basis(xi, neg[r]);
          for (std::size_t t = 0; t < n; ++t) zvec[t] += a * br[t];
        }
        for (std::size_t q = 0; q < sub; ++q) {
          std::size_t col = w.offset[k] + j * sub + q;
          std::size_t subcol = w.offset[k - 1] + q;
          for (std::size_t zi : zero) {
            if (is_zero(zvec[zi])) continue;
            const Matrix& zop = out.phi[zi];
            for (std::size_t u = 0; u < sub; ++u) {
              const Rat& val = zop.at(w.offset[k - 1] + u, subcol);
              if (!is_zero(val))
                op.at(w.offset[k - 1] + u, col) += zvec[zi] * val;
            }
          }
          for (std::size_t u = 0; u < subsub; ++u) {
            const Rat& val = op.at(w.offset[k - 2] + u, subcol);
            if (is_zero(val)) continue;
            for (std::size_t r = 0; r < m; ++r) {
              const Rat& a = local.alpha().at(neg[r], neg[j]);
              if (!is_zero(a))
                op.at(w.offset[k - 1] + r * subsub + u, col) +=
                    pass_sign * a * val;
            }
          }
        }
      }
    }
  }
  return out;
}

namespace {

Matrix phi_of(const PhiOperators& ops, const Vec& element) {
  std::size_t D = ops.window.dim();
  Matrix m(D, D);
  for (std::size_t i = 0; i < element.size(); ++i)
    if (!is_zero(element[i])) m = m + ops.phi[i].scaled(element[i]);
  return m;
}

Matrix supercommutator(const Matrix& a, const Matrix& b, int pa, int pb) {
  return a * b - (b * a).scaled(Rat(koszul_sign(pa, pb)));
}

}  // namespace

PhiRelationsReport verify_phi_relations(const LocalAlgebra& local,
                                        const PhiOperators& ops) {
  if (ops.window.cap < 2)
    throw HomlieError("verify_phi_relations needs cap >= 2");
  PhiRelationsReport report;
  const TensorWindow& w = ops.window;
  std::size_t safe = w.block_start(w.cap);  // columns of levels 0..cap-1

  auto check_pair = [&](std::size_t a, std::size_t b, bool& flag,
                        const char* key) {
    Vec aa = local.alpha().col(a), ab = local.alpha().col(b);
    Matrix lhs = phi_of(ops, local.bracket(aa, ab));
    Matrix rhs = supercommutator(phi_of(ops, aa), phi_of(ops, ab),
                                 local.parity()[a], local.parity()[b]);
    if (!(lhs.left_columns(safe) == rhs.left_columns(safe))) {
      flag = false;
      if (!report.witnesses.count(key))
        report.witnesses[key] = {
            {local.names()[a], local.names()[b]},
            "operator relation fails on the safe window"};
    }
  };

  for (std::size_t y : local.piece(-1))
    for (std::size_t z : local.piece(0))
      check_pair(y, z, report.negative_zero, "negative_zero");
  for (std::size_t x : local.piece(1))
    for (std::size_t y : local.piece(-1))
      check_pair(x, y, report.positive_negative, "positive_negative");
  for (std::size_t z : local.piece(0))
    for (std::size_t x : local.piece(1))
      check_pair(z, x, report.zero_positive, "zero_positive");
  return report;
}

namespace {

struct PieceOp {
  Matrix mat;
  int parity = 0;
  std::size_t local_index = 0;  // generator pieces: index into the local basis
  int prov_a = -1, prov_b = -1;  // derived pieces: basis indices of the pair
};

struct Piece {
  long deg = 0;
  int klimit = 0;  // operators are exact on levels 0..klimit
  std::vector<PieceOp> ops;
};

int raise_of(long deg) { return deg < 0 ? static_cast<int>(-deg) : 0; }

// Exactness limit (in levels) of the supercommutator of two piece operators.
int pair_limit(int cap, long da, long db) {
  long ra = raise_of(da), rb = raise_of(db);
  long ab = std::min<long>(cap - rb, cap + db - ra);
  long ba = std::min<long>(cap - ra, cap + da - rb);
  return static_cast<int>(std::min(ab, ba));
}

Vec flatten(const Matrix& op, const TensorWindow& w, int klimit) {
  std::size_t ncols = w.block_start(klimit + 1);
  Vec out;
  out.reserve(op.rows() * ncols);
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t i = 0; i < op.rows(); ++i) out.push_back(op.at(i, j));
  return out;
}

Vec coordinatize(const Piece& piece, const Matrix& op, const TensorWindow& w,
                 int klimit) {
  std::size_t ncols = w.block_start(klimit + 1);
  std::size_t rows = op.rows() * ncols;
  Matrix a(rows, piece.ops.size());
  for (std::size_t c = 0; c < piece.ops.size(); ++c)
    a.set_col(c, flatten(piece.ops[c].mat, w, klimit));
  SolveResult sol = solve(a, flatten(op, w, klimit));
  if (sol.kind == SolveKind::Inconsistent)
    throw HomlieError(
        "prolongation: operator is outside the computed degree piece; "
        "the tensor cap is too small or the local data is inconsistent");
  if (sol.kind == SolveKind::Affine)
    throw HomlieError(
        "prolongation: piece basis is ambiguous on the safe window; "
        "increase the tensor cap");
  return sol.particular;
}

Matrix op_from_coords(const Piece& piece, const Vec& coords, std::size_t D) {
  Matrix m(D, D);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!is_zero(coords[i])) m = m + piece.ops[i].mat.scaled(coords[i]);
  return m;
}

}  // namespace

ProlongResult prolong_minimal(const LocalAlgebra& local, int d_max, int cap,
                              PhiSigns signs) {
  if (d_max < 1) throw HomlieError("prolong_minimal: d_max must be >= 1");
  if (cap < d_max + 1)
    throw HomlieError("prolong_minimal: tensor cap must be >= d_max + 1");

  PhiOperators ops = phi_operators(local, cap, signs);
  const TensorWindow& w = ops.window;
  std::size_t D = w.dim();

  ProlongResult result;
  result.relations = verify_phi_relations(local, ops);
  result.relations_pass = result.relations.all_pass();
  if (!result.relations_pass)
    result.note = "operator relations fail on this input; "
                  "the realized brackets may not represent the local data";

  std::map<long, Piece> pieces;
  for (long d = -d_max; d <= d_max; ++d) {
    pieces[d].deg = d;
    pieces[d].klimit = cap - raise_of(d);
  }

  // Generator pieces: keep the images of the local basis, dropping the ones
  // that vanish or depend on earlier images (the quotient-realized case).
  bool faithful = true;
  for (long d : {-1L, 0L, 1L}) {
    Piece& piece = pieces[d];
    Subspace seen(0);
    bool first = true;
    for (std::size_t b : local.piece(static_cast<int>(d))) {
      Vec flat = flatten(ops.phi[b], w, piece.klimit);
      if (first) {
        seen = Subspace::zero(flat.size());
        first = false;
      }
      Subspace grown = sum(seen, Subspace::span(flat.size(), {flat}));
      if (grown.dim() > seen.dim()) {
        seen = grown;
        piece.ops.push_back({ops.phi[b], local.parity()[b], b, -1, -1});
      } else {
        faithful = false;
      }
    }
  }
  result.recovery = faithful ? Recovery::Faithful : Recovery::QuotientRealized;
  if (!faithful)
    result.note += std::string(result.note.empty() ? "" : "; ") +
                   "some local generators act as zero or dependently; "
                   "the realization is a quotient of the local part";

  // Iterated supercommutators [G_{+-1}, G_{+-n}] -> G_{+-(n+1)}.
  for (int side : {-1, 1}) {
    for (int n = 1; n < d_max; ++n) {
      Piece& ones = pieces[side];
      Piece& prev = pieces[side * n];
      Piece& next = pieces[side * (n + 1)];
      Subspace seen(0);
      bool first = true;
      for (std::size_t a = 0; a < ones.ops.size(); ++a)
        for (std::size_t b = 0; b < prev.ops.size(); ++b) {
          Matrix comm = supercommutator(ones.ops[a].mat, prev.ops[b].mat,
                                        ones.ops[a].parity, prev.ops[b].parity);
          Vec flat = flatten(comm, w, next.klimit);
          if (first) {
            seen = Subspace::zero(flat.size());
            first = false;
          }
          Subspace grown = sum(seen, Subspace::span(flat.size(), {flat}));
          if (grown.dim() > seen.dim()) {
            seen = grown;
            next.ops.push_back({comm,
                                (ones.ops[a].parity + prev.ops[b].parity) % 2,
                                0, static_cast<int>(a), static_cast<int>(b)});
          }
        }
    }
  }

  for (long d = -d_max; d <= d_max; ++d)
    result.dims[d] = pieces[d].ops.size();

  // Induced twist: phi(alpha(b)) on the generator pieces, then degree by
  // degree through the bracket expressions that built each piece.
  std::map<long, Matrix> twist;
  for (long d : {-1L, 0L, 1L}) {
    Piece& piece = pieces[d];
    Matrix a(piece.ops.size(), piece.ops.size());
    for (std::size_t p = 0; p < piece.ops.size(); ++p) {
      Matrix image = phi_of(ops, local.alpha().col(piece.ops[p].local_index));
      a.set_col(p, coordinatize(piece, image, w, piece.klimit));
    }
    twist[d] = a;
  }
  for (int side : {-1, 1}) {
    for (int n = 1; n < d_max; ++n) {
      Piece& ones = pieces[side];
      Piece& prev = pieces[side * n];
      Piece& next = pieces[side * (n + 1)];
      std::size_t dim = next.ops.size();
      if (dim == 0) {
        twist[side * (n + 1)] = Matrix(0, 0);
        continue;
      }
      std::vector<Vec> vs, ws;
      for (std::size_t a = 0; a < ones.ops.size(); ++a)
        for (std::size_t b = 0; b < prev.ops.size(); ++b) {
          Matrix comm = supercommutator(ones.ops[a].mat, prev.ops[b].mat,
                                        ones.ops[a].parity, prev.ops[b].parity);
          vs.push_back(coordinatize(next, comm, w, next.klimit));
          Matrix aa = op_from_coords(ones, twist[side].col(a), D);
          Matrix ab = op_from_coords(prev, twist[side * n].col(b), D);
          Matrix image = supercommutator(aa, ab, ones.ops[a].parity,
                                         prev.ops[b].parity);
          ws.push_back(coordinatize(next, image, w, next.klimit));
        }
      // Solve A * v = w for all pairs at once, one matrix row at a time.
      Matrix vt(vs.size(), dim);
      for (std::size_t r = 0; r < vs.size(); ++r) vt.set_row(r, vs[r]);
      Matrix a(dim, dim);
      for (std::size_t row = 0; row < dim; ++row) {
        Vec rhs(vs.size());
        for (std::size_t r = 0; r < vs.size(); ++r) rhs[r] = ws[r][row];
        SolveResult sol = solve(vt, rhs);
        if (sol.kind != SolveKind::Unique)
          throw HomlieError(
              "prolongation: the induced twist is not a well-defined linear "
              "map on degree " + std::to_string(side * (n + 1)));
        a.set_row(row, sol.particular);
      }
      twist[side * (n + 1)] = a;
    }
  }

  // Assemble the graded algebra.
  std::vector<std::string> names;
  std::vector<int> parity;
  std::vector<long> degree;
  std::vector<std::pair<long, std::size_t>> where;  // degree, index in piece
  for (long d = -d_max; d <= d_max; ++d) {
    Piece& piece = pieces[d];
    for (std::size_t i = 0; i < piece.ops.size(); ++i) {
      if (d >= -1 && d <= 1) {
        names.push_back(local.names()[piece.ops[i].local_index]);
      } else {
        std::string stem = d < 0 ? "gm" + std::to_string(-d)
                                 : "gp" + std::to_string(d);
        names.push_back(stem + "_" + std::to_string(i + 1));
      }
      parity.push_back(piece.ops[i].parity);
      degree.push_back(d);
      where.emplace_back(d, i);
    }
  }
  std::size_t total = names.size();

  std::vector<Matrix> ad(total, Matrix(total, total));
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = i; j < total; ++j) {
      auto [di, pi] = where[i];
      auto [dj, pj] = where[j];
      const PieceOp& a = pieces[di].ops[pi];
      const PieceOp& b = pieces[dj].ops[pj];
      Matrix comm = supercommutator(a.mat, b.mat, a.parity, b.parity);
      long d = di + dj;
      int limit = pair_limit(cap, di, dj);
      if (std::abs(d) > d_max) {
        if (limit < 0) continue;  // no window overlap to test
        if (!comm.left_columns(w.block_start(limit + 1)).is_zero()) {
          result.closed = false;
          result.note += std::string(result.note.empty() ? "" : "; ") +
                         "bracket [" + names[i] + "," + names[j] +
                         "] escapes the degree range and was truncated";
        }
        continue;
      }
      Piece& target = pieces[d];
      int klimit = std::min(limit, target.klimit);
      if (target.ops.empty()) {
        if (!comm.left_columns(w.block_start(klimit + 1)).is_zero())
          throw HomlieError(
              "prolongation: nonzero bracket lands in an empty degree piece");
        continue;
      }
      Vec coords = coordinatize(target, comm, w, klimit);
      std::size_t base = 0;
      for (long dd = -d_max; dd < d; ++dd) base += pieces[dd].ops.size();
      Vec value(total, Rat(0));
      for (std::size_t k = 0; k < coords.size(); ++k) value[base + k] = coords[k];
      fill_supersymmetric(ad, parity, i, j, value);
    }

  Matrix alpha_out(total, total);
  {
    std::size_t base = 0;
    for (long d = -d_max; d <= d_max; ++d) {
      const Matrix& block = twist[d];
      for (std::size_t c = 0; c < block.cols(); ++c)
        for (std::size_t r = 0; r < block.rows(); ++r)
          alpha_out.at(base + r, base + c) = block.at(r, c);
      base += pieces[d].ops.size();
    }
  }

  result.algebra = HomLieSuperalgebra::from_tensor(names, parity, degree, ad,
                                                   alpha_out);
  return result;
}

}  // namespace homlie
