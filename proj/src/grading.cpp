#include "homlie/grading.hpp"

#include <algorithm>

namespace homlie {

namespace {

std::vector<long> present_degrees(const HomLieSuperalgebra& g) {
  std::vector<long> degs;
  for (long d : *g.degree())
    if (std::find(degs.begin(), degs.end(), d) == degs.end()) degs.push_back(d);
  std::sort(degs.begin(), degs.end());
  return degs;
}

Matrix coordinate_projection(std::size_t n, const std::vector<std::size_t>& idx) {
  Matrix p(n, n);
  for (std::size_t i : idx) p.at(i, i) = 1;
  return p;
}

// Kernel of a -> [a, g_d'] restricted to the coordinate piece g_d, embedded
// back into the full space.
Subspace piece_annihilator(const HomLieSuperalgebra& g,
                           const std::vector<std::size_t>& piece,
                           const std::vector<std::size_t>& against) {
  std::size_t n = g.dim();
  Matrix m(against.size() * n, piece.size());
  for (std::size_t y = 0; y < against.size(); ++y)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < piece.size(); ++j)
        m.at(y * n + k, j) = g.c(piece[j], against[y], k);
  Subspace local = kernel(m);
  std::vector<Vec> embedded;
  for (std::size_t r = 0; r < local.dim(); ++r) {
    Vec row = local.basis_row(r);
    Vec v(n, Rat(0));
    for (std::size_t j = 0; j < piece.size(); ++j) v[piece[j]] = row[j];
    embedded.push_back(v);
  }
  return Subspace::span(n, embedded);
}

}  // namespace

GradingReport check_grading(const HomLieSuperalgebra& g) {
  if (!g.has_degree()) throw HomlieError("check_grading: no Z-degrees present");
  GradingReport report;
  std::size_t n = g.dim();
  const std::vector<long>& deg = *g.degree();

  for (std::size_t i = 0; i < n; ++i) {
    report.dims_per_degree[deg[i]]++;
    report.degree_min = std::min(report.degree_min, deg[i]);
    report.degree_max = std::max(report.degree_max, deg[i]);
  }

  for (std::size_t i = 0; i < n && report.compatible; ++i)
    for (std::size_t j = 0; j < n && report.compatible; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(g.c(i, j, k)) && deg[k] != deg[i] + deg[j]) {
          report.compatible = false;
          report.witnesses["compatible"] = {
              {g.names()[i], g.names()[j]},
              "bracket leaves the expected degree"};
          break;
        }
  for (std::size_t j = 0; j < n && report.compatible; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(g.alpha().at(i, j)) && deg[i] != deg[j]) {
        report.compatible = false;
        report.witnesses["compatible"] = {
            {g.names()[j]}, "alpha does not preserve the degree"};
        break;
      }

  for (std::size_t i = 0; i < n; ++i)
    if (((deg[i] % 2) + 2) % 2 != g.parity()[i]) {
      report.consistent = false;
      report.witnesses["consistent"] = {
          {g.names()[i]}, "parity differs from degree mod 2"};
      break;
    }
  return report;
}

TransitivityReport transitivity(const HomLieSuperalgebra& g) {
  GradingReport grading = check_grading(g);
  if (!grading.compatible)
    throw HomlieError("transitivity: grading is not compatible");

  TransitivityReport report;
  std::vector<std::size_t> gm1 = g.degree_indices(-1);
  std::vector<std::size_t> gp1 = g.degree_indices(1);

  for (long d : present_degrees(g)) {
    std::vector<std::size_t> piece = g.degree_indices(d);
    if (piece.empty()) continue;
    if (d >= 0 && report.transitive) {
      Subspace ann = piece_annihilator(g, piece, gm1);
      if (ann.dim() > 0) {
        report.transitive = false;
        Witness w;
        w.detail = "nonzero element of degree " + std::to_string(d) +
                   " annihilates g_{-1}";
        for (std::size_t i = 0; i < g.dim(); ++i)
          if (!is_zero(ann.basis_row(0)[i])) w.labels.push_back(g.names()[i]);
        report.witnesses["transitive"] = w;
      }
    }
    if (d <= 0 && report.bitransitive) {
      Subspace ann = piece_annihilator(g, piece, gp1);
      if (ann.dim() > 0) {
        report.bitransitive = false;
        Witness w;
        w.detail = "nonzero element of degree " + std::to_string(d) +
                   " annihilates g_{1}";
        for (std::size_t i = 0; i < g.dim(); ++i)
          if (!is_zero(ann.basis_row(0)[i])) w.labels.push_back(g.names()[i]);
        report.witnesses["bitransitive"] = w;
      }
    }
  }
  report.bitransitive = report.bitransitive && report.transitive;
  return report;
}

IrreducibilityVerdict graded_irreducible(const HomLieSuperalgebra& g) {
  GradingReport grading = check_grading(g);
  if (!grading.compatible)
    throw HomlieError("graded_irreducible: grading is not compatible");
  std::vector<std::size_t> gm1 = g.degree_indices(-1);
  if (gm1.empty()) throw HomlieError("graded_irreducible: g_{-1} is zero");

  std::vector<Matrix> ops;
  for (std::size_t z : g.degree_indices(0)) {
    Matrix m(gm1.size(), gm1.size());
    for (std::size_t c = 0; c < gm1.size(); ++c)
      for (std::size_t r = 0; r < gm1.size(); ++r)
        m.at(r, c) = g.c(z, gm1[c], gm1[r]);
    ops.push_back(m);
  }
  Matrix beta(gm1.size(), gm1.size());
  for (std::size_t c = 0; c < gm1.size(); ++c)
    for (std::size_t r = 0; r < gm1.size(); ++r)
      beta.at(r, c) = g.alpha().at(gm1[r], gm1[c]);
  return irreducible(ops, gm1.size(), beta);
}

namespace {

SimplicityVerdict::Status to_status(IrreducibilityVerdict::Status s) {
  switch (s) {
    case IrreducibilityVerdict::Status::Irreducible:
      return SimplicityVerdict::Status::Simple;
    case IrreducibilityVerdict::Status::Reducible:
      return SimplicityVerdict::Status::NotSimple;
    default:
      return SimplicityVerdict::Status::Inconclusive;
  }
}

// Operator set whose invariant subspaces are the homogeneous (and, when
// requested, graded) left ideals stable under alpha.
std::vector<Matrix> ideal_search_operators(const HomLieSuperalgebra& g,
                                           bool with_degree_projections) {
  std::size_t n = g.dim();
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < n; ++i) ops.push_back(g.ad(i));
  ops.push_back(g.alpha());
  ops.push_back(coordinate_projection(n, g.parity_indices(0)));
  ops.push_back(coordinate_projection(n, g.parity_indices(1)));
  if (with_degree_projections && g.has_degree())
    for (long d : present_degrees(g))
      ops.push_back(coordinate_projection(n, g.degree_indices(d)));
  return ops;
}

}  // namespace

SimplicityVerdict is_simple(const HomLieSuperalgebra& g) {
  SimplicityVerdict verdict;
  std::size_t n = g.dim();
  DerivedCenter dc = derived_and_center(g);

  if (dc.derived.dim() == 0) {
    verdict.status = SimplicityVerdict::Status::NotSimple;
    verdict.reason = "[g,g] = 0";
    if (g.has_degree()) verdict.ungraded_status = verdict.status;
    return verdict;
  }
  if (dc.center.dim() > 0 && dc.center.dim() < n &&
      classify_subspace(g, dc.center).is_hom_ideal()) {
    verdict.status = SimplicityVerdict::Status::NotSimple;
    verdict.witness = dc.center;
    verdict.reason = "the center is a nontrivial hom-ideal";
    if (g.has_degree()) {
      verdict.ungraded_status = verdict.status;
      verdict.ungraded_witness = dc.center;
    }
    return verdict;
  }

  IrreducibilityVerdict search = irreducible(ideal_search_operators(g, true), n);
  verdict.status = to_status(search.status);
  verdict.witness = search.witness;
  verdict.reason = search.certificate;

  if (g.has_degree()) {
    IrreducibilityVerdict plain =
        irreducible(ideal_search_operators(g, false), n);
    verdict.ungraded_status = to_status(plain.status);
    verdict.ungraded_witness = plain.witness;
  }
  return verdict;
}

namespace {

// Span of [basis(u), basis(v)] for two coordinate pieces.
Subspace bracket_span(const HomLieSuperalgebra& g,
                      const std::vector<std::size_t>& u,
                      const std::vector<std::size_t>& v) {
  std::vector<Vec> spans;
  for (std::size_t i : u)
    for (std::size_t j : v) spans.push_back(g.ad(i).col(j));
  return Subspace::span(g.dim(), spans);
}

Subspace coordinate_subspace(std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<Vec> rows;
  for (std::size_t i : idx) {
    Vec v(n, Rat(0));
    v[i] = 1;
    rows.push_back(v);
  }
  return Subspace::span(n, rows);
}

bool generated_by(const HomLieSuperalgebra& g, const std::vector<std::size_t>& idx) {
  std::size_t n = g.dim();
  Subspace s = coordinate_subspace(n, idx);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t r = 0; r < s.dim() && !grew; ++r)
      for (std::size_t t = 0; t < s.dim(); ++t) {
        Vec w = g.bracket(s.basis_row(r), s.basis_row(t));
        if (!s.contains(w)) {
          s = sum(s, Subspace::span(n, {w}));
          grew = true;
          break;
        }
      }
    if (!grew)
      for (std::size_t r = 0; r < s.dim(); ++r) {
        Vec w = g.alpha().apply(s.basis_row(r));
        if (!s.contains(w)) {
          s = sum(s, Subspace::span(n, {w}));
          grew = true;
          break;
        }
      }
  }
  return s.dim() == n;
}

}  // namespace

CriteriaReport structural_criteria(const HomLieSuperalgebra& g) {
  CriteriaReport report;
  std::size_t n = g.dim();
  SimplicityVerdict simple = is_simple(g);
  bool graded_ok = false;
  GradingReport grading;
  if (g.has_degree()) {
    grading = check_grading(g);
    graded_ok = grading.compatible;
  }

  if (graded_ok) report.local_generates = local_part_generates(g);

  // Simple and locally generated implies bitransitive.
  {
    CriterionCheck check;
    check.name = "simple_and_local_implies_bitransitive";
    check.applicable = graded_ok;
    if (graded_ok) {
      if (simple.status == SimplicityVerdict::Status::Inconclusive) {
        check.note = "simplicity inconclusive; implication not evaluated";
      } else {
        check.hypotheses["simple"] =
            simple.status == SimplicityVerdict::Status::Simple;
        check.hypotheses["local_part_generates"] = report.local_generates;
        TransitivityReport tr = transitivity(g);
        check.conclusions["bitransitive"] = tr.bitransitive;
        check.alarm = check.hypotheses["simple"] &&
                      check.hypotheses["local_part_generates"] &&
                      !tr.bitransitive;
      }
    }
    report.checks.push_back(check);
  }

  // Faithful irreducible action of the even part on the odd part together
  // with [g1,g1] = g0 implies simple.
  {
    CriterionCheck check;
    check.name = "faithful_irreducible_odd_action_implies_simple";
    check.applicable = true;
    std::vector<std::size_t> even = g.parity_indices(0);
    std::vector<std::size_t> odd = g.parity_indices(1);
    bool faithful = false, irred = false;
    bool irred_known = true;
    if (!even.empty() && !odd.empty()) {
      Subspace ann = piece_annihilator(g, even, odd);
      faithful = ann.dim() == 0;
      std::vector<Matrix> ops;
      for (std::size_t z : even) {
        Matrix m(odd.size(), odd.size());
        for (std::size_t c = 0; c < odd.size(); ++c)
          for (std::size_t r = 0; r < odd.size(); ++r)
            m.at(r, c) = g.c(z, odd[c], odd[r]);
        ops.push_back(m);
      }
      IrreducibilityVerdict v = irreducible(ops, odd.size());
      irred = v.status == IrreducibilityVerdict::Status::Irreducible;
      irred_known = v.status != IrreducibilityVerdict::Status::Inconclusive;
    }
    check.hypotheses["action_faithful"] = faithful;
    check.hypotheses["action_irreducible"] = irred;
    check.hypotheses["odd_brackets_span_even"] =
        !even.empty() && !odd.empty() &&
        bracket_span(g, odd, odd) == coordinate_subspace(n, even);
    check.hypotheses["even_part_nonzero"] = !even.empty();
    SimplicityVerdict::Status target =
        g.has_degree() && simple.ungraded_status ? *simple.ungraded_status
                                                 : simple.status;
    if (!irred_known || target == SimplicityVerdict::Status::Inconclusive) {
      check.note = "a search was inconclusive; implication not evaluated";
    } else {
      check.conclusions["simple"] = target == SimplicityVerdict::Status::Simple;
      check.alarm = check.hypotheses_hold() && !check.conclusions["simple"];
    }
    report.checks.push_back(check);
  }

  // Consequences of simplicity for gradings concentrated in degrees >= -1.
  {
    CriterionCheck check;
    check.name = "simple_implies_transitive_irreducible";
    check.applicable = graded_ok && grading.degree_min >= -1 &&
                       !g.degree_indices(-1).empty();
    if (check.applicable) {
      if (simple.status == SimplicityVerdict::Status::Inconclusive) {
        check.note = "simplicity inconclusive; implication not evaluated";
      } else {
        check.hypotheses["simple"] =
            simple.status == SimplicityVerdict::Status::Simple;
        TransitivityReport tr = transitivity(g);
        IrreducibilityVerdict gi = graded_irreducible(g);
        check.conclusions["transitive"] = tr.transitive;
        check.conclusions["irreducible"] =
            gi.status == IrreducibilityVerdict::Status::Irreducible;
        check.conclusions["bracket_g_m1_g_1_is_g_0"] =
            bracket_span(g, g.degree_indices(-1), g.degree_indices(1)) ==
            coordinate_subspace(n, g.degree_indices(0));
        check.conclusions["g_0_nonzero"] = !g.degree_indices(0).empty();
        check.conclusions["g_1_nonzero"] = !g.degree_indices(1).empty();
        if (check.hypotheses["simple"] &&
            gi.status == IrreducibilityVerdict::Status::Inconclusive) {
          check.note = "irreducibility inconclusive; not counted as an alarm";
          check.conclusions["irreducible"] = true;
        }
        bool all = true;
        for (const auto& [k, v] : check.conclusions) all = all && v;
        check.alarm = check.hypotheses["simple"] && !all;
      }
    }
    report.checks.push_back(check);
  }

  // Partial converse: transitive irreducible gradings with [g_n, g_1] =
  // g_{n+1} are simple.
  {
    CriterionCheck check;
    check.name = "transitive_irreducible_generated_implies_simple";
    check.applicable = graded_ok && grading.degree_min >= -1 &&
                       !g.degree_indices(-1).empty();
    if (check.applicable) {
      bool chain = true;
      for (long d = -1; d <= grading.degree_max; ++d)
        if (!g.degree_indices(d).empty() &&
            !(bracket_span(g, g.degree_indices(d), g.degree_indices(1)) ==
              coordinate_subspace(n, g.degree_indices(d + 1))))
          chain = false;
      check.hypotheses["g_1_nonzero"] = !g.degree_indices(1).empty();
      TransitivityReport tr = transitivity(g);
      check.hypotheses["transitive"] = tr.transitive;
      IrreducibilityVerdict gi = graded_irreducible(g);
      check.hypotheses["irreducible"] =
          gi.status == IrreducibilityVerdict::Status::Irreducible;
      check.hypotheses["brackets_with_g_1_fill_each_degree"] = chain;
      if (simple.status == SimplicityVerdict::Status::Inconclusive ||
          (gi.status == IrreducibilityVerdict::Status::Inconclusive)) {
        check.note = "a search was inconclusive; implication not evaluated";
      } else {
        check.conclusions["simple"] =
            simple.status == SimplicityVerdict::Status::Simple;
        check.alarm = check.hypotheses_hold() && !check.conclusions["simple"];
      }
    }
    report.checks.push_back(check);
  }

  for (const CriterionCheck& c : report.checks)
    report.any_alarm = report.any_alarm || c.alarm;
  return report;
}

bool local_part_generates(const HomLieSuperalgebra& g) {
  if (!g.has_degree()) throw HomlieError("local_part_generates: no Z-degrees");
  std::vector<std::size_t> local;
  for (long d : {-1L, 0L, 1L})
    for (std::size_t i : g.degree_indices(d)) local.push_back(i);
  return generated_by(g, local);
}

}  // namespace homlie
