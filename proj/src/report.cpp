#include "homlie/report.hpp"

#include <sstream>

namespace homlie {

namespace {

Report witness_map(const std::map<std::string, Witness>& ws) {
  Report r = Report::object();
  for (const auto& [key, w] : ws) r[key] = to_report(w);
  return r;
}

}  // namespace

Report to_report(const Witness& w) {
  return Report{{"elements", w.labels}, {"detail", w.detail}};
}

Report to_report(const AxiomReport& r) {
  Report flags{{"parity_graded", r.parity_graded},
               {"supersymmetric", r.supersymmetric},
               {"hom_jacobi", r.hom_jacobi},
               {"multiplicative", r.multiplicative},
               {"regular", r.regular},
               {"alpha_idempotent", r.alpha_idempotent}};
  if (r.z_grading_compatible)
    flags["z_grading_compatible"] = *r.z_grading_compatible;
  return Report{{"flags", flags},
                {"witnesses", witness_map(r.witnesses)},
                {"pass", r.core_pass()}};
}

Report to_report(const HomLieSuperalgebra& g, const Subspace& s) {
  Report basis = Report::array();
  for (std::size_t i = 0; i < s.dim(); ++i)
    basis.push_back(lincomb_string(g, s.basis_row(i)));
  return Report{{"dim", s.dim()}, {"basis", basis}};
}

Report to_report(const HomLieSuperalgebra& g, const IdealVerdict& v) {
  return Report{{"subspace", to_report(g, v.subspace)},
                {"is_subalgebra", v.is_subalgebra()},
                {"is_hom_ideal", v.is_hom_ideal()},
                {"is_abelian", v.is_abelian},
                {"alpha_stable", v.alpha_stable},
                {"witnesses", witness_map(v.witnesses)}};
}

Report to_report(const GradingReport& r) {
  Report dims = Report::object();
  for (const auto& [d, n] : r.dims_per_degree) dims[std::to_string(d)] = n;
  return Report{{"compatible", r.compatible},
                {"consistent", r.consistent},
                {"degree_min", r.degree_min},
                {"degree_max", r.degree_max},
                {"dims_per_degree", dims},
                {"witnesses", witness_map(r.witnesses)}};
}

Report to_report(const TransitivityReport& r) {
  return Report{{"transitive", r.transitive},
                {"bitransitive", r.bitransitive},
                {"witnesses", witness_map(r.witnesses)}};
}

namespace {

const char* status_name(IrreducibilityVerdict::Status s) {
  switch (s) {
    case IrreducibilityVerdict::Status::Irreducible:
      return "irreducible";
    case IrreducibilityVerdict::Status::Reducible:
      return "reducible";
    default:
      return "inconclusive";
  }
}

const char* status_name(SimplicityVerdict::Status s) {
  switch (s) {
    case SimplicityVerdict::Status::Simple:
      return "simple";
    case SimplicityVerdict::Status::NotSimple:
      return "not_simple";
    default:
      return "inconclusive";
  }
}

}  // namespace

Report to_report(const HomLieSuperalgebra& g, const IrreducibilityVerdict& v,
                 const std::vector<std::string>* module_names) {
  Report r{{"status", status_name(v.status)}, {"certificate", v.certificate}};
  if (v.witness) {
    if (module_names) {
      Report basis = Report::array();
      for (std::size_t i = 0; i < v.witness->dim(); ++i) {
        Vec row = v.witness->basis_row(i);
        std::string s;
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (is_zero(row[k])) continue;
          if (!s.empty()) s += " + ";
          if (row[k] != Rat(1)) s += rat_str(row[k]) + "*";
          s += (*module_names)[k];
        }
        basis.push_back(s.empty() ? "0" : s);
      }
      r["witness"] = Report{{"dim", v.witness->dim()}, {"basis", basis}};
    } else {
      r["witness"] = to_report(g, *v.witness);
    }
  }
  if (v.witness_beta_stable) r["witness_beta_stable"] = *v.witness_beta_stable;
  return r;
}

Report to_report(const HomLieSuperalgebra& g, const SimplicityVerdict& v) {
  Report r{{"status", status_name(v.status)}, {"reason", v.reason}};
  if (v.witness) r["witness"] = to_report(g, *v.witness);
  if (v.ungraded_status) {
    r["ungraded_status"] = status_name(*v.ungraded_status);
    if (v.ungraded_witness)
      r["ungraded_witness"] = to_report(g, *v.ungraded_witness);
  }
  return r;
}

Report to_report(const CriteriaReport& r) {
  Report checks = Report::array();
  for (const CriterionCheck& c : r.checks) {
    Report entry{{"name", c.name},
                 {"applicable", c.applicable},
                 {"alarm", c.alarm}};
    Report hyp = Report::object();
    for (const auto& [k, v] : c.hypotheses) hyp[k] = v;
    Report con = Report::object();
    for (const auto& [k, v] : c.conclusions) con[k] = v;
    entry["hypotheses"] = hyp;
    entry["conclusions"] = con;
    if (!c.note.empty()) entry["note"] = c.note;
    checks.push_back(entry);
  }
  return Report{{"checks", checks},
                {"local_generates", r.local_generates},
                {"any_alarm", r.any_alarm}};
}

Report to_report(const HomLieSuperalgebra& g, const FormReport& r) {
  return Report{{"consistent", r.consistent},
                {"supersymmetric", r.supersymmetric},
                {"invariant", r.invariant},
                {"alpha_invariant", r.alpha_invariant},
                {"nondegenerate", r.nondegenerate},
                {"radical", to_report(g, r.radical)},
                {"witnesses", witness_map(r.witnesses)}};
}

Report to_report(const RepresentationReport& r) {
  return Report{{"rho_even", r.rho_even},
                {"beta_even", r.beta_even},
                {"twist_compatible", r.twist_compatible},
                {"bracket_compatible", r.bracket_compatible},
                {"pass", r.pass()},
                {"witnesses", witness_map(r.witnesses)}};
}

Report to_report(const ProlongResult& r) {
  Report dims = Report::object();
  for (const auto& [d, n] : r.dims) dims[std::to_string(d)] = n;
  Report relations{{"negative_zero", r.relations.negative_zero},
                   {"positive_negative", r.relations.positive_negative},
                   {"zero_positive", r.relations.zero_positive},
                   {"witnesses", witness_map(r.relations.witnesses)}};
  Report rep{{"dims", dims},
             {"recovery", r.recovery == Recovery::Faithful ? "faithful"
                                                           : "quotient_realized"},
             {"relations", relations},
             {"relations_pass", r.relations_pass},
             {"closed", r.closed}};
  if (!r.note.empty()) rep["note"] = r.note;
  return rep;
}

namespace {

void render(const Report& r, std::ostream& out, int depth) {
  std::string pad(2 * depth, ' ');
  if (r.is_object()) {
    for (const auto& [key, value] : r.items()) {
      if (value.is_object() || value.is_array()) {
        if (value.empty()) continue;
        out << pad << key << ":\n";
        render(value, out, depth + 1);
      } else {
        out << pad << key << " = " << value.dump() << "\n";
      }
    }
  } else if (r.is_array()) {
    for (const auto& value : r) {
      if (value.is_object() || value.is_array()) {
        out << pad << "-\n";
        render(value, out, depth + 1);
      } else {
        out << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    out << pad << r.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  render(r, out, 0);
  return out.str();
}

}  // namespace homlie
