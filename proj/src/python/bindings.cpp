#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homlie/report.hpp"
#include "homlie/specfile.hpp"

namespace py = pybind11;
using namespace homlie;

namespace {

py::object json_to_py(const Report& j) {
  if (j.is_null()) return py::none();
  if (j.is_boolean()) return py::bool_(j.get<bool>());
  if (j.is_number_integer()) return py::int_(j.get<long long>());
  if (j.is_number_unsigned()) return py::int_(j.get<unsigned long long>());
  if (j.is_number_float()) return py::float_(j.get<double>());
  if (j.is_string()) return py::str(j.get<std::string>());
  if (j.is_array()) {
    py::list out;
    for (const auto& item : j) out.append(json_to_py(item));
    return out;
  }
  py::dict out;
  for (const auto& [key, value] : j.items())
    out[py::str(key)] = json_to_py(value);
  return out;
}

FormSign sign_of(const std::string& name) {
  if (name == "paper") return FormSign::Paper;
  if (name != "classical")
    throw HomlieError("sign convention must be 'classical' or 'paper'");
  return FormSign::Classical;
}

PhiSigns phi_signs_of(const std::string& name) {
  if (name == "koszul") return PhiSigns::Koszul;
  if (name != "verbatim")
    throw HomlieError("signs must be 'verbatim' or 'koszul'");
  return PhiSigns::Verbatim;
}

py::dict check(const std::string& text) {
  HomLieSuperalgebra g = to_algebra(parse_spec(text));
  return json_to_py(to_report(g.check_axioms()));
}

py::dict analyze(const std::string& text) {
  AlgebraSpec spec = parse_spec(text);
  HomLieSuperalgebra g = to_algebra(spec);
  Report report;
  report["axioms"] = to_report(g.check_axioms());
  DerivedCenter dc = derived_and_center(g);
  report["derived"] = to_report(g, dc.derived);
  report["center"] = to_report(g, dc.center);
  report["abelian"] = dc.derived.dim() == 0;
  if (g.has_degree()) {
    GradingReport grading = check_grading(g);
    report["grading"] = to_report(grading);
    if (grading.compatible) {
      report["transitivity"] = to_report(transitivity(g));
      if (!g.degree_indices(-1).empty())
        report["graded_irreducible"] = to_report(g, graded_irreducible(g));
    }
  }
  report["simplicity"] = to_report(g, is_simple(g));
  report["criteria"] = to_report(structural_criteria(g));
  return json_to_py(report);
}

std::string bracket_of(const std::string& text, const std::string& x,
                       const std::string& y) {
  AlgebraSpec spec = parse_spec(text);
  HomLieSuperalgebra g = to_algebra(spec);
  auto parse_elem = [&](const std::string& s) {
    std::string probe = "[algebra]\nname = probe\nbasis =";
    for (const std::string& b : spec.basis) probe += " " + b;
    probe += "\nparity =";
    for (std::size_t i = 0; i < spec.basis.size(); ++i)
      probe += " " + spec.basis[i] + ":" + std::to_string(spec.parity[i]);
    probe += "\n[alpha]\n" + spec.basis[0] + " = " + s + "\n";
    return parse_spec(probe).alpha.col(0);
  };
  return lincomb_string(g, g.bracket(parse_elem(x), parse_elem(y)));
}

py::dict prolong(const std::string& text, int max_degree, int tensor_cap,
                 const std::string& signs) {
  LocalAlgebra local = to_local(parse_spec(text));
  ProlongResult result =
      prolong_minimal(local, max_degree, tensor_cap, phi_signs_of(signs));
  Report report{{"prolongation", to_report(result)}};
  report["algebra_file"] = export_algebra(result.algebra, "prolonged");
  report["recovery"] = result.recovery == Recovery::Faithful
                           ? "faithful"
                           : "quotient_realized";
  return json_to_py(report);
}

py::dict extend(const std::string& text, long max_degree,
                const std::string& convention) {
  AlgebraSpec spec = parse_spec(text);
  HomLieSuperalgebra g = to_algebra(spec);
  if (!spec.has_form) throw HomlieError("the file has no [form] section");
  FormSign sign = sign_of(convention);
  ExtendResult result =
      extend_form(g, form_gram(spec, g, sign), max_degree, sign);
  const char* verdict = result.verdict == ExtendVerdict::Unique
                            ? "unique"
                            : result.verdict == ExtendVerdict::Underdetermined
                                  ? "underdetermined"
                                  : "inconsistent";
  Report report{{"verdict", verdict},
                {"check", to_report(g, result.final_check)},
                {"form_file", export_form(g, result.extended.gram)}};
  if (!result.note.empty()) report["note"] = result.note;
  return json_to_py(report);
}

py::dict quotient_by(const std::string& text, const std::string& ideal) {
  AlgebraSpec spec = parse_spec(text);
  HomLieSuperalgebra g = to_algebra(spec);
  std::vector<Vec> generators;
  std::string current;
  std::istringstream in(ideal);
  while (std::getline(in, current, ',')) {
    std::string probe = "[algebra]\nname = probe\nbasis =";
    for (const std::string& b : spec.basis) probe += " " + b;
    probe += "\nparity =";
    for (std::size_t i = 0; i < spec.basis.size(); ++i)
      probe += " " + spec.basis[i] + ":" + std::to_string(spec.parity[i]);
    probe += "\n[alpha]\n" + spec.basis[0] + " = " + current + "\n";
    generators.push_back(parse_spec(probe).alpha.col(0));
  }
  Subspace closed = ideal_closure(g, generators);
  HomLieSuperalgebra q = quotient(g, closed);
  Report report{{"ideal", to_report(g, closed)},
                {"quotient_dim", q.dim()},
                {"algebra_file", export_algebra(q, "quotient")}};
  return json_to_py(report);
}

}  // namespace

PYBIND11_MODULE(_homlie, m) {
  m.doc() = "exact workbench for finite-dimensional hom-Lie superalgebras";
  py::register_exception<HomlieError>(m, "HomlieError");

  m.def("check", &check, py::arg("text"),
        "Axiom report for an algebra file given as text.");
  m.def("analyze", &analyze, py::arg("text"),
        "Center, derived algebra, grading and simplicity diagnostics.");
  m.def("bracket", &bracket_of, py::arg("text"), py::arg("x"), py::arg("y"),
        "Bracket of two elements written as linear combinations.");
  m.def("prolong", &prolong, py::arg("text"), py::arg("max_degree"),
        py::arg("tensor_cap"), py::arg("signs") = "verbatim",
        "Minimal graded realization of a local algebra file.");
  m.def("extend_form", &extend, py::arg("text"), py::arg("max_degree"),
        py::arg("sign_convention") = "classical",
        "Degree-by-degree extension of the [form] section.");
  m.def("quotient", &quotient_by, py::arg("text"), py::arg("ideal"),
        "Quotient by the hom-ideal closure of comma-separated generators.");
}
