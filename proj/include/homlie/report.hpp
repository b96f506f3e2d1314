#pragma once

#include <json.hpp>

#include "homlie/forms.hpp"
#include "homlie/grading.hpp"
#include "homlie/prolong.hpp"
#include "homlie/repth.hpp"

namespace homlie {

/// Structured result tree. nlohmann::json keeps object keys sorted, so the
/// serialized form is byte-stable for identical inputs.
using Report = nlohmann::json;

Report to_report(const Witness& w);
Report to_report(const AxiomReport& r);
Report to_report(const HomLieSuperalgebra& g, const Subspace& s);
Report to_report(const HomLieSuperalgebra& g, const IdealVerdict& v);
Report to_report(const GradingReport& r);
Report to_report(const TransitivityReport& r);
Report to_report(const HomLieSuperalgebra& g, const IrreducibilityVerdict& v,
                 const std::vector<std::string>* module_names = nullptr);
Report to_report(const HomLieSuperalgebra& g, const SimplicityVerdict& v);
Report to_report(const CriteriaReport& r);
Report to_report(const HomLieSuperalgebra& g, const FormReport& r);
Report to_report(const RepresentationReport& r);
Report to_report(const ProlongResult& r);

/// Lossy human rendering of a report tree (tests pin the JSON form).
std::string render_text(const Report& r);

}  // namespace homlie
