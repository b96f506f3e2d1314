#include "homlie/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "homlie/report.hpp"
#include "homlie/specfile.hpp"

namespace homlie {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw HomlieError("cannot write file '" + path + "'");
  out << text;
}

void emit(const Report& report, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << report.dump(2) << "\n";
  else
    out << render_text(report);
}

Report algebra_summary(const HomLieSuperalgebra& g, const std::string& name) {
  Report r{{"name", name}, {"dim", g.dim()}, {"basis", g.names()}};
  r["parity"] = g.parity();
  if (g.has_degree()) r["degree"] = *g.degree();
  return r;
}

Vec parse_generator(const AlgebraSpec& spec, const std::string& text) {
  // Reuse the file grammar by parsing a synthetic alpha row.
  std::string probe = "[algebra]\nname = probe\nbasis =";
  for (const std::string& b : spec.basis) probe += " " + b;
  probe += "\nparity =";
  for (std::size_t i = 0; i < spec.basis.size(); ++i)
    probe += " " + spec.basis[i] + ":" + std::to_string(spec.parity[i]);
  probe += "\n[alpha]\n" + spec.basis[0] + " = " + text + "\n";
  AlgebraSpec parsed = parse_spec(probe);
  return parsed.alpha.col(0);
}

FormSign sign_of(const std::string& name) {
  if (name == "paper") return FormSign::Paper;
  return FormSign::Classical;
}

int cmd_check(const std::string& path, const std::string& format,
              std::ostream& out) {
  AlgebraSpec spec = parse_spec(read_file(path));
  HomLieSuperalgebra g = to_algebra(spec);
  AxiomReport axioms = g.check_axioms();
  Report report{{"algebra", algebra_summary(g, spec.name)},
                {"axioms", to_report(axioms)}};
  emit(report, format, out);
  return axioms.core_pass() ? 0 : 1;
}

int cmd_analyze(const std::string& path, const std::string& format,
                const std::string& sign_convention, std::ostream& out) {
  AlgebraSpec spec = parse_spec(read_file(path));
  HomLieSuperalgebra g = to_algebra(spec);
  Report report{{"algebra", algebra_summary(g, spec.name)}};
  report["axioms"] = to_report(g.check_axioms());

  DerivedCenter dc = derived_and_center(g);
  report["derived"] = to_report(g, dc.derived);
  report["center"] = to_report(g, dc.center);
  report["abelian"] = dc.derived.dim() == 0;
  report["center_classification"] = to_report(g, classify_subspace(g, dc.center));

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

  if (spec.has_form) {
    BilinearForm form{form_gram(spec, g, sign_of(sign_convention)), {}};
    report["form"] = to_report(g, check_form(g, form, sign_of(sign_convention)));
  }
  emit(report, format, out);
  return 0;
}

int cmd_prolong(const std::string& path, int max_degree, int tensor_cap,
                const std::string& signs, const std::string& output,
                const std::string& format, std::ostream& out) {
  AlgebraSpec spec = parse_spec(read_file(path));
  LocalAlgebra local = to_local(spec);
  PhiSigns mode = signs == "koszul" ? PhiSigns::Koszul : PhiSigns::Verbatim;
  ProlongResult result = prolong_minimal(local, max_degree, tensor_cap, mode);

  std::string out_path = output.empty() ? path + ".prolonged" : output;
  std::string name = spec.name.empty() ? "prolonged" : spec.name + "_prolonged";
  write_file(out_path, export_algebra(result.algebra, name));

  Report report{{"prolongation", to_report(result)},
                {"algebra", algebra_summary(result.algebra, name)},
                {"output_file", out_path}};
  emit(report, format, out);
  return result.relations_pass ? 0 : 1;
}

int cmd_extend_form(const std::string& path, const std::string& form_path,
                    long max_degree, const std::string& sign_convention,
                    const std::string& output, const std::string& format,
                    std::ostream& out) {
  AlgebraSpec spec = parse_spec(read_file(path));
  HomLieSuperalgebra g = to_algebra(spec);
  FormSign sign = sign_of(sign_convention);

  AlgebraSpec form_spec = spec;
  if (!form_path.empty()) {
    // A form file reuses the line grammar; it may reference the algebra's
    // basis, so parse it against the same [algebra] section.
    std::string text = read_file(form_path);
    if (text.find("[algebra]") == std::string::npos) {
      std::string prefix = "[algebra]\nname = form\nbasis =";
      for (const std::string& b : spec.basis) prefix += " " + b;
      prefix += "\nparity =";
      for (std::size_t i = 0; i < spec.basis.size(); ++i)
        prefix += " " + spec.basis[i] + ":" + std::to_string(spec.parity[i]);
      text = prefix + "\n" + text;
    }
    form_spec = parse_spec(text);
    if (form_spec.basis != spec.basis)
      throw HomlieError("form file basis differs from the algebra basis");
  }
  if (!form_spec.has_form)
    throw HomlieError("no [form] section found; use --form or add one");

  Matrix gram = form_gram(form_spec, g, sign);
  ExtendResult result = extend_form(g, gram, max_degree, sign);

  Report entries = Report::object();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (!is_zero(result.extended.gram.at(i, j)))
        entries[g.names()[i] + "," + g.names()[j]] =
            rat_str(result.extended.gram.at(i, j));

  const char* verdict = result.verdict == ExtendVerdict::Unique
                            ? "unique"
                            : result.verdict == ExtendVerdict::Underdetermined
                                  ? "underdetermined"
                                  : "inconsistent";
  Report report{{"verdict", verdict},
                {"extended_entries", entries},
                {"blocks", result.extended.known_blocks},
                {"check", to_report(g, result.final_check)}};
  if (!result.note.empty()) report["note"] = result.note;
  if (!output.empty()) {
    write_file(output, export_form(g, result.extended.gram));
    report["output_file"] = output;
  }
  emit(report, format, out);
  return result.verdict == ExtendVerdict::Inconsistent ? 1 : 0;
}

int cmd_quotient(const std::string& path, const std::string& ideal_text,
                 const std::string& output, const std::string& format,
                 std::ostream& out) {
  AlgebraSpec spec = parse_spec(read_file(path));
  HomLieSuperalgebra g = to_algebra(spec);

  std::vector<Vec> generators;
  std::string current;
  std::istringstream in(ideal_text);
  while (std::getline(in, current, ','))
    if (current.find_first_not_of(" \t") != std::string::npos)
      generators.push_back(parse_generator(spec, current));
  if (generators.empty()) throw HomlieError("--ideal lists no generators");

  Subspace ideal = ideal_closure(g, generators);
  HomLieSuperalgebra q = quotient(g, ideal);

  std::string out_path = output.empty() ? path + ".quotient" : output;
  std::string name = spec.name.empty() ? "quotient" : spec.name + "_quotient";
  write_file(out_path, export_algebra(q, name));

  Report report{{"ideal", to_report(g, ideal)},
                {"quotient", algebra_summary(q, name)},
                {"axioms", to_report(q.check_axioms())},
                {"output_file", out_path}};
  emit(report, format, out);
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact workbench for finite-dimensional hom-Lie superalgebras"};
  app.require_subcommand(1);

  std::string file, format = "text", signs = "verbatim";
  std::string sign_convention = "classical", form_path, output, ideal_text;
  int max_degree = 2, tensor_cap = 4;
  long form_degree = 2;

  CLI::App* check = app.add_subcommand("check", "verify the defining axioms");
  check->add_option("file", file)->required();
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* analyze =
      app.add_subcommand("analyze", "center, ideals, grading and simplicity");
  analyze->add_option("file", file)->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--sign-convention", sign_convention)
      ->check(CLI::IsMember({"classical", "paper"}));

  CLI::App* prolong = app.add_subcommand(
      "prolong", "realize the minimal graded algebra of a local part");
  prolong->add_option("file", file)->required();
  prolong->add_option("--max-degree", max_degree)->required();
  prolong->add_option("--tensor-cap", tensor_cap)->required();
  prolong->add_option("--signs", signs)
      ->check(CLI::IsMember({"verbatim", "koszul"}));
  prolong->add_option("--output", output);
  prolong->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* extend = app.add_subcommand(
      "extend-form", "extend a local invariant form degree by degree");
  extend->add_option("file", file)->required();
  extend->add_option("--form", form_path);
  extend->add_option("--max-degree", form_degree)->required();
  extend->add_option("--sign-convention", sign_convention)
      ->check(CLI::IsMember({"classical", "paper"}));
  extend->add_option("--output", output);
  extend->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* quot =
      app.add_subcommand("quotient", "quotient by the ideal closure of generators");
  quot->add_option("file", file)->required();
  quot->add_option("--ideal", ideal_text)->required();
  quot->add_option("--output", output);
  quot->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(file, format, out);
    if (analyze->parsed()) return cmd_analyze(file, format, sign_convention, out);
    if (prolong->parsed())
      return cmd_prolong(file, max_degree, tensor_cap, signs, output, format, out);
    if (extend->parsed())
      return cmd_extend_form(file, form_path, form_degree, sign_convention,
                             output, format, out);
    if (quot->parsed())
      return cmd_quotient(file, ideal_text, output, format, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const HomlieError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace homlie
