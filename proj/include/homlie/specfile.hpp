#pragma once

#include "homlie/forms.hpp"
#include "homlie/prolong.hpp"

namespace homlie {

/// Parse error with the 1-based source location baked into the message.
class ParseError : public HomlieError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : HomlieError("line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Parsed algebra description: sections [algebra], [bracket], [alpha] and
/// optionally [form], resolved against the declared basis. # starts a
/// comment; omitted brackets, alpha rows and form entries are zero.
struct AlgebraSpec {
  std::string name;
  std::vector<std::string> basis;
  std::vector<int> parity;
  std::optional<std::vector<long>> degree;
  std::vector<BracketEntry> brackets;
  Matrix alpha;
  /// Entries of the [form] section exactly as written (i, j, value).
  std::vector<std::tuple<std::size_t, std::size_t, Rat>> form_entries;
  bool has_form = false;
};

AlgebraSpec parse_spec(const std::string& text);

HomLieSuperalgebra to_algebra(const AlgebraSpec& spec);

/// Reads the spec as a local algebra; requires a degree map into {-1,0,1}.
LocalAlgebra to_local(const AlgebraSpec& spec);

/// Gram matrix from the [form] entries; transposed positions not written
/// explicitly are mirrored with the supersymmetry sign of the convention.
Matrix form_gram(const AlgebraSpec& spec, const HomLieSuperalgebra& g,
                 FormSign sign);

/// Canonical text rendering, reparsable by parse_spec: brackets only for
/// i <= j, scalars as "p" or "p/q".
std::string export_algebra(const HomLieSuperalgebra& g, const std::string& name);

std::string export_form(const HomLieSuperalgebra& g, const Matrix& gram);

}  // namespace homlie
