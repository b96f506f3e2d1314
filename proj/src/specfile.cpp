#include "homlie/specfile.hpp"

#include <cctype>
#include <sstream>

namespace homlie {

namespace {

bool label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Line {
  std::size_t number = 0;
  std::string text;  // comment stripped, right-trimmed
};

struct Cursor {
  const Line& line;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < line.text.size() &&
           std::isspace(static_cast<unsigned char>(line.text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= line.text.size();
  }
  char peek() {
    skip_ws();
    return pos < line.text.size() ? line.text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line.number, pos + 1, what);
  }
  std::string take_label() {
    skip_ws();
    if (pos >= line.text.size() || !label_start(line.text[pos]))
      fail("expected a basis label");
    std::size_t start = pos;
    while (pos < line.text.size() && label_char(line.text[pos])) ++pos;
    return line.text.substr(start, pos - start);
  }
  std::string take_number() {
    skip_ws();
    std::size_t start = pos;
    if (pos < line.text.size() && (line.text[pos] == '-' || line.text[pos] == '+'))
      ++pos;
    std::size_t digits = 0;
    while (pos < line.text.size() &&
           std::isdigit(static_cast<unsigned char>(line.text[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0) fail("expected a number");
    if (pos < line.text.size() && line.text[pos] == '/') {
      ++pos;
      digits = 0;
      while (pos < line.text.size() &&
             std::isdigit(static_cast<unsigned char>(line.text[pos]))) {
        ++pos;
        ++digits;
      }
      if (digits == 0) fail("expected a denominator");
    }
    return line.text.substr(start, pos - start);
  }
};

struct LinTerm {
  Rat coeff;
  std::optional<std::string> label;
};

// term (("+" | "-") term)*, term := [scalar "*"] label | scalar
std::vector<LinTerm> parse_lincomb(const Line& line, std::size_t from) {
  Cursor cur{line, from};
  std::vector<LinTerm> terms;
  bool first = true;
  while (!cur.done()) {
    Rat sign(1);
    char c = cur.peek();
    if (c == '+' || c == '-') {
      if (c == '-') sign = -1;
      ++cur.pos;
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    cur.skip_ws();
    if (cur.pos >= line.text.size())
      cur.fail("dangling sign at end of expression");
    c = line.text[cur.pos];
    LinTerm term;
    if (label_start(c)) {
      term.coeff = sign;
      term.label = cur.take_label();
    } else {
      std::size_t numpos = cur.pos;
      std::string num = cur.take_number();
      Rat value;
      try {
        value = rat_parse(num);
      } catch (const HomlieError& e) {
        throw ParseError(line.number, numpos + 1, e.what());
      }
      cur.skip_ws();
      if (cur.pos < line.text.size() && line.text[cur.pos] == '*') {
        ++cur.pos;
        term.coeff = sign * value;
        term.label = cur.take_label();
      } else {
        term.coeff = sign * value;  // bare scalar term
      }
    }
    terms.push_back(term);
    first = false;
  }
  if (terms.empty()) cur.fail("empty expression");
  return terms;
}

struct RawFile {
  // section -> ordered (key line, key, value-start position)
  struct Entry {
    Line line;
    std::string key;
    std::size_t value_pos = 0;
  };
  std::map<std::string, std::vector<Entry>> sections;
  std::vector<std::string> section_order;
};

RawFile split_sections(const std::string& text) {
  RawFile raw;
  std::istringstream in(text);
  std::string current;
  std::string linebuf;
  std::size_t lineno = 0;
  while (std::getline(in, linebuf)) {
    ++lineno;
    std::size_t hash = linebuf.find('#');
    if (hash != std::string::npos) linebuf.erase(hash);
    while (!linebuf.empty() &&
           std::isspace(static_cast<unsigned char>(linebuf.back())))
      linebuf.pop_back();
    std::size_t first = 0;
    while (first < linebuf.size() &&
           std::isspace(static_cast<unsigned char>(linebuf[first])))
      ++first;
    if (first == linebuf.size()) continue;
    if (linebuf[first] == '[') {
      std::size_t close = linebuf.find(']', first);
      if (close == std::string::npos)
        throw ParseError(lineno, first + 1, "unterminated section header");
      std::string name = linebuf.substr(first + 1, close - first - 1);
      if (name.empty()) throw ParseError(lineno, first + 1, "empty section name");
      if (raw.sections.count(name))
        throw ParseError(lineno, first + 1, "duplicate section [" + name + "]");
      raw.sections[name] = {};
      raw.section_order.push_back(name);
      current = name;
      continue;
    }
    if (current.empty())
      throw ParseError(lineno, first + 1, "content before any section header");
    std::size_t eq = linebuf.find('=', first);
    if (eq == std::string::npos)
      throw ParseError(lineno, first + 1, "expected 'key = value'");
    std::string key = linebuf.substr(first, eq - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
      key.pop_back();
    if (key.empty()) throw ParseError(lineno, first + 1, "empty key");
    RawFile::Entry entry;
    entry.line = Line{lineno, linebuf};
    entry.key = key;
    entry.value_pos = eq + 1;
    raw.sections[current].push_back(std::move(entry));
  }
  return raw;
}

std::size_t resolve_label(const AlgebraSpec& spec, const std::string& label,
                          const Line& line, std::size_t pos) {
  for (std::size_t i = 0; i < spec.basis.size(); ++i)
    if (spec.basis[i] == label) return i;
  throw ParseError(line.number, pos + 1, "unknown basis label '" + label + "'");
}

Vec resolve_vector(const AlgebraSpec& spec, const std::vector<LinTerm>& terms,
                   const Line& line) {
  Vec v(spec.basis.size(), Rat(0));
  for (const LinTerm& t : terms) {
    if (t.label) {
      v[resolve_label(spec, *t.label, line, 0)] += t.coeff;
    } else if (!is_zero(t.coeff)) {
      throw ParseError(line.number, 1,
                       "nonzero scalar term in a vector-valued expression");
    }
  }
  return v;
}

// "label:int" maps for the parity and degree keys.
template <typename T>
std::vector<T> parse_index_map(const AlgebraSpec& spec, const RawFile::Entry& e,
                               const char* what) {
  std::vector<std::optional<T>> values(spec.basis.size());
  Cursor cur{e.line, e.value_pos};
  while (!cur.done()) {
    if (cur.peek() == ',') {
      ++cur.pos;
      continue;
    }
    std::size_t lpos = cur.pos;
    std::string label = cur.take_label();
    std::size_t idx = resolve_label(spec, label, e.line, lpos);
    cur.skip_ws();
    if (cur.peek() != ':') cur.fail(std::string("expected ':' in ") + what + " map");
    ++cur.pos;
    std::string num = cur.take_number();
    if (num.find('/') != std::string::npos)
      cur.fail(std::string(what) + " values must be integers");
    if (values[idx])
      throw ParseError(e.line.number, lpos + 1,
                       std::string("duplicate ") + what + " for '" + label + "'");
    values[idx] = static_cast<T>(std::stol(num));
  }
  std::vector<T> out;
  for (std::size_t i = 0; i < spec.basis.size(); ++i) {
    if (!values[i])
      throw ParseError(e.line.number, 1, std::string("missing ") + what +
                                             " for '" + spec.basis[i] + "'");
    out.push_back(*values[i]);
  }
  return out;
}

}  // namespace

AlgebraSpec parse_spec(const std::string& text) {
  RawFile raw = split_sections(text);
  for (const std::string& section : raw.section_order)
    if (section != "algebra" && section != "bracket" && section != "alpha" &&
        section != "form")
      throw ParseError(1, 1, "unknown section [" + section + "]");
  if (!raw.sections.count("algebra"))
    throw ParseError(1, 1, "missing [algebra] section");

  AlgebraSpec spec;
  const RawFile::Entry* parity_entry = nullptr;
  const RawFile::Entry* degree_entry = nullptr;
  std::map<std::string, bool> seen_keys;
  for (const RawFile::Entry& e : raw.sections.at("algebra")) {
    if (seen_keys.count(e.key))
      throw ParseError(e.line.number, 1, "duplicate key '" + e.key + "'");
    seen_keys[e.key] = true;
    if (e.key == "name") {
      std::size_t p = e.value_pos;
      while (p < e.line.text.size() &&
             std::isspace(static_cast<unsigned char>(e.line.text[p])))
        ++p;
      spec.name = e.line.text.substr(p);
    } else if (e.key == "basis") {
      Cursor cur{e.line, e.value_pos};
      while (!cur.done()) {
        if (cur.peek() == ',') {
          ++cur.pos;
          continue;
        }
        std::size_t lpos = cur.pos;
        std::string label = cur.take_label();
        for (const std::string& b : spec.basis)
          if (b == label)
            throw ParseError(e.line.number, lpos + 1,
                             "duplicate basis label '" + label + "'");
        spec.basis.push_back(label);
      }
      if (spec.basis.empty()) cur.fail("empty basis");
    } else if (e.key == "parity") {
      parity_entry = &e;
    } else if (e.key == "degree") {
      degree_entry = &e;
    } else {
      throw ParseError(e.line.number, 1,
                       "unknown key '" + e.key + "' in [algebra]");
    }
  }
  if (spec.basis.empty()) throw ParseError(1, 1, "missing basis declaration");
  if (!parity_entry) throw ParseError(1, 1, "missing parity declaration");
  spec.parity = parse_index_map<int>(spec, *parity_entry, "parity");
  for (int p : spec.parity)
    if (p != 0 && p != 1)
      throw ParseError(parity_entry->line.number, 1, "parity must be 0 or 1");
  if (degree_entry)
    spec.degree = parse_index_map<long>(spec, *degree_entry, "degree");

  std::size_t n = spec.basis.size();
  spec.alpha = Matrix(n, n);

  if (raw.sections.count("bracket")) {
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    for (const RawFile::Entry& e : raw.sections.at("bracket")) {
      std::size_t comma = e.key.find(',');
      if (comma == std::string::npos)
        throw ParseError(e.line.number, 1,
                         "bracket keys look like 'ei,ej'");
      std::string a = e.key.substr(0, comma), b = e.key.substr(comma + 1);
      while (!a.empty() && std::isspace(static_cast<unsigned char>(a.back())))
        a.pop_back();
      std::size_t bf = 0;
      while (bf < b.size() && std::isspace(static_cast<unsigned char>(b[bf])))
        ++bf;
      b = b.substr(bf);
      std::size_t i = resolve_label(spec, a, e.line, 0);
      std::size_t j = resolve_label(spec, b, e.line, 0);
      if (i > j)
        throw ParseError(e.line.number, 1,
                         "bracket keys must be ordered by the basis (i <= j)");
      if (seen.count({i, j}))
        throw ParseError(e.line.number, 1,
                         "duplicate bracket entry '" + e.key + "'");
      seen[{i, j}] = true;
      Vec value = resolve_vector(spec, parse_lincomb(e.line, e.value_pos), e.line);
      spec.brackets.push_back({i, j, value});
    }
  }

  if (raw.sections.count("alpha")) {
    std::map<std::size_t, bool> seen;
    for (const RawFile::Entry& e : raw.sections.at("alpha")) {
      std::size_t j = resolve_label(spec, e.key, e.line, 0);
      if (seen.count(j))
        throw ParseError(e.line.number, 1,
                         "duplicate alpha row for '" + e.key + "'");
      seen[j] = true;
      Vec col = resolve_vector(spec, parse_lincomb(e.line, e.value_pos), e.line);
      spec.alpha.set_col(j, col);
    }
  }

  if (raw.sections.count("form")) {
    spec.has_form = true;
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    for (const RawFile::Entry& e : raw.sections.at("form")) {
      std::size_t comma = e.key.find(',');
      if (comma == std::string::npos)
        throw ParseError(e.line.number, 1, "form keys look like 'ei,ej'");
      std::string a = e.key.substr(0, comma), b = e.key.substr(comma + 1);
      while (!a.empty() && std::isspace(static_cast<unsigned char>(a.back())))
        a.pop_back();
      std::size_t bf = 0;
      while (bf < b.size() && std::isspace(static_cast<unsigned char>(b[bf])))
        ++bf;
      b = b.substr(bf);
      std::size_t i = resolve_label(spec, a, e.line, 0);
      std::size_t j = resolve_label(spec, b, e.line, 0);
      if (seen.count({i, j}))
        throw ParseError(e.line.number, 1,
                         "duplicate form entry '" + e.key + "'");
      seen[{i, j}] = true;
      Cursor cur{e.line, e.value_pos};
      std::string num = cur.take_number();
      if (!cur.done()) cur.fail("form values are single scalars");
      Rat value;
      try {
        value = rat_parse(num);
      } catch (const HomlieError& err) {
        throw ParseError(e.line.number, e.value_pos + 1, err.what());
      }
      spec.form_entries.emplace_back(i, j, value);
    }
  }
  return spec;
}

HomLieSuperalgebra to_algebra(const AlgebraSpec& spec) {
  return HomLieSuperalgebra::from_table(spec.basis, spec.parity, spec.degree,
                                        spec.brackets, spec.alpha);
}

LocalAlgebra to_local(const AlgebraSpec& spec) {
  if (!spec.degree)
    throw HomlieError("a local algebra needs a degree map into {-1, 0, 1}");
  std::vector<int> degree;
  for (long d : *spec.degree) {
    if (d < -1 || d > 1)
      throw HomlieError("local algebra degrees must lie in {-1, 0, 1}");
    degree.push_back(static_cast<int>(d));
  }
  return LocalAlgebra::from_table(spec.basis, spec.parity, degree,
                                  spec.brackets, spec.alpha);
}

Matrix form_gram(const AlgebraSpec& spec, const HomLieSuperalgebra& g,
                 FormSign sign) {
  std::size_t n = g.dim();
  Matrix gram(n, n);
  std::map<std::pair<std::size_t, std::size_t>, bool> given;
  for (const auto& [i, j, v] : spec.form_entries) {
    gram.at(i, j) = v;
    given[{i, j}] = true;
  }
  for (const auto& [i, j, v] : spec.form_entries) {
    if (given.count({j, i})) continue;
    int s = koszul_sign(g.parity()[i], g.parity()[j]);
    if (sign == FormSign::Paper) s = -s;
    gram.at(j, i) = Rat(s) * v;
  }
  return gram;
}

std::string export_algebra(const HomLieSuperalgebra& g, const std::string& name) {
  std::ostringstream out;
  out << "[algebra]\n";
  out << "name = " << (name.empty() ? "algebra" : name) << "\n";
  out << "basis =";
  for (const std::string& b : g.names()) out << " " << b;
  out << "\nparity =";
  for (std::size_t i = 0; i < g.dim(); ++i)
    out << " " << g.names()[i] << ":" << g.parity()[i];
  out << "\n";
  if (g.has_degree()) {
    out << "degree =";
    for (std::size_t i = 0; i < g.dim(); ++i)
      out << " " << g.names()[i] << ":" << (*g.degree())[i];
    out << "\n";
  }
  out << "\n[bracket]\n";
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      Vec v = g.ad(i).col(j);
      if (vec_is_zero(v)) continue;
      out << g.names()[i] << "," << g.names()[j] << " = " << lincomb_string(g, v)
          << "\n";
    }
  out << "\n[alpha]\n";
  for (std::size_t j = 0; j < g.dim(); ++j)
    out << g.names()[j] << " = " << lincomb_string(g, g.alpha().col(j)) << "\n";
  return out.str();
}

std::string export_form(const HomLieSuperalgebra& g, const Matrix& gram) {
  std::ostringstream out;
  out << "[form]\n";
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (!is_zero(gram.at(i, j)))
        out << g.names()[i] << "," << g.names()[j] << " = "
            << rat_str(gram.at(i, j)) << "\n";
  return out.str();
}

}  // namespace homlie
