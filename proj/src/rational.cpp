#include "homlie/rational.hpp"

#include <cctype>

namespace homlie {

Rat rat_parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw HomlieError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  // mpq_class(str) accepts "p" and "p/q" but neither validates q != 0 nor
  // canonicalizes, so both are handled here.
  std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    if (s.find('/', slash + 1) != std::string::npos)
      throw HomlieError("bad rational literal '" + text + "'");
    if (slash + 1 >= s.size())
      throw HomlieError("bad rational literal '" + text + "'");
  }
  Rat value;
  try {
    value = Rat(s);
  } catch (const std::invalid_argument&) {
    throw HomlieError("bad rational literal '" + text + "'");
  }
  if (sgn(value.get_den()) == 0)
    throw HomlieError("zero denominator in '" + text + "'");
  value.canonicalize();
  return value;
}

std::string rat_str(const Rat& value) { return value.get_str(); }

Vec vec_zero(std::size_t n) { return Vec(n, Rat(0)); }

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw HomlieError("vector size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw HomlieError("vector size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scale(const Rat& c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool vec_is_zero(const Vec& a) {
  for (const Rat& x : a)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace homlie
