#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace homlie {

/// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
using Rat = mpq_class;

/// Coefficient vector over a fixed basis.
using Vec = std::vector<Rat>;

/// Raised on malformed input (parse errors, dimension mismatches, violated
/// preconditions). Distinct from std::logic_error, which signals internal
/// invariant breakage.
class HomlieError : public std::runtime_error {
 public:
  explicit HomlieError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "p", "-p" or "p/q" (decimal). Rejects zero denominators.
Rat rat_parse(const std::string& text);

/// Renders canonically as "p" or "p/q".
std::string rat_str(const Rat& value);

inline bool is_zero(const Rat& value) { return sgn(value) == 0; }

Vec vec_zero(std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);
bool vec_is_zero(const Vec& a);

}  // namespace homlie
