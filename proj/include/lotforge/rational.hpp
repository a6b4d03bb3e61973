#pragma once

// Exact rational scalar used by every numeric path in the solver.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lotforge {

using Rational = mpq_class;

/// Parses "p/q" or an integer "p". Throws std::invalid_argument on anything else
/// (including a zero denominator). The result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; integers keep the "/1" suffix so files stay uniform.
std::string to_string(const Rational& q);

/// Decimal rendering with `digits` significant digits (default 12).
std::string to_decimal(const Rational& q, int digits = 12);

/// p/q in canonical form. mpq_class(p, q) alone does not reduce, and
/// comparisons on unreduced values are wrong.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Rational sum(const std::vector<Rational>& v) {
  Rational total = 0;
  for (const auto& q : v) total += q;
  return total;
}

}  // namespace lotforge
