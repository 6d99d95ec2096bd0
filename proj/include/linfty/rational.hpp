#pragma once

#include <gmpxx.h>

#include <string>

#include "linfty/errors.hpp"

namespace linfty {

/// Exact rational scalar. GMP keeps values in canonical reduced form with a
/// positive denominator; no operation ever rounds.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_zero(const Rat& r) { return sgn(r) == 0; }

/// Canonical form "p/q" with q >= 1, e.g. "-3/2", "0/1", "5/1".
std::string rat_str(const Rat& r);

/// Accepts "p" or "p/q" with optional sign; q must be nonzero. The result is
/// canonicalized. Throws ParseError on anything else.
Rat rat_parse(const std::string& text);

/// base^exp for exp of either sign; base must be nonzero when exp < 0.
Rat rat_pow(const Rat& base, int exp);

/// 1/n! computed fresh (no shared state, safe inside parallel loops).
Rat inv_factorial(int n);

inline int parity(int degree) { return ((degree % 2) + 2) % 2; }

}  // namespace linfty
