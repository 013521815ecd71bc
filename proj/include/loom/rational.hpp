#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace loom {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" text form (q > 0, gcd(p, q) = 1). Integers keep the "/1".
std::string to_string(const Rational& r);

/// Accepts "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exact conversion; throws std::domain_error when r is not an integer or
/// does not fit in a long.
long to_long(const Rational& r);

Integer lcm(const Integer& a, const Integer& b);

/// a/b in canonical form; b must be non-zero.
inline Rational ratio(long a, long b) {
  Rational r{Integer(a), Integer(b)};
  r.canonicalize();
  return r;
}

}  // namespace loom
