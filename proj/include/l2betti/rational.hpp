#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace l2betti {

// Exact rational scalar used everywhere. Tolerances in this project are
// identically zero; nothing is ever rounded.
using Rational = mpq_class;

// p/q in lowest terms. q must be nonzero.
Rational make_rational(long p, long q = 1);

// Canonical form "p/q" with q > 0 and gcd(p,q) = 1, e.g. "0/1", "-3/2".
std::string rational_str(const Rational& r);

// Accepts "p" or "p/q" with optional sign on either part. Throws ParseError.
Rational rational_from_string(std::string_view text);

} // namespace l2betti
