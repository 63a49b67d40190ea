#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace supertorus {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "p/q" text; integers print without a denominator.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace supertorus
