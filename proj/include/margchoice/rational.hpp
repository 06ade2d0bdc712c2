#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace margchoice {

/// Exact probability value. Every verdict in the library is computed on these.
using Rational = mpq_class;

/// Parses "3", "-2", "0.15", "1.5e-2", or "p/q" into a canonical rational.
/// Throws Error{ErrorCode::Parse} on malformed input.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& q);

/// Continued-fraction approximation of x with denominator at most max_den.
Rational nearest_rational(double x, long max_den);

}  // namespace margchoice
