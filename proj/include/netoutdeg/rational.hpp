#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace netoutdeg {

/// Arbitrary-precision rational, always kept in canonical reduced form.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws InvalidArgument on den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "p/q" with q > 1, or a plain integer string.
std::string to_string(const Rational& q);

/// Accepts "n", "-n", "p/q". Throws InvalidArgument on malformed input.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

}  // namespace netoutdeg
