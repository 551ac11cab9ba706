#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gecliff {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical decimal text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p" or "p/q" (optional sign). Throws InvalidArgument.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Nearest integer, ties (fractional part exactly 1/2) toward +infinity.
Integer round_half_up(const Rational& q);

// Largest r >= 0 with r*r <= q; q must be >= 0.
Integer isqrt_floor(const Rational& q);

}  // namespace gecliff
