#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qpc {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);  // throws PreconditionError

int sign(const Rational& q);
// p/q in lowest terms; throws DivisionError when q == 0.
Rational ratio(long p, long q);

}  // namespace qpc
