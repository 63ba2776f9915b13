#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mrdi::algebra {

// Arbitrary precision integers and rationals. GMP keeps both canonical:
// no leading zero limbs, and mpq values are reduced with a positive
// denominator once canonicalize() has run.
using BigInt = mpz_class;
using BigRational = mpq_class;

// Strict decimal parsing: `-?(0|[1-9][0-9]*)`. Throws ValidationError.
BigInt parse_integer(std::string_view text);

// "n" or "n/d" with d > 0. The result is canonicalized.
BigRational parse_rational(std::string_view text);

std::string to_text(const BigInt& value);
// "n" when the denominator is 1, "n/d" otherwise.
std::string to_text(const BigRational& value);

BigRational make_rational(const BigInt& numerator, const BigInt& denominator);

}  // namespace mrdi::algebra
