#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace xoph {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Parses "p" or "p/q" (optional sign, decimal digits). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rat& r);

BigInt binomial(unsigned long n, unsigned long k);

}  // namespace xoph
