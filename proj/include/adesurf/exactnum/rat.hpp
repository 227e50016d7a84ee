#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace adesurf {

using Integer = mpz_class;

// mpq_class keeps numerator and denominator coprime with a positive
// denominator after every arithmetic operation; zero is 0/1.
using Rat = mpq_class;

/// Parses "a" or "a/b" (optional leading sign) into canonical form.
Rat parse_rat(std::string_view text);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rat& r);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_one(const Rat& r) { return r == 1; }

}  // namespace adesurf
