#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace invqm {

// Arbitrary precision integers and rationals. mpq_class keeps values in
// canonical form (den > 0, gcd(|num|, den) = 1) after every arithmetic op.
using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rat parse_rat(std::string_view text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q" with q > 0.
std::string to_string(Rat const& r);
std::string to_string(Int const& z);

inline bool is_integral(Rat const& r) { return r.get_den() == 1; }

}  // namespace invqm
