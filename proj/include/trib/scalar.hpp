#pragma once

#include <gmpxx.h>

#include <string>

namespace trib {

// All identity and sum arithmetic is exact; no floating point anywhere on
// these paths. GMP supplies the arbitrary-precision scalars.
using exact_int = mpz_class;
using exact_rat = mpq_class;

// x^e for unsigned e.
exact_int pow_int(const exact_int& base, unsigned long e);

// x^e for any integer e; requires x != 0 when e < 0.
exact_rat pow_rat(const exact_rat& base, long e);

// Decimal rendering; rationals print as "p/q", with "/1" elided.
std::string to_string(const exact_int& v);
std::string to_string(const exact_rat& v);

// Parse decimal integer / "p/q" rational. Throws std::invalid_argument.
exact_int parse_int(const std::string& s);
exact_rat parse_rat(const std::string& s);

}  // namespace trib
