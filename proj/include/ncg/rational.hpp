#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ncg {

// Exact rational scalar. All arithmetic in the library is exact; no
// floating point is accepted anywhere.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p/q" or a plain integer "p". Throws std::invalid_argument on
// anything else (in particular decimal notation is rejected).
Rat rat_parse(const std::string& text);

// Canonical serialization, always "p/q" (so integers print as "3/1").
std::string rat_str(const Rat& r);

// r^e for e >= 0.
Rat rat_pow(const Rat& r, unsigned long e);

// n! as an exact integer.
Int factorial(unsigned n);

}  // namespace ncg
