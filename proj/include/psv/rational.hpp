#pragma once

#include <gmpxx.h>

#include <string>

namespace psv {

// All coefficients are exact rationals with arbitrary-precision integers.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// True when r is an integer (denominator 1 after canonicalization).
inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline long rat_to_long(const Rat& r) { return mpz_get_si(r.get_num_mpz_t()); }

}  // namespace psv
