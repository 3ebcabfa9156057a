#pragma once

#include <gmpxx.h>

#include <string>

namespace maxmatch {

// Counts of maximal matchings grow exponentially with the order of the
// tree, so everything is counted in arbitrary-precision naturals.
using BigNat = mpz_class;

inline std::string to_decimal(const BigNat& x) { return x.get_str(); }

inline BigNat ceil_half(long long n) { return BigNat(static_cast<long>((n + 1) / 2)); }

}  // namespace maxmatch
