#pragma once

#include <gmpxx.h>

#include <string>

namespace csfkit {

// Exact rational coefficient type. All arithmetic in this library is exact;
// nothing is ever rounded through floating point.
using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize on its own.
inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline mpz_class factorial(unsigned n) {
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return z;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace csfkit
