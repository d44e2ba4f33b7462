#pragma once

#include <gmpxx.h>

namespace triplecover {

/// Arbitrary-precision signed integer. All exact computations in the
/// library run on this type; fixed-width integers appear only as indices
/// and small combinatorial counts.
using BigInt = mpz_class;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace triplecover
