#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace eulerian {

/// Arbitrary-precision signed integer. All integer quantities in the library
/// (triangle entries, binomials, factorials) use this type.
using Int = mpz_class;

/// C(n, k) by the multiplicative formula over exact integers.
/// Returns 0 for k < 0 or k > n. n < 0 is a contract violation.
Int binomial(long n, long k);

/// n! as an exact integer.
Int factorial(unsigned long n);

/// base^exp over exact integers, with 0^0 = 1.
Int int_pow(const Int& base, unsigned long exp);

}  // namespace eulerian
