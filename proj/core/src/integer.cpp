#include "eulerian/integer.hpp"

namespace eulerian {

Int binomial(long n, long k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be nonnegative, got " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    // Symmetry keeps the loop short.
    if (k > n - k) {
        k = n - k;
    }
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        // result * (n - k + i) is always divisible by i at this point.
        result *= Int(n - k + i);
        result /= Int(i);
    }
    return result;
}

Int factorial(unsigned long n) {
    Int result = 1;
    for (unsigned long i = 2; i <= n; ++i) {
        result *= Int(i);
    }
    return result;
}

Int int_pow(const Int& base, unsigned long exp) {
    Int result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

}  // namespace eulerian
