#pragma once

#include "eulerian/rational.hpp"

namespace eulerian {

/// Arithmetic progression a, a+d, a+2d, ... given by its first term and
/// common difference. Both may be zero, negative, or non-integer.
struct Progression {
    Rat a;
    Rat d;

    /// i-th term (1-based): a + (i-1)d.
    Rat term(long i) const { return a + Rat(i - 1) * d; }

    friend bool operator==(const Progression&, const Progression&) = default;
};

}  // namespace eulerian
