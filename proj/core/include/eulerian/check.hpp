#pragma once

#include <string>

#include "eulerian/polynomial.hpp"
#include "eulerian/power_series.hpp"

namespace eulerian {

/// Outcome of an identity check: a boolean plus, on mismatch, the location
/// of the first differing coefficient and both values in canonical form.
/// Checks report instead of asserting so the verify suite can aggregate.
struct CheckResult {
    bool ok = true;
    std::string where;  // e.g. "t^3" or "u^2 t^1"; empty on pass
    std::string lhs;
    std::string rhs;

    explicit operator bool() const noexcept { return ok; }

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string where, std::string lhs, std::string rhs) {
        return {false, std::move(where), std::move(lhs), std::move(rhs)};
    }
};

/// Coefficientwise comparison, reporting the lowest differing power.
CheckResult compare_polys(const Poly& lhs, const Poly& rhs);

/// Comparison restricted to powers 0..window-1 (both inclusive bounds
/// clipped to the stored coefficients; absent coefficients read as zero).
CheckResult compare_polys_window(const Poly& lhs, const Poly& rhs, std::size_t window);

/// u-coefficientwise comparison of equal-order series.
CheckResult compare_series(const USeries& lhs, const USeries& rhs);

/// Scalar comparison with a caller-supplied location tag.
CheckResult compare_rats(const Rat& lhs, const Rat& rhs, const std::string& where);

}  // namespace eulerian
