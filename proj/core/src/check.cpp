#include "eulerian/check.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulerian {

namespace {

std::string power_tag(char var, std::size_t i) {
    return std::string(1, var) + "^" + std::to_string(i);
}

}  // namespace

CheckResult compare_polys(const Poly& lhs, const Poly& rhs) {
    const std::size_t n = std::max(lhs.coeffs().size(), rhs.coeffs().size());
    for (std::size_t i = 0; i < n; ++i) {
        if (lhs.coeff(i) != rhs.coeff(i)) {
            return CheckResult::fail(power_tag(static_cast<char>(lhs.var()), i),
                                     lhs.coeff(i).str(), rhs.coeff(i).str());
        }
    }
    return CheckResult::pass();
}

CheckResult compare_polys_window(const Poly& lhs, const Poly& rhs, std::size_t window) {
    for (std::size_t i = 0; i < window; ++i) {
        if (lhs.coeff(i) != rhs.coeff(i)) {
            return CheckResult::fail(power_tag(static_cast<char>(lhs.var()), i),
                                     lhs.coeff(i).str(), rhs.coeff(i).str());
        }
    }
    return CheckResult::pass();
}

CheckResult compare_series(const USeries& lhs, const USeries& rhs) {
    if (lhs.order() != rhs.order()) {
        throw std::invalid_argument("compare_series: order mismatch");
    }
    for (std::size_t n = 0; n <= lhs.order(); ++n) {
        const Poly& lp = lhs.coeff(n);
        const Poly& rp = rhs.coeff(n);
        if (lp == rp) continue;
        const std::size_t m = std::max(lp.coeffs().size(), rp.coeffs().size());
        for (std::size_t i = 0; i < m; ++i) {
            if (lp.coeff(i) != rp.coeff(i)) {
                return CheckResult::fail(
                    "u^" + std::to_string(n) + " " + power_tag(static_cast<char>(lp.var()), i),
                    lp.coeff(i).str(), rp.coeff(i).str());
            }
        }
    }
    return CheckResult::pass();
}

CheckResult compare_rats(const Rat& lhs, const Rat& rhs, const std::string& where) {
    if (lhs == rhs) {
        return CheckResult::pass();
    }
    return CheckResult::fail(where, lhs.str(), rhs.str());
}

}  // namespace eulerian
