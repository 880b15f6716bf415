#include "eulerian/power_series.hpp"

#include <stdexcept>

namespace eulerian {

USeries USeries::constant(const Poly& p, std::size_t order) {
    USeries s(order);
    s.coeffs_[0] = p;
    return s;
}

bool USeries::is_zero() const {
    for (const Poly& p : coeffs_) {
        if (!p.is_zero()) return false;
    }
    return true;
}

USeries USeries::operator-() const {
    USeries n(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        n.coeffs_[i] = -coeffs_[i];
    }
    return n;
}

USeries& USeries::operator+=(const USeries& rhs) {
    if (order() != rhs.order()) {
        throw std::invalid_argument("USeries: order mismatch in addition");
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

USeries& USeries::operator-=(const USeries& rhs) {
    if (order() != rhs.order()) {
        throw std::invalid_argument("USeries: order mismatch in subtraction");
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

USeries series_mul(const USeries& s1, const USeries& s2) {
    if (s1.order() != s2.order()) {
        throw std::invalid_argument("series_mul: order mismatch");
    }
    USeries prod(s1.order());
    for (std::size_t n = 0; n <= prod.order(); ++n) {
        Poly sum;
        for (std::size_t i = 0; i <= n; ++i) {
            sum += s1.coeff(i) * s2.coeff(n - i);
        }
        prod.set_coeff(n, std::move(sum));
    }
    return prod;
}

USeries series_exp_linear(const Poly& c, std::size_t order) {
    USeries s(order);
    Poly term(Rat(1), c.var());
    s.set_coeff(0, term);
    for (std::size_t n = 1; n <= order; ++n) {
        term *= c;
        term *= Rat(Int(1), Int(static_cast<long>(n)));
        s.set_coeff(n, term);
    }
    return s;
}

}  // namespace eulerian
