#pragma once

#include <cstddef>
#include <vector>

#include "eulerian/polynomial.hpp"

namespace eulerian {

/// Truncated formal power series in u whose coefficients are polynomials
/// (in t or q). A series of order N holds exactly N+1 coefficient slots;
/// arithmetic discards every term of u-degree above the order.
class USeries {
public:
    explicit USeries(std::size_t order) : coeffs_(order + 1) {}

    /// Series whose u^0 coefficient is the given polynomial.
    static USeries constant(const Poly& p, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }

    const Poly& coeff(std::size_t n) const { return coeffs_.at(n); }
    void set_coeff(std::size_t n, Poly p) { coeffs_.at(n) = std::move(p); }

    bool is_zero() const;

    USeries operator-() const;
    USeries& operator+=(const USeries& rhs);
    USeries& operator-=(const USeries& rhs);

    friend USeries operator+(USeries lhs, const USeries& rhs) { return lhs += rhs; }
    friend USeries operator-(USeries lhs, const USeries& rhs) { return lhs -= rhs; }

    friend bool operator==(const USeries& lhs, const USeries& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }

private:
    std::vector<Poly> coeffs_;
};

/// Cauchy product truncated at the common order.
/// Throws std::invalid_argument when the orders differ.
USeries series_mul(const USeries& s1, const USeries& s2);

/// exp(c*u) truncated at the given order: the u^n coefficient is c^n / n!.
USeries series_exp_linear(const Poly& c, std::size_t order);

}  // namespace eulerian
