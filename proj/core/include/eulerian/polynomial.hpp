#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "eulerian/rational.hpp"

namespace eulerian {

/// Variable tag carried by a polynomial. Purely informational: arithmetic
/// never branches on it, and a label mismatch is not an error.
enum class Var : char { t = 't', q = 'q' };

/// Dense univariate polynomial over Rat. The coefficient at index i belongs
/// to x^i; the last stored coefficient is nonzero, and the zero polynomial
/// stores nothing at all.
class Poly {
public:
    /// Sentinel returned by degree() for the zero polynomial.
    static constexpr std::ptrdiff_t kZeroDegree = -1;

    Poly() = default;
    explicit Poly(Var var) : var_(var) {}
    Poly(const Rat& constant, Var var = Var::t);
    Poly(std::initializer_list<Rat> ascending_coeffs, Var var = Var::t);

    static Poly from_coeffs(std::vector<Rat> ascending_coeffs, Var var = Var::t);

    /// x^power with the given coefficient.
    static Poly monomial(const Rat& coeff, std::size_t power, Var var = Var::t);

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the polynomial; kZeroDegree (never a valid index) for zero.
    std::ptrdiff_t degree() const {
        return coeffs_.empty() ? kZeroDegree : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
    }

    /// Coefficient of x^i; zero beyond the stored range.
    const Rat& coeff(std::size_t i) const;

    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /// Exact Horner evaluation.
    Rat eval(const Rat& x) const;

    Poly derivative() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rat& scalar);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const Rat& scalar) { return lhs *= scalar; }
    friend Poly operator*(const Rat& scalar, Poly rhs) { return rhs *= scalar; }

    /// Equality compares coefficients only; labels are advisory.
    friend bool operator==(const Poly& lhs, const Poly& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }

    /// Human-readable ascending form, e.g. "1 + 4*t + t^2".
    std::string str() const;

private:
    void trim();

    std::vector<Rat> coeffs_;
    Var var_ = Var::t;
};

/// p^exp with p^0 = 1 (label preserved).
Poly poly_pow(const Poly& p, unsigned long exp);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace eulerian
