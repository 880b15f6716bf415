#include "eulerian/polynomial.hpp"

#include <ostream>
#include <utility>

namespace eulerian {

namespace {
const Rat kZero{};
}

Poly::Poly(const Rat& constant, Var var) : var_(var) {
    if (!constant.is_zero()) {
        coeffs_.push_back(constant);
    }
}

Poly::Poly(std::initializer_list<Rat> ascending_coeffs, Var var)
    : coeffs_(ascending_coeffs), var_(var) {
    trim();
}

Poly Poly::from_coeffs(std::vector<Rat> ascending_coeffs, Var var) {
    Poly p(var);
    p.coeffs_ = std::move(ascending_coeffs);
    p.trim();
    return p;
}

Poly Poly::monomial(const Rat& coeff, std::size_t power, Var var) {
    Poly p(var);
    if (!coeff.is_zero()) {
        p.coeffs_.assign(power + 1, Rat{});
        p.coeffs_[power] = coeff;
    }
    return p;
}

const Rat& Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

Poly Poly::derivative() const {
    Poly d(var_);
    if (coeffs_.size() <= 1) {
        return d;
    }
    d.coeffs_.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.coeffs_.push_back(coeffs_[i] * Rat(static_cast<long>(i)));
    }
    d.trim();
    return d;
}

Poly Poly::operator-() const {
    Poly n(var_);
    n.coeffs_.reserve(coeffs_.size());
    for (const Rat& c : coeffs_) {
        n.coeffs_.push_back(-c);
    }
    return n;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    Poly prod(lhs.var_);
    if (lhs.is_zero() || rhs.is_zero()) {
        return prod;
    }
    prod.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rat{});
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            prod.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    // lhs.back() and rhs.back() are nonzero, so the product is already trimmed.
    return prod;
}

Poly& Poly::operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (Rat& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

std::string Poly::str() const {
    if (coeffs_.empty()) {
        return "0";
    }
    const char v = static_cast<char>(var_);
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rat mag = abs(c);
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const bool unit = mag == Rat(1);
        if (i == 0) {
            out += mag.str();
        } else {
            if (!unit) {
                out += mag.str();
                out += "*";
            }
            out += v;
            if (i > 1) {
                out += "^" + std::to_string(i);
            }
        }
    }
    return out;
}

Poly poly_pow(const Poly& p, unsigned long exp) {
    Poly result(Rat(1), p.var());
    Poly base = p;
    unsigned long e = exp;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

}  // namespace eulerian
