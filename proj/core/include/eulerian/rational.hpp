#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "eulerian/integer.hpp"

namespace eulerian {

/// Exact rational scalar, always held in canonical form:
///   - denominator > 0
///   - gcd(|numerator|, denominator) = 1
///   - zero is 0/1
///
/// The canonical textual form is "p" or "p/q" with q > 1 (e.g. "-3/7");
/// parse() accepts the same grammar plus unreduced input and normalizes.
class Rat {
public:
    Rat() : value_(0) {}
    Rat(int n) : value_(n) {}
    Rat(long n) : value_(static_cast<signed long>(n)) {}
    Rat(const Int& n) : value_(n) {}
    Rat(const Int& num, const Int& den);

    /// Parse the textual form. Throws std::invalid_argument on malformed
    /// input and std::domain_error on a zero denominator.
    static Rat parse(std::string_view text);

    const Int num() const { return value_.get_num(); }
    const Int den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string str() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& rhs);
    Rat& operator-=(const Rat& rhs);
    Rat& operator*=(const Rat& rhs);
    Rat& operator/=(const Rat& rhs);

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rat& lhs, const Rat& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs) {
        int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    // mpq_class arithmetic preserves canonical form; only construction from
    // raw numerator/denominator needs an explicit canonicalize().
    mpq_class value_;
};

/// r^exp with 0^0 = 1.
Rat rat_pow(const Rat& r, unsigned long exp);

Rat abs(const Rat& r);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace eulerian
