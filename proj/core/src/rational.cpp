#include "eulerian/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace eulerian {

Rat::Rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::domain_error("Rat: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

namespace {

// Strict grammar: [+-]?digits(/[+-]?digits)? with no whitespace or decimals.
// GMP's own parser silently skips whitespace, so validate first.
bool valid_rat_text(std::string_view text) {
    std::size_t i = 0;
    auto digits = [&]() {
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return i > start;
    };
    if (!digits()) return false;
    if (i == text.size()) return true;
    if (text[i] != '/') return false;
    ++i;
    if (!digits()) return false;
    return i == text.size();
}

}  // namespace

Rat Rat::parse(std::string_view text) {
    if (!valid_rat_text(text)) {
        throw std::invalid_argument("Rat: malformed rational \"" + std::string(text) + "\"");
    }
    // GMP rejects explicit '+' signs; the validator guarantees at most one
    // leading sign per part, so dropping them is safe.
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char c : text) {
        if (c != '+') cleaned += c;
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), cleaned.c_str(), 10) != 0) {
        throw std::invalid_argument("Rat: malformed rational \"" + std::string(text) + "\"");
    }
    if (q.get_den() == 0) {
        throw std::domain_error("Rat: zero denominator in \"" + std::string(text) + "\"");
    }
    q.canonicalize();
    Rat r;
    r.value_ = q;
    return r;
}

std::string Rat::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat Rat::operator-() const {
    Rat r;
    r.value_ = -value_;
    return r;
}

Rat& Rat::operator+=(const Rat& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rat: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rat rat_pow(const Rat& r, unsigned long exp) {
    Rat result = 1;
    Rat base = r;
    unsigned long e = exp;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Rat abs(const Rat& r) {
    return r.sign() < 0 ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

}  // namespace eulerian
