#include "eulerian/q_analog.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eulerian {

namespace {
const Poly kZeroPoly(Var::q);
}

Poly q_bracket(long x) {
    if (x < 0) {
        throw std::invalid_argument("q_bracket: x must be nonnegative");
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(x), Rat(1));
    return Poly::from_coeffs(std::move(coeffs), Var::q);
}

Poly q_binomial(long x, long n) {
    if (x < 0 || n < 0) {
        throw std::invalid_argument("q_binomial: arguments must be nonnegative");
    }
    if (n > x) {
        return kZeroPoly;
    }
    // q-Pascal, row by row: [r choose c] = [r-1 choose c-1] + q^c [r-1 choose c].
    std::vector<Poly> row{Poly(Rat(1), Var::q)};  // row r = 0
    for (long r = 1; r <= x; ++r) {
        const long cols = std::min(r, n);
        std::vector<Poly> next(static_cast<std::size_t>(cols) + 1);
        next[0] = Poly(Rat(1), Var::q);
        for (long c = 1; c <= cols; ++c) {
            const Poly& diag = row[static_cast<std::size_t>(c - 1)];
            Poly upper = (c < static_cast<long>(row.size()))
                             ? row[static_cast<std::size_t>(c)] * Poly::monomial(Rat(1),
                                   static_cast<std::size_t>(c), Var::q)
                             : Poly(Var::q);
            next[static_cast<std::size_t>(c)] = diag + upper;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(n)];
}

const Poly& QTriangle::entry(int n, long k) const {
    if (n <= 0 || k < 0 || k >= n) {
        return kZeroPoly;
    }
    if (n > max_n_) {
        throw std::out_of_range("QTriangle: row " + std::to_string(n) + " beyond max_n " +
                                std::to_string(max_n_));
    }
    return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
}

const std::vector<Poly>& QTriangle::row(int n) const {
    if (n < 1 || n > max_n_) {
        throw std::out_of_range("QTriangle: no row " + std::to_string(n));
    }
    return rows_[static_cast<std::size_t>(n - 1)];
}

QTriangle q_triangle(int max_n) {
    if (max_n < 1) {
        throw std::invalid_argument("q_triangle: max_n must be >= 1");
    }
    std::vector<std::vector<Poly>> rows;
    rows.reserve(static_cast<std::size_t>(max_n));
    rows.push_back({Poly(Rat(1), Var::q)});  // A(1,0) = 1
    for (int n = 2; n <= max_n; ++n) {
        const std::vector<Poly>& prev = rows.back();
        std::vector<Poly> row(static_cast<std::size_t>(n), Poly(Var::q));
        for (int k = 0; k < n; ++k) {
            Poly acc(Var::q);
            if (k < n - 1) {
                // q^{n-1-k} [k+1] A(n-1,k)
                acc += Poly::monomial(Rat(1), static_cast<std::size_t>(n - 1 - k), Var::q) *
                       q_bracket(k + 1) * prev[static_cast<std::size_t>(k)];
            }
            if (k >= 1) {
                acc += q_bracket(n - k) * prev[static_cast<std::size_t>(k - 1)];
            }
            row[static_cast<std::size_t>(k)] = std::move(acc);
        }
        rows.push_back(std::move(row));
    }
    return QTriangle(max_n, std::move(rows));
}

CheckResult carlitz_identity_check(int n, long x) {
    if (n < 1 || x < 1) {
        throw std::invalid_argument("carlitz_identity_check: need n >= 1, x >= 1");
    }
    const Poly lhs = poly_pow(q_bracket(x), static_cast<unsigned long>(n));
    const QTriangle tri = q_triangle(n);
    Poly rhs(Var::q);
    for (int k = 0; k < n; ++k) {
        rhs += tri.entry(n, k) * q_binomial(x + k, n);
    }
    return compare_polys(lhs, rhs);
}

Poly BivariatePoly::at_q(const Rat& q_value) const {
    std::vector<Rat> coeffs;
    coeffs.reserve(t_coeffs_.size());
    for (const Poly& p : t_coeffs_) {
        coeffs.push_back(p.eval(q_value));
    }
    return Poly::from_coeffs(std::move(coeffs));
}

BivariatePoly q_poly(int n) {
    if (n < 1) {
        throw std::invalid_argument("q_poly: n must be >= 1");
    }
    return BivariatePoly(q_triangle(n).row(n));
}

Poly q_combinatorial(int n, int k, int bound) {
    if (n < 1) {
        throw std::invalid_argument("q_combinatorial: n must be >= 1");
    }
    if (k < 0 || k >= n) {
        return kZeroPoly;
    }
    const MajAscentTable table = maj_ascent_table(n, bound);
    std::vector<Rat> coeffs(static_cast<std::size_t>(table.max_index()) + 1);
    for (int i = 0; i <= table.max_index(); ++i) {
        coeffs[static_cast<std::size_t>(i)] = Rat(static_cast<long>(table.at(k, i)));
    }
    return Poly::from_coeffs(std::move(coeffs), Var::q);
}

Poly q_combinatorial_complement(int n, int k, int bound) {
    if (n < 1) {
        throw std::invalid_argument("q_combinatorial_complement: n must be >= 1");
    }
    if (k < 0 || k >= n) {
        return kZeroPoly;
    }
    if (n > bound) {
        throw ResourceError("q_combinatorial_complement: n = " + std::to_string(n) +
                            " exceeds the enumeration bound " + std::to_string(bound));
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(n * (n - 1) / 2) + 1);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
        int descents = 0;
        int amaj = 0;
        for (std::size_t j = 1; j < p.size(); ++j) {
            if (p[j - 1] > p[j]) {
                ++descents;
            } else {
                amaj += static_cast<int>(j);
            }
        }
        if (descents == k) {
            coeffs[static_cast<std::size_t>(amaj)] += Rat(1);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return Poly::from_coeffs(std::move(coeffs), Var::q);
}

}  // namespace eulerian
