#include "eulerian/classical.hpp"

#include <stdexcept>
#include <string>

namespace eulerian {

namespace {
const Int kZeroInt = 0;
}

const Int& ClassicalTriangle::entry(int n, long k) const {
    if (n <= 0 || k < 0 || k >= n) {
        return kZeroInt;
    }
    if (n > max_n_) {
        throw std::out_of_range("ClassicalTriangle: row " + std::to_string(n) +
                                " beyond max_n " + std::to_string(max_n_));
    }
    return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
}

const std::vector<Int>& ClassicalTriangle::row(int n) const {
    if (n < 1 || n > max_n_) {
        throw std::out_of_range("ClassicalTriangle: no row " + std::to_string(n));
    }
    return rows_[static_cast<std::size_t>(n - 1)];
}

ClassicalTriangle classical_triangle(int max_n) {
    if (max_n < 0) {
        throw std::invalid_argument("classical_triangle: max_n must be nonnegative");
    }
    std::vector<std::vector<Int>> rows;
    rows.reserve(static_cast<std::size_t>(max_n));
    std::vector<Int> prev;  // row n-1
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Int> row(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            Int above = (k < n - 1 && !prev.empty()) ? prev[static_cast<std::size_t>(k)] : Int(0);
            Int left = (k >= 1) ? prev[static_cast<std::size_t>(k - 1)] : Int(0);
            if (n == 1) {
                row[0] = 1;  // single permutation, zero ascents
            } else {
                row[static_cast<std::size_t>(k)] = Int(k + 1) * above + Int(n - k) * left;
            }
        }
        prev = row;
        rows.push_back(std::move(row));
    }
    return ClassicalTriangle(max_n, std::move(rows));
}

Int classical_number_closed(int n, long k) {
    if (n < 1) {
        throw std::invalid_argument("classical_number_closed: n must be >= 1");
    }
    if (k < 0 || k >= n) {
        return 0;
    }
    Int sum = 0;
    for (long i = 0; i <= k; ++i) {
        Int term = int_pow(Int(k - i + 1), static_cast<unsigned long>(n)) * binomial(n + 1, i);
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

namespace {

Poly poly_from_row(const std::vector<Int>& row) {
    std::vector<Rat> coeffs;
    coeffs.reserve(row.size());
    for (const Int& v : row) coeffs.emplace_back(v);
    return Poly::from_coeffs(std::move(coeffs));
}

std::vector<Poly> classical_polys_binomial_recursion(int max_n) {
    // A_0 = 1; A_n(t) = sum_{k<n} C(n,k) A_k(t) (t-1)^{n-1-k}.
    std::vector<Poly> polys;
    polys.emplace_back(Rat(1));
    const Poly t_minus_1{Rat(-1), Rat(1)};
    for (int n = 1; n <= max_n; ++n) {
        Poly acc;
        for (int k = 0; k < n; ++k) {
            acc += Rat(binomial(n, k)) * polys[static_cast<std::size_t>(k)] *
                   poly_pow(t_minus_1, static_cast<unsigned long>(n - 1 - k));
        }
        polys.push_back(std::move(acc));
    }
    return polys;
}

std::vector<Poly> classical_polys_derivative_recursion(int max_n) {
    // A_n(t) = (1 + (n-1)t) A_{n-1}(t) + t(1-t) A'_{n-1}(t).
    std::vector<Poly> polys;
    polys.emplace_back(Rat(1));
    const Poly t_one_minus_t{Rat(0), Rat(1), Rat(-1)};  // t - t^2
    for (int n = 1; n <= max_n; ++n) {
        const Poly& prev = polys.back();
        Poly affine{Rat(1), Rat(n - 1)};
        polys.push_back(affine * prev + t_one_minus_t * prev.derivative());
    }
    return polys;
}

}  // namespace

Poly classical_poly(int n, PolyMethod method) {
    if (n < 0) {
        throw std::invalid_argument("classical_poly: n must be nonnegative");
    }
    switch (method) {
        case PolyMethod::triangle: {
            if (n == 0) return Poly(Rat(1));
            return poly_from_row(classical_triangle(n).row(n));
        }
        case PolyMethod::binomial_recursion:
            return classical_polys_binomial_recursion(n).back();
        case PolyMethod::derivative_recursion:
            return classical_polys_derivative_recursion(n).back();
    }
    throw std::invalid_argument("classical_poly: unknown method");
}

BernoulliTable bernoulli_unsigned(int max_r) {
    if (max_r < 1) {
        throw std::invalid_argument("bernoulli_unsigned: max_r must be >= 1");
    }
    // Signed Bernoulli numbers by the Pascal recurrence
    // sum_{j=0}^{m} C(m+1,j) B_j = 0 with B_0 = 1.
    const int top = 2 * max_r;
    std::vector<Rat> signed_b(static_cast<std::size_t>(top) + 1);
    signed_b[0] = Rat(1);
    for (int m = 1; m <= top; ++m) {
        Rat acc;
        for (int j = 0; j < m; ++j) {
            acc += Rat(binomial(m + 1, j)) * signed_b[static_cast<std::size_t>(j)];
        }
        signed_b[static_cast<std::size_t>(m)] = -acc / Rat(m + 1);
    }
    std::vector<Rat> values;
    values.reserve(static_cast<std::size_t>(max_r) + 1);
    values.emplace_back(1);  // B_0 slot
    for (int r = 1; r <= max_r; ++r) {
        values.push_back(abs(signed_b[static_cast<std::size_t>(2 * r)]));
    }
    return BernoulliTable(std::move(values));
}

CheckResult faulhaber_check(int n, long m) {
    if (n < 1 || m < 1) {
        throw std::invalid_argument("faulhaber_check: n and m must be >= 1");
    }
    Rat direct;
    for (long i = 1; i <= m; ++i) {
        direct += Rat(int_pow(Int(i), static_cast<unsigned long>(n)));
    }

    const Rat m_rat{Int(m)};
    const Rat inv_np1 = Rat(1) / Rat(n + 1);
    Rat rhs = rat_pow(m_rat, static_cast<unsigned long>(n + 1)) * inv_np1 +
              rat_pow(m_rat, static_cast<unsigned long>(n)) / Rat(2);
    if (n / 2 >= 1) {
        const BernoulliTable table = bernoulli_unsigned(n / 2);
        Rat sum;
        for (int r = 1; r <= n / 2; ++r) {
            Rat term = Rat(binomial(n + 1, 2 * r)) *
                       rat_pow(m_rat, static_cast<unsigned long>(n - 2 * r + 1)) * table.at(r);
            if (r % 2 == 0) term = -term;  // (-1)^{r+1}
            sum += term;
        }
        rhs += inv_np1 * sum;
    }
    return compare_rats(direct, rhs, "n=" + std::to_string(n) + " m=" + std::to_string(m));
}

CheckResult worpitzky_eval(int n, long x) {
    if (n < 1 || x < 0) {
        throw std::invalid_argument("worpitzky_eval: need n >= 1, x >= 0");
    }
    const ClassicalTriangle tri = classical_triangle(n);
    Int sum = 0;
    for (int k = 0; k < n; ++k) {
        sum += binomial(x + k, n) * tri.entry(n, k);
    }
    const Int direct = int_pow(Int(x), static_cast<unsigned long>(n));
    return compare_rats(Rat(direct), Rat(sum),
                        "n=" + std::to_string(n) + " x=" + std::to_string(x));
}

CheckResult power_sum_check(int n, long m) {
    if (n < 1 || m < 1) {
        throw std::invalid_argument("power_sum_check: n and m must be >= 1");
    }
    const ClassicalTriangle tri = classical_triangle(n);
    Int direct = 0;
    for (long i = 1; i <= m; ++i) {
        direct += int_pow(Int(i), static_cast<unsigned long>(n));
    }
    Int sum = 0;
    for (int k = 0; k < n; ++k) {
        sum += tri.entry(n, k) * binomial(m + k + 1, n + 1);
    }
    return compare_rats(Rat(direct), Rat(sum),
                        "n=" + std::to_string(n) + " m=" + std::to_string(m));
}

CheckResult classical_finite_sum_identity(FiniteSumVariant variant, int n, long m) {
    if (n < 1 || m < 1) {
        throw std::invalid_argument("classical_finite_sum_identity: n and m must be >= 1");
    }
    // LHS built directly: sum_{i=1}^{m} i^n t^i.
    std::vector<Rat> lhs_coeffs(static_cast<std::size_t>(m) + 1);
    for (long i = 1; i <= m; ++i) {
        lhs_coeffs[static_cast<std::size_t>(i)] = Rat(int_pow(Int(i), static_cast<unsigned long>(n)));
    }
    const Poly lhs = Poly::from_coeffs(std::move(lhs_coeffs));

    std::vector<Poly> a;  // A_0..A_n
    a.reserve(static_cast<std::size_t>(n) + 1);
    {
        const ClassicalTriangle tri = classical_triangle(n);
        a.emplace_back(Rat(1));
        for (int j = 1; j <= n; ++j) {
            std::vector<Rat> coeffs;
            for (const Int& v : tri.row(j)) coeffs.emplace_back(v);
            a.push_back(Poly::from_coeffs(std::move(coeffs)));
        }
    }
    const Rat m_rat{Int(m)};

    if (variant == FiniteSumVariant::t_minus_one) {
        // Cleared by (t-1)^{n+1}:
        //   sum_{l=1}^{n} (-1)^{n+l} C(n,l) t^{m+1} m^l A_{n-l}(t) (t-1)^l
        //   + (-1)^n t (t^m - 1) A_n(t).
        const Poly t_minus_1{Rat(-1), Rat(1)};
        Poly rhs;
        for (int l = 1; l <= n; ++l) {
            Poly term = Poly::monomial(Rat(1), static_cast<std::size_t>(m) + 1) *
                        a[static_cast<std::size_t>(n - l)] *
                        poly_pow(t_minus_1, static_cast<unsigned long>(l));
            term *= Rat(binomial(n, l)) * rat_pow(m_rat, static_cast<unsigned long>(l));
            if ((n + l) % 2 != 0) term = -term;
            rhs += term;
        }
        Poly tail = (Poly::monomial(Rat(1), static_cast<std::size_t>(m) + 1) -
                     Poly::monomial(Rat(1), 1)) *
                    a[static_cast<std::size_t>(n)];
        if (n % 2 != 0) tail = -tail;
        rhs += tail;
        return compare_polys(lhs * poly_pow(t_minus_1, static_cast<unsigned long>(n + 1)), rhs);
    }

    // the (1-t)-denominator form, cleared by (1-t)^{n+1}:
    //   -t^{m+1} sum_{k=0}^{n} C(n,k) m^{n-k} A_k(t) (1-t)^{n-k} + t A_n(t).
    const Poly one_minus_t{Rat(1), Rat(-1)};
    Poly rhs;
    for (int k = 0; k <= n; ++k) {
        Poly term = a[static_cast<std::size_t>(k)] *
                    poly_pow(one_minus_t, static_cast<unsigned long>(n - k));
        term *= Rat(binomial(n, k)) * rat_pow(m_rat, static_cast<unsigned long>(n - k));
        rhs += term;
    }
    rhs = -(Poly::monomial(Rat(1), static_cast<std::size_t>(m) + 1) * rhs);
    rhs += Poly::monomial(Rat(1), 1) * a[static_cast<std::size_t>(n)];
    return compare_polys(lhs * poly_pow(one_minus_t, static_cast<unsigned long>(n + 1)), rhs);
}

CheckResult geometric_series_check(int n, int J) {
    if (n < 0) {
        throw std::invalid_argument("geometric_series_check: n must be nonnegative");
    }
    if (J < n + 2) {
        throw std::invalid_argument("geometric_series_check: J must be >= n+2");
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(J) + 1);
    for (int j = 0; j <= J; ++j) {
        coeffs[static_cast<std::size_t>(j)] =
            Rat(int_pow(Int(j + 1), static_cast<unsigned long>(n)));
    }
    const Poly partial = Poly::from_coeffs(std::move(coeffs));
    const Poly one_minus_t{Rat(1), Rat(-1)};
    const Poly product = partial * poly_pow(one_minus_t, static_cast<unsigned long>(n + 1));
    const Poly a_n = classical_poly(n);
    return compare_polys_window(product, a_n, static_cast<std::size_t>(J - n));
}

CheckResult egf_check(int order) {
    if (order < 1) {
        throw std::invalid_argument("egf_check: order must be >= 1");
    }
    const auto N = static_cast<std::size_t>(order);
    const Poly t_minus_1{Rat(-1), Rat(1)};

    // t - exp(u(t-1))
    USeries lhs_factor = -series_exp_linear(t_minus_1, N);
    lhs_factor.set_coeff(0, lhs_factor.coeff(0) + Poly::monomial(Rat(1), 1));

    // sum_{n<=N} A_n(t) u^n / n!
    USeries egf(N);
    Rat inv_fact(1);
    for (std::size_t n = 0; n <= N; ++n) {
        if (n > 0) inv_fact /= Rat(static_cast<long>(n));
        egf.set_coeff(n, classical_poly(static_cast<int>(n)) * inv_fact);
    }

    return compare_series(series_mul(lhs_factor, egf), USeries::constant(t_minus_1, N));
}

}  // namespace eulerian
