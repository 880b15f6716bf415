#include "eulerian/general.hpp"

#include <stdexcept>
#include <string>

#include "eulerian/classical.hpp"
#include "eulerian/permutations.hpp"

namespace eulerian {

namespace {
const Rat kZeroRat{};
}

const Rat& GeneralTriangle::entry(int n, long k) const {
    if (n < 0 || k <= -2 || k >= n) {
        return kZeroRat;
    }
    if (n > max_n_) {
        throw std::out_of_range("GeneralTriangle: row " + std::to_string(n) + " beyond max_n " +
                                std::to_string(max_n_));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k + 1)];
}

const std::vector<Rat>& GeneralTriangle::row(int n) const {
    if (n < 0 || n > max_n_) {
        throw std::out_of_range("GeneralTriangle: no row " + std::to_string(n));
    }
    return rows_[static_cast<std::size_t>(n)];
}

GeneralTriangle general_triangle(const Progression& prog, int max_n) {
    if (max_n < 0) {
        throw std::invalid_argument("general_triangle: max_n must be nonnegative");
    }
    const Rat& a = prog.a;
    const Rat& d = prog.d;
    std::vector<std::vector<Rat>> rows;
    rows.reserve(static_cast<std::size_t>(max_n) + 1);
    rows.push_back({Rat(1)});  // A(0,-1) = 1
    for (int n = 1; n <= max_n; ++n) {
        const std::vector<Rat>& prev = rows.back();
        std::vector<Rat> row(static_cast<std::size_t>(n) + 1);
        for (long k = -1; k <= n - 1; ++k) {
            // prev covers k = -1..n-2 at index k+1.
            const Rat above = (k <= n - 2) ? prev[static_cast<std::size_t>(k + 1)] : Rat();
            const Rat left = (k >= 0) ? prev[static_cast<std::size_t>(k)] : Rat();
            row[static_cast<std::size_t>(k + 1)] =
                (Rat(static_cast<long>(k + 2)) * d - a) * above +
                (a + Rat(static_cast<long>(n - k - 1)) * d) * left;
        }
        rows.push_back(std::move(row));
    }
    return GeneralTriangle(prog, max_n, std::move(rows));
}

Rat general_number_closed(int n, long k, const Progression& prog) {
    if (n < 0) {
        throw std::invalid_argument("general_number_closed: n must be nonnegative");
    }
    if (k <= -2 || k >= n) {
        return Rat();
    }
    Rat sum;
    for (long i = 0; i <= k + 1; ++i) {
        Rat term = rat_pow(Rat(k + 2 - i) * prog.d - prog.a, static_cast<unsigned long>(n)) *
                   Rat(binomial(n + 1, i));
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

CheckResult general_worpitzky_check(int n, const Progression& prog, long i) {
    if (n < 1 || i < 1) {
        throw std::invalid_argument("general_worpitzky_check: need n >= 1, i >= 1");
    }
    const GeneralTriangle tri = general_triangle(prog, n);
    Rat sum;
    for (long j = -1; j <= n - 1; ++j) {
        sum += tri.entry(n, j) * Rat(binomial(i + j, n));
    }
    const Rat direct = rat_pow(prog.term(i), static_cast<unsigned long>(n));
    return compare_rats(direct, sum, "n=" + std::to_string(n) + " i=" + std::to_string(i));
}

CheckResult general_power_sum_check(const Progression& prog, int n, long m) {
    if (n < 1 || m < 1) {
        throw std::invalid_argument("general_power_sum_check: need n >= 1, m >= 1");
    }
    Rat direct;
    for (long i = 1; i <= m; ++i) {
        direct += rat_pow(prog.term(i), static_cast<unsigned long>(n));
    }
    const GeneralTriangle tri = general_triangle(prog, n);
    Rat sum;
    for (long j = -1; j <= n - 1; ++j) {
        sum += tri.entry(n, j) * Rat(binomial(m + j + 1, n + 1));
    }
    return compare_rats(direct, sum, "n=" + std::to_string(n) + " m=" + std::to_string(m));
}

Poly general_poly(int n, const Progression& prog) {
    if (n < 0) {
        throw std::invalid_argument("general_poly: n must be nonnegative");
    }
    return Poly::from_coeffs(general_triangle(prog, n).row(n));
}

Poly general_poly_via_classical(int n, const Progression& prog) {
    if (n < 0) {
        throw std::invalid_argument("general_poly_via_classical: n must be nonnegative");
    }
    const Poly at_minus_a{-prog.a, prog.a};  // a(t-1)
    Poly result;
    Rat d_pow(1);
    for (int j = 0; j <= n; ++j) {
        if (j > 0) d_pow *= prog.d;
        result += Rat(binomial(n, j)) * d_pow * classical_poly(j, PolyMethod::derivative_recursion) *
                  poly_pow(at_minus_a, static_cast<unsigned long>(n - j));
    }
    return result;
}

CheckResult general_egf_check(const Progression& prog, int order) {
    if (order < 1) {
        throw std::invalid_argument("general_egf_check: order must be >= 1");
    }
    const auto N = static_cast<std::size_t>(order);
    const Poly t_minus_1{Rat(-1), Rat(1)};

    // t - exp(d u (t-1))
    USeries lhs_factor = -series_exp_linear(t_minus_1 * prog.d, N);
    lhs_factor.set_coeff(0, lhs_factor.coeff(0) + Poly::monomial(Rat(1), 1));

    // sum_{n<=N} T_n(t,a,d) u^n / n!
    const GeneralTriangle tri = general_triangle(prog, order);
    USeries egf(N);
    Rat inv_fact(1);
    for (std::size_t n = 0; n <= N; ++n) {
        if (n > 0) inv_fact /= Rat(static_cast<long>(n));
        egf.set_coeff(n, Poly::from_coeffs(tri.row(static_cast<int>(n))) * inv_fact);
    }

    // (t-1) exp(a u (t-1))
    USeries rhs = series_exp_linear(t_minus_1 * prog.a, N);
    for (std::size_t n = 0; n <= N; ++n) {
        rhs.set_coeff(n, rhs.coeff(n) * t_minus_1);
    }

    return compare_series(series_mul(lhs_factor, egf), rhs);
}

CheckResult general_geometric_series_check(const Progression& prog, int n, int J) {
    if (n < 0) {
        throw std::invalid_argument("general_geometric_series_check: n must be nonnegative");
    }
    if (J < n + 2) {
        throw std::invalid_argument("general_geometric_series_check: J must be >= n+2");
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(J) + 1);
    for (int j = 0; j <= J; ++j) {
        coeffs[static_cast<std::size_t>(j)] =
            rat_pow(prog.a + Rat(j) * prog.d, static_cast<unsigned long>(n));
    }
    const Poly partial = Poly::from_coeffs(std::move(coeffs));
    const Poly t_minus_1{Rat(-1), Rat(1)};
    const Poly product = partial * poly_pow(t_minus_1, static_cast<unsigned long>(n + 1));
    const Poly target = -general_poly(n, Progression{prog.a - prog.d, -prog.d});
    return compare_polys_window(product, target, static_cast<std::size_t>(J - n));
}

namespace {

Poly finite_sum_rhs(GeneralFiniteSumVariant variant, const Progression& prog, int n, long m) {
    const Rat& a = prog.a;
    const Rat& d = prog.d;
    const Progression neg{a, -d};
    const Poly t_minus_1{Rat(-1), Rat(1)};
    const Poly t_sq = Poly::monomial(Rat(1), 2);
    const Poly t_m1 = Poly::monomial(Rat(1), static_cast<std::size_t>(m) + 1);

    if (variant == GeneralFiniteSumVariant::expanded) {
        // Cleared by (t-1)^{n+1}:
        //   sum_{l=0}^{n} C(n,l) t^{m+1} (dm-d)^l (t-1)^l T_{n-l}(t, a, -d)
        //   - t^2 T_n(t, a, -d)
        const Rat dm_minus_d = d * Rat(m) - d;  // (dm-d)^0 = 1 even when d(m-1) = 0
        const GeneralTriangle tri = general_triangle(neg, n);
        Poly acc;
        for (int l = 0; l <= n; ++l) {
            Poly term = Poly::from_coeffs(tri.row(n - l)) *
                        poly_pow(t_minus_1, static_cast<unsigned long>(l));
            term *= Rat(binomial(n, l)) * rat_pow(dm_minus_d, static_cast<unsigned long>(l));
            acc += term;
        }
        return t_m1 * acc - t_sq * Poly::from_coeffs(tri.row(n));
    }

    // shifted form, cleared by (t-1)^{n+1}:
    //   t^{m+1} T_n(t, a + d(m-1), -d) - t^2 T_n(t, a, -d)
    const Progression shifted{a + d * Rat(m - 1), -d};
    return t_m1 * general_poly(n, shifted) - t_sq * general_poly(n, neg);
}

}  // namespace

CheckResult finite_sum_identity_check(GeneralFiniteSumVariant variant, const Progression& prog,
                                      int n, long m) {
    if (n < 0 || m < 2) {
        throw std::invalid_argument("finite_sum_identity_check: need n >= 0, m >= 2");
    }
    const Poly t_minus_1{Rat(-1), Rat(1)};
    const Poly lhs = direct_weighted_sum(prog, n, m, /*start=*/2) *
                     poly_pow(t_minus_1, static_cast<unsigned long>(n + 1));
    return compare_polys(lhs, finite_sum_rhs(variant, prog, n, m));
}

CheckResult full_sum_identity_check(const Progression& prog, int n, long m) {
    if (n < 0 || m < 2) {
        throw std::invalid_argument("full_sum_identity_check: need n >= 0, m >= 2");
    }
    const Poly t_minus_1{Rat(-1), Rat(1)};
    const Poly lhs = direct_weighted_sum(prog, n, m, /*start=*/1) *
                     poly_pow(t_minus_1, static_cast<unsigned long>(n + 1));
    const Progression shifted{prog.a + prog.d * Rat(m - 1), -prog.d};
    const Progression back{prog.a - prog.d, -prog.d};
    const Poly rhs = Poly::monomial(Rat(1), static_cast<std::size_t>(m) + 1) *
                         general_poly(n, shifted) -
                     Poly::monomial(Rat(1), 1) * general_poly(n, back);
    return compare_polys(lhs, rhs);
}

CheckResult finite_sum_lower_index_check(GeneralFiniteSumVariant variant, const Progression& prog,
                                         int n, long m) {
    if (n < 0 || m < 2) {
        throw std::invalid_argument("finite_sum_lower_index_check: need n >= 0, m >= 2");
    }
    const Poly t_minus_1{Rat(-1), Rat(1)};
    const Poly lhs = direct_weighted_sum(prog, n, m, /*start=*/1) *
                     poly_pow(t_minus_1, static_cast<unsigned long>(n + 1));
    return compare_polys(lhs, finite_sum_rhs(variant, prog, n, m));
}

}  // namespace eulerian
