#pragma once

#include <vector>

#include "eulerian/check.hpp"
#include "eulerian/integer.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/power_series.hpp"

namespace eulerian {

/// Triangle of classical Eulerian numbers A(n,k): the number of permutations
/// of {1..n} with exactly k ascents. Row n holds A(n,0)..A(n,n-1); row 0 has
/// no entries (the polynomial-level convention is A_0(t) = 1).
class ClassicalTriangle {
public:
    ClassicalTriangle(int max_n, std::vector<std::vector<Int>> rows)
        : max_n_(max_n), rows_(std::move(rows)) {}

    int max_n() const { return max_n_; }

    /// A(n,k); zero for n = 0, k < 0, or k >= n.
    const Int& entry(int n, long k) const;

    /// Row n for n >= 1, ascending k.
    const std::vector<Int>& row(int n) const;

private:
    int max_n_;
    std::vector<std::vector<Int>> rows_;  // rows_[n-1] is row n
};

/// Fill rows 1..max_n by the two-term recurrence
/// A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1).
ClassicalTriangle classical_triangle(int max_n);

/// A(n,k) by the alternating-sum closed form
/// sum_{i=0}^{k} (-1)^i (k-i+1)^n C(n+1,i); zero for k < 0 or k >= n.
Int classical_number_closed(int n, long k);

/// Three independent constructions of the Eulerian polynomial A_n(t); they
/// agree everywhere and the tests pin that down.
enum class PolyMethod {
    triangle,      // row n of the triangle as coefficients
    binomial_recursion,    // A_n(t) = sum_k C(n,k) A_k(t) (t-1)^{n-1-k}
    derivative_recursion,  // A_n(t) = (1+(n-1)t) A_{n-1}(t) + t(1-t) A'_{n-1}(t)
};

Poly classical_poly(int n, PolyMethod method = PolyMethod::triangle);

/// Unsigned Bernoulli numbers |B_{2r}| as they enter the Faulhaber formula;
/// slot r holds |B_{2r}| for r >= 1, slot 0 holds B_0 = 1.
class BernoulliTable {
public:
    explicit BernoulliTable(std::vector<Rat> values) : values_(std::move(values)) {}

    int max_r() const { return static_cast<int>(values_.size()) - 1; }
    const Rat& at(int r) const { return values_.at(static_cast<std::size_t>(r)); }

private:
    std::vector<Rat> values_;
};

/// Computed from the standard recurrence on signed Bernoulli numbers
/// (sum_{j<=m} C(m+1,j) B_j = 0, B_0 = 1), then taken in absolute value.
BernoulliTable bernoulli_unsigned(int max_r);

/// Faulhaber evaluation: sum_{i=1}^{m} i^n against the Bernoulli closed form
/// m^{n+1}/(n+1) + m^n/2 + (1/(n+1)) sum_r C(n+1,2r) m^{n-2r+1} (-1)^{r+1} |B_{2r}|.
CheckResult faulhaber_check(int n, long m);

/// Worpitzky: x^n = sum_k C(x+k, n) A(n,k).
CheckResult worpitzky_eval(int n, long x);

/// Power sum via the triangle: sum_{i=1}^{m} i^n = sum_k A(n,k) C(m+k+1, n+1).
CheckResult power_sum_check(int n, long m);

/// The two finite-sum expansions of sum_{i=1}^{m} i^n t^i, verified as exact
/// polynomial identities after clearing the (t-1)- resp. (1-t)-power
/// denominators.
enum class FiniteSumVariant { t_minus_one, one_minus_t };

CheckResult classical_finite_sum_identity(FiniteSumVariant variant, int n, long m);

/// Truncated geometric-series identity: (sum_{j=0}^{J} t^j (j+1)^n)(1-t)^{n+1}
/// agrees with A_n(t) on t^0..t^{J-n-1}; the higher coefficients of the
/// product are truncation artifacts. Requires J >= n+2.
CheckResult geometric_series_check(int n, int J);

/// Exponential generating function check in cleared form:
/// (t - exp(u(t-1))) * sum_{n<=N} A_n(t) u^n/n! = (t-1), exact at order N.
CheckResult egf_check(int order);

}  // namespace eulerian
