#pragma once

#include <vector>

#include "eulerian/check.hpp"
#include "eulerian/permutations.hpp"
#include "eulerian/polynomial.hpp"

namespace eulerian {

/// q-bracket [x] = 1 + q + ... + q^{x-1}; [0] is the zero polynomial.
/// Negative x is rejected (no symbolic q^x here).
Poly q_bracket(long x);

/// Gaussian binomial coefficient as a polynomial in q with nonnegative
/// integer coefficients: zero when n > x, one when n = 0. Computed by the
/// q-Pascal recurrence, so no polynomial division is ever needed.
Poly q_binomial(long x, long n);

/// Triangle of Carlitz q-Eulerian numbers A(n,k)(q), each a polynomial in q.
/// Every entry collapses to the classical Eulerian number at q = 1.
class QTriangle {
public:
    QTriangle(int max_n, std::vector<std::vector<Poly>> rows)
        : max_n_(max_n), rows_(std::move(rows)) {}

    int max_n() const { return max_n_; }

    /// A(n,k)(q); the zero polynomial for k < 0 or k >= n.
    const Poly& entry(int n, long k) const;

    const std::vector<Poly>& row(int n) const;

private:
    int max_n_;
    std::vector<std::vector<Poly>> rows_;  // rows_[n-1] is row n
};

/// Fill rows 1..max_n by the q-recurrence
/// A(n,k)(q) = q^{n-1-k} [k+1] A(n-1,k)(q) + [n-k] A(n-1,k-1)(q),
/// with A(1,0) = 1 and out-of-range terms zero.
QTriangle q_triangle(int max_n);

/// Defining identity of the q-Eulerian numbers at a nonnegative integer x:
/// [x]^n = sum_{k=0}^{n-1} A(n,k)(q) * qbinom(x+k, n), exact in q.
CheckResult carlitz_identity_check(int n, long x);

/// The bivariate polynomial A_n(t,q), stored as the sequence of q-polynomial
/// coefficients indexed by t-power. At q = 1 it collapses to the classical
/// Eulerian polynomial A_n(t).
class BivariatePoly {
public:
    explicit BivariatePoly(std::vector<Poly> t_coeffs) : t_coeffs_(std::move(t_coeffs)) {}

    std::size_t t_terms() const { return t_coeffs_.size(); }
    const Poly& t_coeff(std::size_t k) const { return t_coeffs_.at(k); }
    const std::vector<Poly>& t_coeffs() const { return t_coeffs_; }

    /// Evaluate the q-variable, leaving a polynomial in t.
    Poly at_q(const Rat& q_value) const;

private:
    std::vector<Poly> t_coeffs_;
};

BivariatePoly q_poly(int n);

/// A(n,k)(q) assembled from the brute-force permutation table: the major-index
/// generating polynomial over permutations of {1..n} with exactly k ascents,
/// sum_i a(n,k,i) q^i. Must (and does) equal the q_triangle entry; the
/// equality is what settles the statistic convention.
Poly q_combinatorial(int n, int k, int bound = kDefaultEnumerationBound);

/// The same polynomial by the complementary route: q^{amaj} summed over
/// permutations with exactly k descents, where amaj is the ascent-position
/// sum. Equal to q_combinatorial by the complementation bijection.
Poly q_combinatorial_complement(int n, int k, int bound = kDefaultEnumerationBound);

}  // namespace eulerian
