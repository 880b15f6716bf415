#pragma once

#include <vector>

#include "eulerian/errors.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/progression.hpp"

namespace eulerian {

/// Default cap on brute-force permutation enumeration (8! = 40320 keeps the
/// fast test tier under a second; callers may raise it to 10).
inline constexpr int kDefaultEnumerationBound = 8;

/// A permutation of {1..n}. Construction validates the bijection.
class Perm {
public:
    explicit Perm(std::vector<int> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }

private:
    std::vector<int> entries_;
};

/// Number of positions j with p_j < p_{j+1}, 1 <= j <= n-1.
int ascent_count(const Perm& p);

/// (n-1) minus the ascent count.
int descent_count(const Perm& p);

/// Major index: sum of descent positions (1-based).
int major_index(const Perm& p);

/// Complementary major index: sum of ascent positions (1-based).
int ascent_major_index(const Perm& p);

/// Counts of permutations of {1..n} by ascent count, index k = number with
/// exactly k ascents. Throws ResourceError above the bound.
std::vector<long long> eulerian_by_enumeration(int n, int bound = kDefaultEnumerationBound);

/// Complete joint table a(n, k, i) = #{permutations with k ascents and
/// major index i} over all n! permutations.
class MajAscentTable {
public:
    MajAscentTable(int n, std::vector<std::vector<long long>> counts)
        : n_(n), counts_(std::move(counts)) {}

    int n() const { return n_; }

    /// a(n, k, i); zero outside the tabulated range.
    long long at(int k, int i) const;

    /// Largest possible major index, n(n-1)/2.
    int max_index() const { return n_ * (n_ - 1) / 2; }

private:
    int n_;
    std::vector<std::vector<long long>> counts_;  // [k][i]
};

MajAscentTable maj_ascent_table(int n, int bound = kDefaultEnumerationBound);

/// Exact weighted power sum over an arithmetic progression:
/// sum_{i=start}^{m} t^i * (a + (i-1)d)^n. Oracle LHS for the finite-sum
/// identity checks; empty ranges give the zero polynomial.
Poly direct_weighted_sum(const Progression& prog, int n, long m, int start);

}  // namespace eulerian
