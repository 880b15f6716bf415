#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "eulerian/permutations.hpp"
#include "test_util.hpp"

using namespace eulerian;
using eulerian::test::P;
using eulerian::test::R;

TEST_CASE("Perm: construction validates the bijection") {
    CHECK_NOTHROW(Perm({1, 3, 2}));
    CHECK_THROWS_AS(Perm({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Perm({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Perm({1, 2, 4}), std::invalid_argument);
}

TEST_CASE("ascent_count and major_index on named permutations") {
    CHECK(ascent_count(Perm({1, 3, 2})) == 1);
    CHECK(ascent_count(Perm({3, 1, 2})) == 1);
    CHECK(ascent_count(Perm({1, 2, 3, 4, 5})) == 4);

    CHECK(major_index(Perm({1, 2, 3})) == 0);
    CHECK(major_index(Perm({1, 3, 2})) == 2);
    CHECK(major_index(Perm({3, 2, 1})) == 3);

    CHECK(ascent_major_index(Perm({1, 2, 3})) == 3);
    CHECK(ascent_major_index(Perm({3, 2, 1})) == 0);
}

TEST_CASE("ascents + descents = n-1 and reversal duality") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        do {
            const Perm p(v);
            CHECK(ascent_count(p) + descent_count(p) == n - 1);
            std::vector<int> rev(v.rbegin(), v.rend());
            CHECK(ascent_count(Perm(rev)) == n - 1 - ascent_count(p));
            CHECK(major_index(p) + ascent_major_index(p) == n * (n - 1) / 2);
        } while (std::next_permutation(v.begin(), v.end()));
    }
}

TEST_CASE("eulerian_by_enumeration: known rows") {
    CHECK(eulerian_by_enumeration(1) == std::vector<long long>{1});
    CHECK(eulerian_by_enumeration(3) == std::vector<long long>{1, 4, 1});
    CHECK(eulerian_by_enumeration(5) == std::vector<long long>{1, 26, 66, 26, 1});
}

TEST_CASE("eulerian_by_enumeration: counts sum to n!") {
    long long fact = 1;
    for (int n = 1; n <= 8; ++n) {
        fact *= n;
        const auto counts = eulerian_by_enumeration(n);
        CHECK(std::accumulate(counts.begin(), counts.end(), 0LL) == fact);
    }
}

TEST_CASE("eulerian_by_enumeration: bound enforcement") {
    CHECK_THROWS_AS(eulerian_by_enumeration(9), ResourceError);
    CHECK_THROWS_AS(eulerian_by_enumeration(11, 10), ResourceError);
    CHECK_THROWS_AS(eulerian_by_enumeration(0), std::invalid_argument);
}

TEST_CASE("maj_ascent_table: small tables and marginals") {
    const MajAscentTable t1 = maj_ascent_table(1);
    CHECK(t1.at(0, 0) == 1);

    const MajAscentTable t2 = maj_ascent_table(2);
    CHECK(t2.at(1, 0) == 1);  // 12: one ascent, maj 0
    CHECK(t2.at(0, 1) == 1);  // 21: no ascent, maj 1
    CHECK(t2.at(0, 0) == 0);

    long long total = 0;
    const MajAscentTable t3 = maj_ascent_table(3);
    for (int k = 0; k < 3; ++k) {
        for (int i = 0; i <= t3.max_index(); ++i) total += t3.at(k, i);
    }
    CHECK(total == 6);

    // Marginalizing over maj reproduces the ascent counts.
    for (int n = 1; n <= 7; ++n) {
        const MajAscentTable table = maj_ascent_table(n);
        const auto counts = eulerian_by_enumeration(n);
        for (int k = 0; k < n; ++k) {
            long long marginal = 0;
            for (int i = 0; i <= table.max_index(); ++i) marginal += table.at(k, i);
            CHECK(marginal == counts[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("direct_weighted_sum: worked values") {
    CHECK(direct_weighted_sum({Rat(1), Rat(1)}, 2, 3, 1) == P({"0", "1", "4", "9"}));
    CHECK(direct_weighted_sum({Rat(2), Rat(3)}, 5, 0, 1).is_zero());
    CHECK(direct_weighted_sum({Rat(2), Rat(3)}, 1, 3, 2) == P({"0", "0", "5", "8"}));
    CHECK(direct_weighted_sum({R("1/2"), R("-1/3")}, 1, 2, 1) ==
          P({"0", "1/2", "1/6"}));
}
