#include <doctest.h>

#include <numeric>

#include "eulerian/classical.hpp"
#include "eulerian/permutations.hpp"
#include "eulerian/q_analog.hpp"

using namespace eulerian;

// Opt-in tier: enumeration at the raised bounds (9-10 for the permutation
// oracle, 7 for the q tables). Run with `unit_tests -ts=slow`.
TEST_SUITE("slow") {

TEST_CASE("enumeration matches the triangle at n = 9 and 10") {
    const ClassicalTriangle tri = classical_triangle(10);
    for (int n = 9; n <= 10; ++n) {
        const auto counts = eulerian_by_enumeration(n, 10);
        long long total = 0;
        for (int k = 0; k < n; ++k) {
            CHECK(tri.entry(n, k) == Int(static_cast<long>(counts[static_cast<std::size_t>(k)])));
            total += counts[static_cast<std::size_t>(k)];
        }
        CHECK(Int(static_cast<long>(total)) == factorial(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("q_combinatorial equals the recurrence at n = 7") {
    const QTriangle tri = q_triangle(7);
    for (int k = 0; k < 7; ++k) {
        CHECK(q_combinatorial(7, k, 7) == tri.entry(7, k));
        CHECK(q_combinatorial_complement(7, k, 7) == tri.entry(7, k));
    }
}

}  // TEST_SUITE("slow")
