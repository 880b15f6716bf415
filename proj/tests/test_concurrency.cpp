#include <doctest.h>

#include <thread>
#include <vector>

#include "eulerian/classical.hpp"
#include "eulerian/general.hpp"
#include "eulerian/q_analog.hpp"

using namespace eulerian;

// All values are immutable and every operation is a pure function, so
// concurrent callers must see identical results with no coordination.
TEST_CASE("concurrent computation matches serial results") {
    const std::vector<Int> serial_row = classical_triangle(10).row(10);
    const Poly serial_poly = general_poly(8, {Rat(2), Rat(3)});
    const Poly serial_q = q_triangle(8).entry(8, 3);

    constexpr int kThreads = 8;
    std::vector<int> mismatches(kThreads, 0);
    std::vector<std::thread> workers;
    workers.reserve(kThreads);
    for (int w = 0; w < kThreads; ++w) {
        workers.emplace_back([&, w] {
            for (int round = 0; round < 5; ++round) {
                if (classical_triangle(10).row(10) != serial_row) ++mismatches[w];
                if (general_poly(8, {Rat(2), Rat(3)}) != serial_poly) ++mismatches[w];
                if (q_triangle(8).entry(8, 3) != serial_q) ++mismatches[w];
                if (!general_egf_check({Rat(-1), Rat(2)}, 5)) ++mismatches[w];
                if (!carlitz_identity_check(4, 5)) ++mismatches[w];
            }
        });
    }
    for (auto& t : workers) t.join();
    for (int w = 0; w < kThreads; ++w) {
        CHECK(mismatches[w] == 0);
    }
}
