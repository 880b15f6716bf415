#pragma once

#include <string>
#include <vector>

namespace eulerian::cli {

/// Parameter caps for a verify run. Enumeration-backed checks refuse to run
/// past `bound` / `qbound` (ResourceError), mirroring the library ops.
struct Limits {
    int max_n = 6;
    long max_m = 10;
    int order = 8;
    long x = 6;
    int bound = 8;   // permutation oracle
    int qbound = 6;  // q combinatorial enumeration
};

enum class Status { Pass, Fail, Xfail, Xpass };

/// One record per (identity, parameter point).
struct Record {
    std::string suite;
    std::string identity;
    std::string params;
    Status status = Status::Pass;
    std::string where;
    std::string lhs;
    std::string rhs;
};

/// Append the records of one suite ("classical", "general", "q", "oracle")
/// in deterministic order. May throw ResourceError mid-run; records already
/// produced remain valid as a partial report.
void run_suite(const std::string& suite, const Limits& limits, std::vector<Record>& out);

/// Suites in the order "all" runs them.
const std::vector<std::string>& suite_names();

}  // namespace eulerian::cli
