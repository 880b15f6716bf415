#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "eulerian/classical.hpp"
#include "eulerian/general.hpp"
#include "eulerian/permutations.hpp"
#include "eulerian/q_analog.hpp"
#include "verify_suite.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace eulerian;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct TriangleArgs {
    std::string kind = "classical";
    int max_n = -1;
    long n = -1;
    long k = 0;
    bool has_entry = false;  // --n/--k single-entry lookup
    std::string a = "1";
    std::string d = "1";
    std::string format = "plain";
};

struct PolyArgs {
    std::string kind = "classical";
    long n = 0;
    std::string a = "1";
    std::string d = "1";
    std::string t;
    std::string format = "plain";
};

struct PowersumArgs {
    long n = 1;
    long m = 1;
    std::string a = "1";
    std::string d = "1";
    std::string format = "plain";
};

struct VerifyArgs {
    std::string suite = "all";
    cli::Limits limits;
    bool slow = false;
    std::string format = "plain";
};

std::vector<std::string> rat_row_strings(const std::vector<Rat>& row) {
    std::vector<std::string> out;
    out.reserve(row.size());
    for (const Rat& v : row) out.push_back(v.str());
    return out;
}

std::vector<std::string> coeff_strings(const Poly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const Rat& c : p.coeffs()) out.push_back(c.str());
    if (out.empty()) out.push_back("0");  // zero polynomial still shows one coefficient
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

void emit_json(const ordered_json& doc) { std::cout << doc.dump() << "\n"; }

// ---------------------------------------------------------------------------
// triangle / qtriangle

std::vector<std::vector<std::string>> triangle_rows(const TriangleArgs& args) {
    std::vector<std::vector<std::string>> rows;
    if (args.kind == "classical") {
        const ClassicalTriangle tri = classical_triangle(args.max_n);
        rows.push_back({"1"});  // row 0 is the A_0 = 1 convention
        for (int n = 1; n <= args.max_n; ++n) {
            std::vector<std::string> row;
            for (const Int& v : tri.row(n)) row.push_back(v.get_str());
            rows.push_back(std::move(row));
        }
    } else if (args.kind == "general") {
        const Progression prog{Rat::parse(args.a), Rat::parse(args.d)};
        const GeneralTriangle tri = general_triangle(prog, args.max_n);
        for (int n = 0; n <= args.max_n; ++n) {
            rows.push_back(rat_row_strings(tri.row(n)));
        }
    } else {
        const QTriangle tri = q_triangle(std::max(args.max_n, 1));
        for (int n = 1; n <= args.max_n; ++n) {
            std::vector<std::string> row;
            for (const Poly& p : tri.row(n)) row.push_back(p.str());
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

int cmd_triangle(const TriangleArgs& args) {
    if (args.has_entry) {
        std::string value;
        ordered_json value_json;
        if (args.kind == "classical") {
            const Int v = classical_number_closed(static_cast<int>(args.n), args.k);
            value = v.get_str();
            value_json = value;
        } else if (args.kind == "general") {
            const Progression prog{Rat::parse(args.a), Rat::parse(args.d)};
            value = general_number_closed(static_cast<int>(args.n), args.k, prog).str();
            value_json = value;
        } else {
            const QTriangle tri = q_triangle(static_cast<int>(args.n));
            const Poly& entry = tri.entry(static_cast<int>(args.n), args.k);
            value = entry.str();
            value_json = coeff_strings(entry);
        }
        if (args.format == "json") {
            ordered_json doc;
            doc["kind"] = args.kind;
            doc["n"] = args.n;
            doc["k"] = args.k;
            if (args.kind == "general") {
                doc["a"] = Rat::parse(args.a).str();
                doc["d"] = Rat::parse(args.d).str();
            }
            doc["value"] = value_json;
            emit_json(doc);
        } else {
            std::cout << value << "\n";
        }
        return kExitOk;
    }

    if (args.max_n < 0) {
        throw std::invalid_argument("triangle: --max-n is required (or --n with --k)");
    }
    if (args.kind == "q" && args.max_n < 1) {
        throw std::invalid_argument("triangle: q triangles start at n = 1");
    }
    const auto rows = triangle_rows(args);

    if (args.format == "json") {
        ordered_json doc;
        doc["kind"] = args.kind;
        doc["n"] = args.max_n;
        if (args.kind == "general") {
            doc["a"] = Rat::parse(args.a).str();
            doc["d"] = Rat::parse(args.d).str();
        }
        if (args.kind == "q") {
            // coefficient lists instead of rendered strings
            const QTriangle tri = q_triangle(args.max_n);
            ordered_json jrows = ordered_json::array();
            for (int n = 1; n <= args.max_n; ++n) {
                ordered_json jrow = ordered_json::array();
                for (const Poly& p : tri.row(n)) jrow.push_back(coeff_strings(p));
                jrows.push_back(std::move(jrow));
            }
            doc["rows"] = std::move(jrows);
        } else {
            doc["rows"] = rows;
        }
        emit_json(doc);
    } else if (args.format == "csv") {
        for (const auto& row : rows) {
            std::cout << join(row, ",") << "\n";
        }
    } else {
        const int first = args.kind == "q" ? 1 : 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::cout << "n=" << (first + static_cast<int>(i)) << ": "
                      << join(rows[i], args.kind == "q" ? ", " : " ") << "\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// poly

int cmd_poly(const PolyArgs& args) {
    const bool evaluate = !args.t.empty();
    if (args.kind == "q" && evaluate) {
        throw std::invalid_argument("poly: --t applies to kinds classical and general only");
    }

    if (args.kind == "q") {
        const BivariatePoly bp = q_poly(static_cast<int>(args.n));
        if (args.format == "json") {
            ordered_json doc;
            doc["kind"] = args.kind;
            doc["n"] = args.n;
            ordered_json jrows = ordered_json::array();
            for (const Poly& p : bp.t_coeffs()) jrows.push_back(coeff_strings(p));
            doc["rows"] = std::move(jrows);
            emit_json(doc);
        } else if (args.format == "csv") {
            for (const Poly& p : bp.t_coeffs()) {
                std::cout << join(coeff_strings(p), ",") << "\n";
            }
        } else {
            for (std::size_t k = 0; k < bp.t_terms(); ++k) {
                std::cout << "t^" << k << ": " << bp.t_coeff(k).str() << "\n";
            }
        }
        return kExitOk;
    }

    Poly poly;
    if (args.kind == "classical") {
        poly = classical_poly(static_cast<int>(args.n));
    } else {
        const Progression prog{Rat::parse(args.a), Rat::parse(args.d)};
        poly = general_poly(static_cast<int>(args.n), prog);
    }

    if (evaluate) {
        const Rat at = Rat::parse(args.t);
        const Rat value = poly.eval(at);
        if (args.format == "json") {
            ordered_json doc;
            doc["kind"] = args.kind;
            doc["n"] = args.n;
            if (args.kind == "general") {
                doc["a"] = Rat::parse(args.a).str();
                doc["d"] = Rat::parse(args.d).str();
            }
            doc["t"] = at.str();
            doc["value"] = value.str();
            emit_json(doc);
        } else {
            std::cout << value.str() << "\n";
        }
        return kExitOk;
    }

    const auto coeffs = coeff_strings(poly);
    if (args.format == "json") {
        ordered_json doc;
        doc["kind"] = args.kind;
        doc["n"] = args.n;
        if (args.kind == "general") {
            doc["a"] = Rat::parse(args.a).str();
            doc["d"] = Rat::parse(args.d).str();
        }
        doc["rows"] = ordered_json::array({coeffs});
        emit_json(doc);
    } else if (args.format == "csv") {
        std::cout << join(coeffs, ",") << "\n";
    } else {
        std::cout << join(coeffs, " ") << "\n" << poly.str() << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// powersum

int cmd_powersum(const PowersumArgs& args) {
    const Progression prog{Rat::parse(args.a), Rat::parse(args.d)};
    if (args.n < 0 || args.m < 0) {
        throw std::invalid_argument("powersum: --n and --m must be nonnegative");
    }
    Rat sum;
    for (long i = 1; i <= args.m; ++i) {
        sum += rat_pow(prog.term(i), static_cast<unsigned long>(args.n));
    }
    if (args.format == "json") {
        ordered_json doc;
        doc["kind"] = "powersum";
        doc["n"] = args.n;
        doc["a"] = prog.a.str();
        doc["d"] = prog.d.str();
        doc["m"] = args.m;
        doc["value"] = sum.str();
        emit_json(doc);
    } else {
        std::cout << sum.str() << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

const char* status_name(cli::Status s) {
    switch (s) {
        case cli::Status::Pass: return "PASS";
        case cli::Status::Fail: return "FAIL";
        case cli::Status::Xfail: return "XFAIL";
        case cli::Status::Xpass: return "XPASS";
    }
    return "?";
}

struct VerifyTotals {
    long pass = 0, fail = 0, xfail = 0, xpass = 0;
    long total() const { return pass + fail + xfail + xpass; }
    void add(cli::Status s) {
        switch (s) {
            case cli::Status::Pass: ++pass; break;
            case cli::Status::Fail: ++fail; break;
            case cli::Status::Xfail: ++xfail; break;
            case cli::Status::Xpass: ++xpass; break;
        }
    }
};

void print_verify_plain(const std::vector<cli::Record>& records, const VerifyTotals& totals,
                        bool partial) {
    // One line per identity family, in first-appearance order; detail lines
    // for every record that is not a plain PASS.
    std::vector<std::string> family_order;
    std::map<std::string, VerifyTotals> families;
    std::map<std::string, std::vector<const cli::Record*>> details;
    for (const cli::Record& r : records) {
        const std::string family = r.suite + "/" + r.identity;
        if (families.find(family) == families.end()) {
            family_order.push_back(family);
        }
        families[family].add(r.status);
        if (r.status != cli::Status::Pass) {
            details[family].push_back(&r);
        }
    }
    for (const std::string& family : family_order) {
        const VerifyTotals& t = families[family];
        const bool ok = t.fail == 0 && t.xpass == 0;
        std::cout << (ok ? "PASS" : "FAIL") << " " << family << " points=" << t.total();
        if (t.xfail > 0) std::cout << " xfail=" << t.xfail;
        std::cout << "\n";
        for (const cli::Record* r : details[family]) {
            std::cout << "  " << status_name(r->status) << " " << r->params;
            if (!r->where.empty()) {
                std::cout << " at " << r->where << ": lhs=" << r->lhs << " rhs=" << r->rhs;
            }
            if (r->status == cli::Status::Xfail) std::cout << " (documented mismatch)";
            std::cout << "\n";
        }
    }
    std::cout << "---\n";
    if (partial) std::cout << "partial report (resource bound hit)\n";
    std::cout << "checks=" << totals.total() << " pass=" << totals.pass << " fail=" << totals.fail
              << " xfail=" << totals.xfail << " xpass=" << totals.xpass << "\n";
}

void print_verify_json(const std::string& suite, const cli::Limits& limits,
                       const std::vector<cli::Record>& records, const VerifyTotals& totals,
                       bool partial) {
    ordered_json doc;
    doc["kind"] = "verify";
    doc["suite"] = suite;
    doc["limits"] = {{"max_n", limits.max_n}, {"max_m", limits.max_m},
                     {"order", limits.order}, {"x", limits.x},
                     {"bound", limits.bound},  {"qbound", limits.qbound}};
    ordered_json jrecords = ordered_json::array();
    for (const cli::Record& r : records) {
        ordered_json jr;
        jr["suite"] = r.suite;
        jr["identity"] = r.identity;
        jr["params"] = r.params;
        jr["status"] = status_name(r.status);
        if (!r.where.empty()) {
            jr["where"] = r.where;
            jr["lhs"] = r.lhs;
            jr["rhs"] = r.rhs;
        }
        jrecords.push_back(std::move(jr));
    }
    doc["records"] = std::move(jrecords);
    doc["summary"] = {{"checks", totals.total()}, {"pass", totals.pass},
                      {"fail", totals.fail},      {"xfail", totals.xfail},
                      {"xpass", totals.xpass},    {"partial", partial}};
    emit_json(doc);
}

int cmd_verify(VerifyArgs args) {
    if (args.slow) {
        args.limits.bound = 10;
        args.limits.qbound = 7;
    }
    std::vector<std::string> suites;
    if (args.suite == "all") {
        suites = cli::suite_names();
    } else {
        suites = {args.suite};
    }

    std::vector<cli::Record> records;
    bool partial = false;
    std::string resource_message;
    try {
        for (const std::string& s : suites) {
            cli::run_suite(s, args.limits, records);
        }
    } catch (const ResourceError& e) {
        partial = true;
        resource_message = e.what();
    }

    VerifyTotals totals;
    for (const cli::Record& r : records) totals.add(r.status);

    if (args.format == "json") {
        print_verify_json(args.suite, args.limits, records, totals, partial);
    } else {
        print_verify_plain(records, totals, partial);
    }
    if (partial) {
        std::cerr << "verify: " << resource_message << "\n";
        return kExitResource;
    }
    return (totals.fail + totals.xpass) == 0 ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
    CLI::App app{"Exact Eulerian numbers, polynomials, and identity verification"};
    app.require_subcommand(1);

    const std::vector<std::string> kinds = {"classical", "general", "q"};
    const std::vector<std::string> formats = {"json", "csv", "plain"};

    TriangleArgs tri_args;
    CLI::App* tri = app.add_subcommand("triangle", "Triangle of Eulerian numbers");
    tri->add_option("--kind", tri_args.kind)->check(CLI::IsMember(kinds));
    tri->add_option("--max-n", tri_args.max_n, "Largest row to compute");
    CLI::Option* tri_n = tri->add_option("--n", tri_args.n, "Row for a single-entry lookup");
    CLI::Option* tri_k = tri->add_option("--k", tri_args.k, "Column for a single-entry lookup");
    tri->add_option("--a", tri_args.a, "First term (general kind)");
    tri->add_option("--d", tri_args.d, "Common difference (general kind)");
    tri->add_option("--format", tri_args.format)->check(CLI::IsMember(formats));
    tri_n->needs(tri_k);
    tri_k->needs(tri_n);

    TriangleArgs qtri_args;
    CLI::App* qtri = app.add_subcommand("qtriangle", "Triangle of q-Eulerian numbers");
    qtri->add_option("--max-n", qtri_args.max_n, "Largest row to compute");
    CLI::Option* qtri_n = qtri->add_option("--n", qtri_args.n);
    CLI::Option* qtri_k = qtri->add_option("--k", qtri_args.k);
    qtri->add_option("--format", qtri_args.format)->check(CLI::IsMember(formats));
    qtri_n->needs(qtri_k);
    qtri_k->needs(qtri_n);

    PolyArgs poly_args;
    CLI::App* poly = app.add_subcommand("poly", "Eulerian polynomial coefficients");
    poly->add_option("--kind", poly_args.kind)->check(CLI::IsMember(kinds));
    poly->add_option("--n", poly_args.n)->required();
    poly->add_option("--a", poly_args.a);
    poly->add_option("--d", poly_args.d);
    poly->add_option("--t", poly_args.t, "Evaluate at this rational instead of printing coefficients");
    poly->add_option("--format", poly_args.format)->check(CLI::IsMember(formats));

    PowersumArgs pow_args;
    CLI::App* pow = app.add_subcommand("powersum", "Exact sum of progression powers");
    pow->add_option("--a", pow_args.a);
    pow->add_option("--d", pow_args.d);
    pow->add_option("--n", pow_args.n)->required();
    pow->add_option("--m", pow_args.m)->required();
    pow->add_option("--format", pow_args.format)->check(CLI::IsMember(formats));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run the identity verification suites");
    verify->add_option("--suite", verify_args.suite)
        ->check(CLI::IsMember({"all", "classical", "general", "q", "oracle"}));
    verify->add_option("--max-n", verify_args.limits.max_n);
    verify->add_option("--m", verify_args.limits.max_m, "Largest summation length");
    verify->add_option("--order", verify_args.limits.order, "Series order for generating-function checks");
    verify->add_option("--x", verify_args.limits.x, "Largest evaluation point for the q identity");
    verify->add_flag("--slow", verify_args.slow, "Raise enumeration bounds to 10 (oracle) / 7 (q)");
    verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"json", "plain"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help on stdout, errors on stderr
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (tri->parsed()) {
        tri_args.has_entry = tri_n->count() > 0;
        return cmd_triangle(tri_args);
    }
    if (qtri->parsed()) {
        qtri_args.kind = "q";
        qtri_args.has_entry = qtri_n->count() > 0;
        return cmd_triangle(qtri_args);
    }
    if (poly->parsed()) return cmd_poly(poly_args);
    if (pow->parsed()) return cmd_powersum(pow_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
