#include <doctest.h>

#include <numeric>
#include <vector>

#include "eulerian/integer.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/power_series.hpp"
#include "eulerian/rational.hpp"
#include "test_util.hpp"

using namespace eulerian;
using eulerian::test::Gen;
using eulerian::test::P;
using eulerian::test::R;

// Independent oracle: Pascal's triangle by repeated addition.
static Int pascal_binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    std::vector<Int> row{1};
    for (long r = 1; r <= n; ++r) {
        std::vector<Int> next(static_cast<std::size_t>(r) + 1, Int(0));
        next[0] = 1;
        next[static_cast<std::size_t>(r)] = 1;
        for (long c = 1; c < r; ++c) {
            next[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c - 1)] +
                                                row[static_cast<std::size_t>(c)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

TEST_CASE("binomial: small values and out-of-range convention") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(7, 8) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial: Pascal-triangle oracle") {
    CHECK(binomial(30, 15) == Int("155117520"));
    CHECK(pascal_binomial(30, 15) == Int("155117520"));
    for (long n = 0; n <= 20; ++n) {
        for (long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == pascal_binomial(n, k));
        }
    }
}

TEST_CASE("factorial and int_pow") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == Int("479001600"));
    CHECK(int_pow(Int(3), 4) == 81);
    CHECK(int_pow(Int(0), 0) == 1);
    CHECK(int_pow(Int(-2), 3) == -8);
}

TEST_CASE("Rat: canonical form") {
    CHECK(Rat(Int(4), Int(6)).str() == "2/3");
    CHECK(Rat(Int(3), Int(-6)).str() == "-1/2");
    CHECK(Rat(Int(0), Int(7)).str() == "0");
    CHECK(Rat(Int(0), Int(7)).den() == 1);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("Rat: parse round-trips the canonical textual form") {
    for (const char* text : {"0", "5", "-5", "3/7", "-3/7", "123456789012345678901/2"}) {
        const Rat r = Rat::parse(text);
        CHECK(r.str() == text);
        CHECK(Rat::parse(r.str()) == r);
    }
    CHECK(Rat::parse("+4").str() == "4");
    CHECK(Rat::parse("4/6").str() == "2/3");
    CHECK(Rat::parse("4/-6").str() == "-2/3");
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1 /2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
}

TEST_CASE("Rat: operation results stay canonical (re-normalizing is a no-op)") {
    Gen gen(20240801);
    for (int trial = 0; trial < 200; ++trial) {
        const Rat x = gen.rat();
        const Rat y = gen.rat();
        for (const Rat& r : {x + y, x - y, x * y}) {
            CHECK(r.den() > 0);
            Int g;
            mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
            CHECK(g == 1);
            CHECK(Rat(r.num(), r.den()) == r);
        }
        if (!y.is_zero()) {
            const Rat q = x / y;
            CHECK(Rat(q.num(), q.den()) == q);
            CHECK(q * y == x);
        }
    }
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("Poly: construction invariants and degree sentinel") {
    const Poly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == Poly::kZeroDegree);
    CHECK(zero.coeffs().empty());

    const Poly trimmed = P({"1", "2", "0", "0"});
    CHECK(trimmed.degree() == 1);
    CHECK(P({"0", "0"}).is_zero());
    CHECK(Poly(Rat(0)).is_zero());
}

TEST_CASE("poly_mul: worked products") {
    CHECK(P({"1", "1"}) * P({"1", "-1"}) == P({"1", "0", "-1"}));
    CHECK((P({"1", "4", "1"}) * Poly()).is_zero());
    CHECK(P({"1", "4", "1"}) * P({"1", "1"}) == P({"1", "5", "5", "1"}));
}

TEST_CASE("poly_eval: worked values") {
    CHECK(P({"1", "4", "1"}).eval(Rat(1)) == Rat(6));
    CHECK(Poly().eval(R("5/7")) == Rat(0));
    CHECK(P({"1", "13", "4"}).eval(Rat(2)) == Rat(43));
}

TEST_CASE("Poly: ring axioms on randomized inputs") {
    Gen gen(20240802);
    for (int trial = 0; trial < 60; ++trial) {
        const Poly a = gen.poly();
        const Poly b = gen.poly();
        const Poly c = gen.poly();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + (b + c) == (a + b) + c);
        if (!a.is_zero() && !b.is_zero()) {
            CHECK((a * b).degree() == a.degree() + b.degree());
        }
    }
}

TEST_CASE("Poly: evaluation is a ring homomorphism") {
    Gen gen(20240803);
    for (int trial = 0; trial < 60; ++trial) {
        const Poly a = gen.poly();
        const Poly b = gen.poly();
        const Rat x = gen.rat(12);
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
}

TEST_CASE("Poly: derivative and rendering") {
    CHECK(P({"1", "4", "1"}).derivative() == P({"4", "2"}));
    CHECK(Poly().derivative().is_zero());
    CHECK(P({"1", "4", "1"}).str() == "1 + 4*t + t^2");
    CHECK(P({"0", "-1", "0", "1/2"}).str() == "-t + 1/2*t^3");
    CHECK(Poly().str() == "0");
    CHECK(P({"0", "1"}, Var::q).str() == "q");
}

TEST_CASE("series_mul: worked products and the unit series") {
    USeries one_plus_u(2);
    one_plus_u.set_coeff(0, Poly(Rat(1)));
    one_plus_u.set_coeff(1, Poly(Rat(1)));
    USeries one_minus_u(2);
    one_minus_u.set_coeff(0, Poly(Rat(1)));
    one_minus_u.set_coeff(1, Poly(Rat(-1)));

    const USeries prod = series_mul(one_plus_u, one_minus_u);
    CHECK(prod.coeff(0) == Poly(Rat(1)));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == Poly(Rat(-1)));

    // Multiplying by the unit series is the identity.
    Gen gen(20240804);
    USeries s(4);
    for (std::size_t i = 0; i <= 4; ++i) s.set_coeff(i, gen.poly());
    CHECK(series_mul(s, USeries::constant(Poly(Rat(1)), 4)) == s);

    // exp(u) * exp(-u) truncates to 1.
    const USeries expu = series_exp_linear(Poly(Rat(1)), 4);
    const USeries expnegu = series_exp_linear(Poly(Rat(-1)), 4);
    CHECK(series_mul(expu, expnegu) == USeries::constant(Poly(Rat(1)), 4));

    USeries other_order(3);
    CHECK_THROWS_AS(series_mul(s, other_order), std::invalid_argument);
}

TEST_CASE("series_exp_linear: known expansions") {
    const USeries e0 = series_exp_linear(Poly(), 3);
    CHECK(e0.coeff(0) == Poly(Rat(1)));
    for (std::size_t n = 1; n <= 3; ++n) CHECK(e0.coeff(n).is_zero());

    const Poly t_minus_1 = P({"-1", "1"});
    const USeries e1 = series_exp_linear(t_minus_1, 2);
    CHECK(e1.coeff(0) == Poly(Rat(1)));
    CHECK(e1.coeff(1) == t_minus_1);
    CHECK(e1.coeff(2) == P({"1/2", "-1", "1/2"}));

    const USeries e2 = series_exp_linear(t_minus_1 * Rat(2), 3);
    CHECK(e2.coeff(3) == P({"-4/3", "4", "-4", "4/3"}));
}

TEST_CASE("series_mul: associativity on randomized inputs") {
    Gen gen(20240805);
    for (int trial = 0; trial < 20; ++trial) {
        USeries a(3), b(3), c(3);
        for (std::size_t i = 0; i <= 3; ++i) {
            a.set_coeff(i, gen.poly(3));
            b.set_coeff(i, gen.poly(3));
            c.set_coeff(i, gen.poly(3));
        }
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        CHECK(series_mul(a, b) == series_mul(b, a));
    }
}

TEST_CASE("series_exp_linear: exponential homomorphism") {
    Gen gen(20240806);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly c1 = gen.poly(3);
        const Poly c2 = gen.poly(3);
        CHECK(series_mul(series_exp_linear(c1, 5), series_exp_linear(c2, 5)) ==
              series_exp_linear(c1 + c2, 5));
    }
}
