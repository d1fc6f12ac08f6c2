#include "gumball/rational.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace gumball;
using testsupport::Rng;

TEST_CASE("binom_coeff small and boundary values") {
    CHECK(binom_coeff(5, 2) == Int(10));
    CHECK(binom_coeff(7, 0) == Int(1));
    CHECK(binom_coeff(7, 7) == Int(1));
    CHECK(binom_coeff(0, 0) == Int(1));
    CHECK_THROWS_AS(binom_coeff(3, 4), std::domain_error);
}

TEST_CASE("binom_coeff against a Pascal-triangle oracle") {
    // Oracle: the additive recurrence, no factorials or gcds involved.
    const unsigned top = 40;
    std::vector<std::vector<Int>> pascal(top + 1);
    for (unsigned n = 0; n <= top; ++n) {
        pascal[n].assign(n + 1, Int(1));
        for (unsigned k = 1; k < n; ++k)
            pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    for (unsigned n = 0; n <= top; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(binom_coeff(n, k) == pascal[n][k]);
    CHECK(pascal[40][20] == Int("137846528820"));
    CHECK(binom_coeff(40, 20) == Int("137846528820"));
}

TEST_CASE("pow_rat examples") {
    CHECK(pow_rat(Rat(2, 3), 2) == Rat(4, 9));
    CHECK(pow_rat(Rat(7, 5), 0) == Rat(1));
    CHECK(pow_rat(Rat(0), 0) == Rat(1));
    CHECK(pow_rat(Rat(1, 2), 10) == Rat(1, 1024));
    CHECK(pow_rat(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(pow_rat(Rat(-2, 3), 3) == Rat(-8, 27));
    CHECK(pow_rat(Rat(-2, 3), -3) == Rat(-27, 8));
    CHECK_THROWS_AS(pow_rat(Rat(0), -1), std::domain_error);
}

TEST_CASE("canonical form is a fixed point on random fractions") {
    Rng rng(7001);
    for (int i = 0; i < 300; ++i) {
        long a = static_cast<long>(testsupport::uniform(rng, 0, 4000)) - 2000;
        long b = static_cast<long>(testsupport::uniform(rng, 0, 4000)) - 2000;
        if (b == 0)
            continue;
        Rat r{Int(a), Int(b)};
        CHECK(r.den() > 0);
        Int g;
        mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
        CHECK(g == 1);
        // Re-reducing changes nothing.
        CHECK(Rat(r.num(), r.den()) == r);
    }
}

TEST_CASE("field laws on random triples") {
    Rng rng(7002);
    for (int i = 0; i < 200; ++i) {
        Rat a = testsupport::random_rat(rng, 50, 30);
        Rat b = testsupport::random_rat(rng, 50, 30);
        Rat c = testsupport::random_rat(rng, 50, 30);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rat(0));
        if (!a.is_zero()) {
            CHECK(a * a.reciprocal() == Rat(1));
            CHECK(a / a == Rat(1));
        }
        CHECK(a - b == -(b - a));
    }
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("ordering by cross multiplication") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-6, -4) == Rat(3, 2));
    CHECK(Rat(7, 2) > Rat(10, 3));
    CHECK(Rat(0) <= Rat(0));
}

TEST_CASE("parsing fractions, decimals and scientific notation") {
    CHECK(Rat::parse("4/9") == Rat(4, 9));
    CHECK(Rat::parse("-12/8") == Rat(-3, 2));
    CHECK(Rat::parse("42") == Rat(42));
    CHECK(Rat::parse("-0") == Rat(0));
    CHECK(Rat::parse("3.25") == Rat(13, 4));
    CHECK(Rat::parse("-0.5") == Rat(-1, 2));
    CHECK(Rat::parse("1e-30") == Rat(Int(1), pow_int(Int(10), 30)));
    CHECK(Rat::parse("2.5e2") == Rat(250));
    CHECK(Rat::parse("2.5E-1") == Rat(1, 4));
    CHECK_THROWS_AS(Rat::parse(""), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("abc"), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("1.2.3"), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("1e"), std::domain_error);
}

TEST_CASE("fraction rendering is explicit") {
    CHECK(Rat(4, 9).to_fraction_string() == "4/9");
    CHECK(Rat(-1, 3).to_fraction_string() == "-1/3");
    CHECK(Rat(5).to_fraction_string() == "5/1");
    CHECK(Rat(0).to_fraction_string() == "0/1");
}

TEST_CASE("decimal rendering rounds to 12 significant digits") {
    CHECK(Rat(0).to_decimal_string() == "0");
    CHECK(Rat(1, 2).to_decimal_string() == "0.5");
    CHECK(Rat(-1, 2).to_decimal_string() == "-0.5");
    CHECK(Rat(1, 3).to_decimal_string() == "0.333333333333");
    CHECK(Rat(2, 3).to_decimal_string() == "0.666666666667");
    CHECK(Rat(4, 9).to_decimal_string() == "0.444444444444");
    CHECK(Rat(1024).to_decimal_string() == "1024");
    CHECK(Rat(1, 1024).to_decimal_string() == "0.0009765625");
    CHECK(Rat(Int(1), pow_int(Int(10), 30)).to_decimal_string() == "1e-30");
    CHECK(Rat(pow_int(Int(10), 21), Int(1)).to_decimal_string() == "1e21");
    CHECK(Rat(999999999999999L).to_decimal_string() == "1e15");  // rounds up, rolls over
    CHECK(Rat(1, 8192).to_decimal_string(3) == "0.000122");
    CHECK(Rat(26, 10).to_decimal_string(1) == "3");
}

TEST_CASE("decimal rendering round-trips through parse within an ulp") {
    Rng rng(7003);
    for (int i = 0; i < 200; ++i) {
        Rat r = testsupport::random_rat(rng, 100000, 99991);
        if (r.is_zero())
            continue;
        Rat back = Rat::parse(r.to_decimal_string());
        Rat err = (back - r).abs() / r.abs();
        CHECK(err <= Rat(Int(1), pow_int(Int(10), 11)));
    }
}
