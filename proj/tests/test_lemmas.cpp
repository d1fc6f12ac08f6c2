#include "gumball/lemmas.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace gumball;

namespace {

// Independent f: plain term-by-term summation.
Rat naive_f(unsigned n, unsigned m) {
    Rat x(m, n);
    Rat total(0);
    for (unsigned k = 0; k + 1 <= m; ++k) {
        total += Rat(binom_coeff(n, k)) * pow_rat(x, k) *
                 pow_rat(Rat(1) - x, static_cast<long>(n - k));
    }
    return total;
}

}  // namespace

TEST_CASE("lemma3 margins are positive at the spot checks") {
    CHECK(lemma3_margin(100, 12) > Rat(0));
    CHECK(lemma3_margin(100, 12) == naive_f(100, 12) - Rat(3, 8));
    CHECK(lemma3_margin(128, 64) > Rat(0));
    CHECK(lemma3_margin(1000, 500) > Rat(0));
    CHECK_THROWS_AS(lemma3_margin(100, 11), std::domain_error);
    CHECK_THROWS_AS(lemma3_margin(99, 12), std::domain_error);
    CHECK_THROWS_AS(lemma3_margin(100, 52), std::domain_error);  // m > n/2 + 1
    CHECK_NOTHROW(lemma3_margin(100, 51));
}

TEST_CASE("lemma4 scan flags the known small violation") {
    ScanReport rep = lemma4_scan(4, 5, 2);
    CHECK_FALSE(rep.all_pass);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].n == 4);
    CHECK(rep.violations[0].m == 1);
    CHECK(rep.violations[0].f_m == Rat(81, 256));
    CHECK(rep.violations[0].f_m1 == Rat(5, 16));
    CHECK(rep.largest_failing_n == 4);
}

TEST_CASE("lemma4 scan is clean from 40 up to 100") {
    ScanReport rep = lemma4_scan(40, 100, 11);
    CHECK(rep.all_pass);
    CHECK(rep.violations.empty());
    CHECK_FALSE(rep.largest_failing_n.has_value());
}

TEST_CASE("lemma4 scan violations reproduce through the naive route") {
    ScanReport rep = lemma4_scan(3, 40, 11);
    CHECK_FALSE(rep.all_pass);
    CHECK(rep.violations.size() == 119);
    CHECK(rep.largest_failing_n == 31);
    for (const auto& v : rep.violations) {
        CHECK(v.f_m == naive_f(v.n, v.m));
        CHECK(v.f_m1 == naive_f(v.n, v.m + 1));
        CHECK(v.f_m >= v.f_m1);
        CHECK(v.n <= 31);
    }
    bool has_4_1 = false;
    for (const auto& v : rep.violations)
        has_4_1 = has_4_1 || (v.n == 4 && v.m == 1);
    CHECK(has_4_1);
}

TEST_CASE("lemma4 scan respects the stride") {
    ScanReport rep = lemma4_scan(100, 300, 11, 37);
    CHECK(rep.all_pass);
    CHECK(rep.stride == 37);
    // 100, 137, 174, 211, 248, 285: nothing to verify beyond a clean pass,
    // the cell count shows up in the merged report downstream.
}

TEST_CASE("merging partial scans is order-insensitive and canonical") {
    ScanReport left = lemma4_scan(3, 10, 11);
    ScanReport right = lemma4_scan(10, 20, 11);
    ScanReport merged = merge_scan_reports({right, left});
    ScanReport direct = lemma4_scan(3, 20, 11);
    REQUIRE(merged.violations.size() == direct.violations.size());
    for (size_t i = 0; i < merged.violations.size(); ++i) {
        CHECK(merged.violations[i].n == direct.violations[i].n);
        CHECK(merged.violations[i].m == direct.violations[i].m);
        CHECK(merged.violations[i].f_m == direct.violations[i].f_m);
    }
    CHECK(merged.largest_failing_n == direct.largest_failing_n);
}

TEST_CASE("final inequality at n = 3200, m = 1: proven with lhs near e - lambda") {
    CertifiedVerdict v = lemma4_final_inequality(3200, 1, Rat::parse("1e-9"));
    CHECK(v.status == VerdictStatus::Proven);
    CHECK(v.rhs == Rat(2));
    CHECK(v.lhs.lo > Rat::parse("1.7187"));
    CHECK(v.lhs.hi < Rat::parse("1.7188"));
}

TEST_CASE("a coarse tolerance still decides away from the boundary") {
    // The remainder construction never uses fewer than nine terms, so even
    // tol = 1 produces enclosures tight enough for clear-cut cells.
    CHECK(lemma4_final_inequality(3200, 11, Rat(1)).status == VerdictStatus::Disproven);
    CHECK(lemma4_final_inequality(3200, 1, Rat(1)).status == VerdictStatus::Proven);
}

TEST_CASE("near the flip the coarse enclosure straddles: inconclusive") {
    // n = 4247 is the last n where the m = 9 inequality still fails; the
    // margin there is thinner than the coarse enclosure.
    CertifiedVerdict coarse = lemma4_final_inequality(4247, 9, Rat(1));
    CHECK(coarse.status == VerdictStatus::Inconclusive);
    CHECK(coarse.detail.find("tighten") != std::string::npos);
    CHECK(coarse.lhs.lo <= coarse.rhs);
    CHECK(coarse.lhs.hi >= coarse.rhs);
    // Tightening resolves it.
    CHECK(lemma4_final_inequality(4247, 9, Rat::parse("1e-30")).status ==
          VerdictStatus::Disproven);
}

TEST_CASE("final inequality across m at n = 3200: the large-m cases fail") {
    // The certified engine proves m <= 8 and refutes m = 9, 10, 11 at this n;
    // the refuted cases become proven once n is large enough, consistent
    // with the claimed monotonicity in n.
    Rat tol = Rat::parse("1e-30");
    for (unsigned m = 1; m <= 8; ++m)
        CHECK(lemma4_final_inequality(3200, m, tol).status == VerdictStatus::Proven);
    for (unsigned m = 9; m <= 11; ++m)
        CHECK(lemma4_final_inequality(3200, m, tol).status == VerdictStatus::Disproven);
    CHECK(lemma4_final_inequality(4248, 9, tol).status == VerdictStatus::Proven);
    CHECK(lemma4_final_inequality(4247, 9, tol).status == VerdictStatus::Disproven);
    CHECK(lemma4_final_inequality(5840, 10, tol).status == VerdictStatus::Proven);
    CHECK(lemma4_final_inequality(7787, 11, tol).status == VerdictStatus::Proven);
    CHECK(lemma4_final_inequality(7786, 11, tol).status == VerdictStatus::Disproven);
}

TEST_CASE("proven verdicts survive tightening the tolerance") {
    for (const char* tol : {"1e-20", "1e-30", "1e-45"}) {
        CertifiedVerdict v = lemma4_final_inequality(3200, 5, Rat::parse(tol));
        CHECK(v.status == VerdictStatus::Proven);
    }
    RatInterval wide = lemma4_final_inequality(3200, 5, Rat::parse("1e-20")).lhs;
    RatInterval tight = lemma4_final_inequality(3200, 5, Rat::parse("1e-40")).lhs;
    CHECK(wide.contains(tight));
}

TEST_CASE("the limiting sum inequality is proven for every m up to 11") {
    for (unsigned m = 1; m <= 11; ++m) {
        CertifiedVerdict v = lemma4_sum_bound_check(m, Rat::parse("1e-30"));
        CHECK(v.status == VerdictStatus::Proven);
    }
}

TEST_CASE("domain errors of the certified operations") {
    CHECK_THROWS_AS(lemma4_final_inequality(3200, 0, Rat(1)), std::domain_error);
    CHECK_THROWS_AS(lemma4_final_inequality(5, 4, Rat(1)), std::domain_error);
    CHECK_THROWS_AS(lemma4_final_inequality(3200, 3, Rat(0)), std::domain_error);
    CHECK_THROWS_AS(lemma4_n_monotonicity_probe(3200, 3200, 11), std::domain_error);
    CHECK_THROWS_AS(lemma4_n_monotonicity_probe(12, 6, 11), std::domain_error);
}

TEST_CASE("monotonicity probe separates lambda enclosures") {
    CHECK(lemma4_n_monotonicity_probe(3200, 6400, 11).passed);
    CHECK(lemma4_n_monotonicity_probe(200, 400, 5).passed);
    // Adjacent n and a coarse tolerance: still separated, since the
    // nine-term floor keeps lambda enclosures far tighter than their gap.
    ProbeResult adjacent = lemma4_n_monotonicity_probe(3200, 3201, 11, Rat(1, 2));
    CHECK(adjacent.passed);
    CHECK(adjacent.detail.find("certified") != std::string::npos);
}

TEST_CASE("tail inequality: exact checks and the sweep") {
    CHECK(theorem_tail_check(100));
    CHECK(theorem_tail_check(1000));
    for (unsigned n = 3; n < 13; ++n)
        CHECK_FALSE(theorem_tail_check(n));
    for (unsigned n = 13; n <= 120; ++n)
        CHECK(theorem_tail_check(n));
    CHECK(theorem_tail_smallest_n(100) == 13);
    CHECK_FALSE(theorem_tail_smallest_n(10).has_value());
    CHECK_THROWS_AS(theorem_tail_check(2), std::domain_error);
}

TEST_CASE("tail inequality factored form equals the expanded form") {
    for (unsigned n : {3u, 5u, 13u, 99u, 250u}) {
        Rat factored = pow_rat(Rat(n - 2, n), static_cast<long>(n - 1)) * Rat(3ul * n - 2, n);
        Rat expanded = pow_rat(Rat(n - 2, n), static_cast<long>(n)) +
                       Rat(2) * pow_rat(Rat(n - 2, n), static_cast<long>(n - 1));
        CHECK(factored == expanded);
    }
}

TEST_CASE("verify_iid hand cases") {
    SearchReport rep2 = verify_iid(2);
    CHECK(rep2.min_value == Rat(4, 9));
    REQUIRE(rep2.argmin.size() == 1);
    CHECK(rep2.argmin[0] == Config::all_j(2, 3));
    CHECK(rep2.conjecture_holds);
    CHECK(rep2.argmin_unique_at_conjecture);

    SearchReport rep5 = verify_iid(5);
    CHECK(rep5.min_value == Rat(3125, 7776));
    CHECK(rep5.argmin_unique_at_conjecture);
    CHECK_THROWS_AS(verify_iid(1), std::domain_error);
}

TEST_CASE("the iid minimum is the equal-j slice of the general search") {
    for (unsigned n = 2; n <= 10; ++n) {
        SearchReport iid = verify_iid(n);
        Rat slice_min(2);
        for (unsigned j = 2; j <= n + 1; ++j)
            slice_min = std::min(slice_min, eval_config(Config::all_j(n, j)));
        CHECK(iid.min_value == slice_min);
        CHECK(iid.min_value == verify_general(n).min_value);
    }
}
