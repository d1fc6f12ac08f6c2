// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. An optional argv[1] selects a single criterion.

#include "gumball/cli.hpp"
#include "gumball/lemmas.hpp"
#include "gumball/report.hpp"
#include "gumball/search.hpp"
#include "gumball/selftest.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace gumball;
using report::json;

namespace {

json run_cli_json(std::vector<std::string> args, int& exit_code) {
    args.push_back("--format");
    args.push_back("json");
    std::string out;
    exit_code = cli::run_for_test(args, &out);
    return json::parse(out);
}

// 1. i.i.d. sweep over 2 <= n <= 99: unique minimum at j = n+1, exactly.
bool criterion1(std::string& detail) {
    int code = 0;
    json env = run_cli_json({"verify-iid", "--n-min", "2", "--n-max", "99",
                             "--workers", "2"},
                            code);
    std::ostringstream os;
    os << "exit " << code << ", verdict " << env.at("verdict").get<std::string>()
       << ", n checked " << env.at("values").at("n_checked");
    detail = os.str();
    return code == 0 && env.at("verdict") == "confirmed";
}

// 2. General verification for 2 <= N <= 10, plus prune/no-prune agreement
//    for N <= 8.
bool criterion2(std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    for (unsigned n = 2; n <= 10; ++n) {
        int code = 0;
        json env = run_cli_json({"verify-general", "--n", std::to_string(n)}, code);
        Rat expected = pow_rat(Rat(n, n + 1), static_cast<long>(n));
        bool this_ok =
            code == 0 && env.at("verdict") == "confirmed" &&
            env.at("values").at("min_value").at("exact") == expected.to_fraction_string() &&
            env.at("values").at("report").at("argmin_unique_at_conjecture") == true;
        if (!this_ok) {
            ok = false;
            os << "n=" << n << " failed (exit " << code << "); ";
        }
    }
    for (unsigned n = 2; n <= 8; ++n) {
        SearchOptions pruned{.prune = true};
        SearchOptions full{.prune = false};
        SearchReport a = verify_general(n, pruned);
        SearchReport b = verify_general(n, full);
        if (a.min_value != b.min_value || a.argmin != b.argmin) {
            ok = false;
            os << "prune mismatch at n=" << n << "; ";
        }
    }
    if (ok)
        os << "N = 2..10 confirmed, prune == no-prune for N <= 8";
    detail = os.str();
    return ok;
}

// 3. Full monotonicity scan 100 <= n < 3200, m <= 10 transitions, plus the
//    stride-37 quick subset.
bool criterion3(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    int code_full = 0;
    json full = run_cli_json({"scan-lemma4", "--n-lo", "100", "--n-hi", "3200",
                              "--m-max", "11", "--workers", "2"},
                             code_full);
    double full_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    auto t1 = std::chrono::steady_clock::now();
    int code_stride = 0;
    json strided = run_cli_json({"scan-lemma4", "--n-lo", "100", "--n-hi", "3200",
                                 "--m-max", "11", "--stride", "37", "--workers", "2"},
                                code_stride);
    double stride_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();

    std::ostringstream os;
    os << "full scan " << full.at("violations").size() << " violations in " << full_s
       << "s; stride-37 subset " << strided.at("violations").size() << " violations in "
       << stride_s << "s";
    detail = os.str();
    return code_full == 0 && full.at("verdict") == "confirmed" && code_stride == 0 &&
           strided.at("verdict") == "confirmed";
}

// 4. Small-n boundary: violations only below a threshold, the largest
//    failing n reported, (4, 1) among them with the known exact values.
bool criterion4(std::string& detail) {
    ScanReport rep = lemma4_scan(3, 100, 11);
    bool has_known = false;
    unsigned above_31 = 0;
    for (const auto& v : rep.violations) {
        if (v.n == 4 && v.m == 1 && v.f_m == Rat(81, 256) && v.f_m1 == Rat(5, 16))
            has_known = true;
        if (v.n > 31)
            ++above_31;
    }
    std::ostringstream os;
    os << rep.violations.size() << " violations, largest failing n = "
       << (rep.largest_failing_n ? std::to_string(*rep.largest_failing_n) : "none");
    detail = os.str();
    return !rep.all_pass && rep.largest_failing_n == 31 && has_known && above_31 == 0;
}

// 5. Certified final inequality at n = 3200 for every m <= 11.
bool criterion5(std::string& detail) {
    int code = 0;
    json env = run_cli_json({"certify-lemma4-final", "--n", "3200", "--tol", "1e-30"}, code);
    std::ostringstream os;
    os << "exit " << code << ": " << env.at("values").at("proven") << " proven, "
       << env.at("values").at("disproven") << " disproven, "
       << env.at("values").at("inconclusive") << " inconclusive of m = 1..11";
    for (const auto& item : env.at("values").at("results")) {
        if (item.at("status") != "proven")
            os << "; m=" << item.at("m") << " " << item.at("status").get<std::string>();
    }
    detail = os.str();
    return code == 0 && env.at("verdict") == "confirmed";
}

// 6. Lemma 3 spot bounds, exact.
bool criterion6(std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    for (auto [n, m] : {std::pair<unsigned, unsigned>{100, 12},
                        {128, 64},
                        {1000, 12},
                        {1000, 500}}) {
        Rat margin = lemma3_margin(n, m);
        os << "f(" << n << "," << m << ") - 3/8 = " << margin.to_decimal_string() << "; ";
        ok = ok && margin.sign() >= 0;
    }
    detail = os.str();
    return ok;
}

// 7. Tail inequality for 100 <= n <= 5000 plus the smallest-n sweep.
bool criterion7(std::string& detail) {
    int code = 0;
    json env = run_cli_json({"tail-check", "--n-min", "100", "--n-max", "5000",
                             "--find-smallest", "--workers", "2"},
                            code);
    std::ostringstream os;
    os << "exit " << code << ", range failures "
       << env.at("values").at("range").at("failures") << ", smallest n = "
       << env.at("values").at("smallest_n");
    detail = os.str();
    return code == 0 && env.at("values").at("range").at("failures") == 0 &&
           env.at("values").at("smallest_n") == 13;
}

// 8. Property suites at the mandated sizes.
bool criterion8(std::string& detail) {
    SelftestOptions opts;  // 1000 / 500 / 200 / 12 plus the exp references
    std::vector<SuiteResult> suites = run_selftest(opts);
    std::ostringstream os;
    bool ok = true;
    for (const auto& s : suites) {
        os << s.name << " " << s.cases << " cases";
        if (!s.passed()) {
            ok = false;
            os << " (" << s.failures << " FAILED, first: " << s.first_failure << ")";
        }
        os << "; ";
    }
    detail = os.str();
    return ok;
}

struct Criterion {
    int id;
    const char* title;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "i.i.d. theorem sweep 2 <= n <= 99", criterion1},
        {2, "general-case verification 2 <= N <= 10", criterion2},
        {3, "lemma 4 scan 100 <= n < 3200", criterion3},
        {4, "lemma 4 small-n boundary 3 <= n < 100", criterion4},
        {5, "certified final inequality at n = 3200, m <= 11", criterion5},
        {6, "lemma 3 spot bounds", criterion6},
        {7, "theorem tail inequality 100 <= n <= 5000", criterion7},
        {8, "property suites", criterion8},
    };

    int only = 0;
    if (argc > 1)
        only = std::atoi(argv[1]);

    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only)
            continue;
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << " ("
                  << secs << "s)" << (detail.empty() ? "" : " -- " + detail) << "\n";
        if (!ok)
            ++failures;
    }
    return failures;
}
