#include "gumball/cli.hpp"

#include "gumball/lemmas.hpp"
#include "gumball/report.hpp"
#include "gumball/search.hpp"
#include "gumball/selftest.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace gumball::cli {

namespace {

using report::CsvRow;
using report::json;

constexpr int kExitConfirmed = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct Output {
    json envelope;
    std::vector<CsvRow> rows;
    std::string text;
    int exit_code = kExitConfirmed;
};

struct CommonOpts {
    std::string format = "text";
    std::string output_path;
    unsigned workers = 1;
};

void add_common(CLI::App* sub, CommonOpts& common, bool with_workers) {
    sub->add_option("--format", common.format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--output", common.output_path, "Write the report to a file instead of stdout");
    if (with_workers)
        sub->add_option("--workers", common.workers, "Worker threads for independent cells")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    workers = std::max(1u, workers);
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    pool.reserve(spawn);
    for (unsigned w = 0; w < spawn; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count)
                    break;
                fn(i);
            }
        });
    }
    for (auto& t : pool)
        t.join();
}

std::string describe(const Rat& r) {
    return r.to_decimal_string() + " (" + r.to_fraction_string() + ")";
}

std::string config_text(const Config& c) {
    std::string s = "[";
    bool first = true;
    for (unsigned v : c.value_sequence()) {
        if (!first)
            s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "]";
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ---------------------------------------------------------------- verify-iid

Output run_verify_iid(unsigned n_min, unsigned n_max, unsigned workers) {
    auto t0 = std::chrono::steady_clock::now();
    if (n_min < 2 || n_max < n_min)
        throw std::domain_error("verify-iid: need 2 <= n-min <= n-max");

    std::size_t count = n_max - n_min + 1;
    std::vector<std::optional<SearchReport>> reports(count);
    parallel_for(count, workers, [&](std::size_t i) {
        reports[i] = verify_iid(n_min + static_cast<unsigned>(i));
    });

    Output out;
    json violations = json::array();
    std::ostringstream text;
    unsigned failures = 0;
    for (const auto& rep : reports) {
        bool ok = rep->conjecture_holds && rep->argmin_unique_at_conjecture;
        if (!ok) {
            ++failures;
            violations.push_back(report::search_report_json(*rep));
        }
        out.rows.push_back({"n=" + std::to_string(rep->n), ok ? "confirmed" : "violated",
                            rep->min_value.to_fraction_string(),
                            rep->min_value.to_decimal_string(),
                            "minimum over j in [2, n+1]"});
    }

    json values{{"n_checked", count}};
    if (count == 1) {
        values["min_value"] = report::rat_json(reports[0]->min_value);
        values["conjecture_value"] = report::rat_json(reports[0]->conjecture_value);
        values["report"] = report::search_report_json(*reports[0]);
    }

    bool all_ok = failures == 0;
    text << "verify-iid: n in [" << n_min << ", " << n_max << "]\n";
    if (count == 1) {
        const auto& rep = *reports[0];
        text << "  min value " << describe(rep.min_value) << "\n";
        text << "  conjectured " << describe(rep.conjecture_value) << "\n";
        for (const auto& c : rep.argmin)
            text << "  argmin " << config_text(c) << "\n";
    }
    text << (all_ok ? "CONFIRMED" : "VIOLATED") << ": unique minimum at j = n+1 with value "
         << "(n/(n+1))^n for " << (count - failures) << "/" << count << " values of n\n";

    out.envelope = report::make_envelope(
        "verify-iid", json{{"n_min", n_min}, {"n_max", n_max}, {"workers", workers}},
        all_ok ? "confirmed" : "violated", std::move(values), std::move(violations),
        ms_since(t0));
    out.text = text.str();
    out.exit_code = all_ok ? kExitConfirmed : kExitViolated;
    return out;
}

// ------------------------------------------------------------ verify-general

Output run_verify_general(unsigned n, bool prune, const std::string& checkpoint_path,
                          bool resume, std::uint64_t max_nodes) {
    auto t0 = std::chrono::steady_clock::now();

    SearchOptions opts;
    opts.prune = prune;
    opts.max_nodes = max_nodes;
    if (resume) {
        if (checkpoint_path.empty())
            throw std::domain_error("verify-general: --resume needs --checkpoint");
        std::ifstream in(checkpoint_path);
        if (!in)
            throw std::domain_error("verify-general: cannot read checkpoint file " +
                                    checkpoint_path);
        report::CheckpointData data = report::checkpoint_from_json(json::parse(in));
        if (data.n != n)
            throw std::domain_error("verify-general: checkpoint is for n=" +
                                    std::to_string(data.n));
        if (data.prune != prune)
            throw std::domain_error("verify-general: checkpoint prune mode differs");
        opts.resume = std::move(data.state);
        opts.checkpoint_depth =
            static_cast<unsigned>(opts.resume->completed_prefix.size());
    }
    if (!checkpoint_path.empty()) {
        opts.on_checkpoint = [&, n, prune](const ResumeState& snap) {
            report::CheckpointData data{n, prune, snap};
            std::string tmp = checkpoint_path + ".tmp";
            std::ofstream os(tmp);
            os << report::checkpoint_json(data).dump(2) << "\n";
            os.close();
            if (os)  // keep the previous checkpoint on a failed write
                std::rename(tmp.c_str(), checkpoint_path.c_str());
        };
    }

    SearchReport rep = verify_general(n, opts);

    Output out;
    bool ok = rep.conjecture_holds && rep.argmin_unique_at_conjecture;
    std::string verdict = !rep.complete ? "inconclusive" : (ok ? "confirmed" : "violated");

    json values{{"min_value", report::rat_json(rep.min_value)},
                {"conjecture_value", report::rat_json(rep.conjecture_value)},
                {"report", report::search_report_json(rep)}};

    std::ostringstream text;
    text << "verify-general: n=" << n << (prune ? " (pruned search)" : " (exhaustive)") << "\n";
    text << "  configurations evaluated " << rep.configs_evaluated.get_str() << ", skipped "
         << rep.configs_pruned.get_str() << " of " << config_count(n).get_str() << "\n";
    if (!rep.complete) {
        text << "INCONCLUSIVE: node budget exhausted before the search finished";
        if (!checkpoint_path.empty())
            text << "; resume from " << checkpoint_path;
        text << "\n";
    } else {
        text << "  min value " << describe(rep.min_value) << "\n";
        for (const auto& c : rep.argmin)
            text << "  argmin " << config_text(c) << "\n";
        text << (ok ? "CONFIRMED" : "VIOLATED")
             << ": unique minimum at the all-(n+1) configuration with value (n/(n+1))^n\n";
    }

    out.rows.push_back({"n=" + std::to_string(n), verdict, rep.min_value.to_fraction_string(),
                        rep.min_value.to_decimal_string(),
                        rep.complete ? "minimum over all configurations" : "incomplete search"});
    out.envelope = report::make_envelope(
        "verify-general",
        json{{"n", n}, {"prune", prune}, {"max_nodes", max_nodes}, {"resume", resume}},
        verdict, std::move(values), json::array(), ms_since(t0));
    out.text = text.str();
    out.exit_code = !rep.complete ? kExitInconclusive : (ok ? kExitConfirmed : kExitViolated);
    return out;
}

// -------------------------------------------------------------- scan-lemma4

Output run_scan_lemma4(unsigned n_lo, unsigned n_hi, unsigned m_max, unsigned stride,
                       unsigned workers) {
    auto t0 = std::chrono::steady_clock::now();

    std::vector<unsigned> cells;
    for (unsigned long n = n_lo; n < n_hi; n += stride)
        cells.push_back(static_cast<unsigned>(n));

    std::vector<std::optional<ScanReport>> parts(cells.size());
    parallel_for(cells.size(), workers, [&](std::size_t i) {
        parts[i] = lemma4_scan(cells[i], cells[i] + 1, m_max, 1);
    });

    std::vector<ScanReport> collected;
    collected.reserve(parts.size());
    for (auto& p : parts)
        collected.push_back(std::move(*p));
    ScanReport rep = merge_scan_reports(std::move(collected));
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;
    rep.m_max = m_max;
    rep.stride = stride;

    Output out;
    json scan = report::scan_report_json(rep);
    json values{{"rows_scanned", cells.size()}};
    if (rep.largest_failing_n)
        values["largest_failing_n"] = *rep.largest_failing_n;

    std::ostringstream text;
    text << "scan-lemma4: n in [" << n_lo << ", " << n_hi << ") stride " << stride
         << ", transitions m -> m+1 for m < " << m_max << "\n";
    for (const auto& v : rep.violations) {
        text << "  violation at n=" << v.n << " m=" << v.m << ": f(n,m) = " << describe(v.f_m)
             << " >= f(n,m+1) = " << describe(v.f_m1) << "\n";
        out.rows.push_back({"n=" + std::to_string(v.n) + ",m=" + std::to_string(v.m),
                            "violated", v.f_m.to_fraction_string(), v.f_m.to_decimal_string(),
                            "f(n,m) >= f(n,m+1) = " + v.f_m1.to_fraction_string()});
    }
    if (rep.largest_failing_n)
        text << "  largest failing n: " << *rep.largest_failing_n << "\n";
    text << (rep.all_pass ? "CONFIRMED" : "VIOLATED") << ": f(n, m) increasing in m for "
         << cells.size() << " scanned n\n";
    if (rep.all_pass)
        out.rows.push_back({"all", "confirmed", "", "", "no violations"});

    out.envelope = report::make_envelope("scan-lemma4",
                                         json{{"n_lo", n_lo},
                                              {"n_hi", n_hi},
                                              {"m_max", m_max},
                                              {"stride", stride},
                                              {"workers", workers}},
                                         rep.all_pass ? "confirmed" : "violated",
                                         std::move(values), scan["violations"], ms_since(t0));
    out.text = text.str();
    out.exit_code = rep.all_pass ? kExitConfirmed : kExitViolated;
    return out;
}

// -------------------------------------------------------------- check-lemma3

Output run_check_lemma3(unsigned n, unsigned m) {
    auto t0 = std::chrono::steady_clock::now();
    Rat margin = lemma3_margin(n, m);
    Rat f_value = margin + Rat(3, 8);
    bool ok = margin.sign() >= 0;

    Output out;
    out.rows.push_back({"n=" + std::to_string(n) + ",m=" + std::to_string(m),
                        ok ? "confirmed" : "violated", f_value.to_fraction_string(),
                        f_value.to_decimal_string(), "margin over 3/8: " + margin.to_decimal_string()});
    std::ostringstream text;
    text << "check-lemma3: f(" << n << ", " << m << ") = " << describe(f_value) << "\n";
    text << "  margin over 3/8: " << describe(margin) << "\n";
    text << (ok ? "CONFIRMED" : "VIOLATED") << ": f(n, m) >= 3/8\n";

    out.envelope = report::make_envelope(
        "check-lemma3", json{{"n", n}, {"m", m}}, ok ? "confirmed" : "violated",
        json{{"f_value", report::rat_json(f_value)}, {"margin", report::rat_json(margin)}},
        json::array(), ms_since(t0));
    out.text = text.str();
    out.exit_code = ok ? kExitConfirmed : kExitViolated;
    return out;
}

// ----------------------------------------------------- certify-lemma4-final

Output run_certify_final(unsigned n, const std::string& tol_text, unsigned m_single,
                         unsigned m_max) {
    auto t0 = std::chrono::steady_clock::now();
    Rat tol = Rat::parse(tol_text);

    std::vector<unsigned> ms;
    if (m_single != 0)
        ms.push_back(m_single);
    else
        for (unsigned m = 1; m <= m_max; ++m)
            ms.push_back(m);

    Output out;
    json results = json::array();
    json violations = json::array();
    unsigned proven = 0, disproven = 0, inconclusive = 0;
    std::ostringstream text;
    text << "certify-lemma4-final: n=" << n << ", tolerance " << tol.to_decimal_string()
         << "\n";
    for (unsigned m : ms) {
        CertifiedVerdict v = lemma4_final_inequality(n, m, tol);
        json item = report::verdict_json(v);
        item["m"] = m;
        results.push_back(item);
        switch (v.status) {
            case VerdictStatus::Proven: ++proven; break;
            case VerdictStatus::Disproven: ++disproven; violations.push_back(item); break;
            case VerdictStatus::Inconclusive: ++inconclusive; violations.push_back(item); break;
        }
        text << "  m=" << m << ": " << to_string(v.status) << " (" << v.detail << ")\n";
        out.rows.push_back({"m=" + std::to_string(m), to_string(v.status),
                            v.rhs.to_fraction_string(), v.rhs.to_decimal_string(), v.detail});
    }

    std::string verdict =
        disproven > 0 ? "violated" : (inconclusive > 0 ? "inconclusive" : "confirmed");
    text << (disproven > 0 ? "VIOLATED" : (inconclusive > 0 ? "INCONCLUSIVE" : "CONFIRMED"))
         << ": " << proven << " proven, " << disproven << " disproven, " << inconclusive
         << " inconclusive\n";

    out.envelope = report::make_envelope(
        "certify-lemma4-final",
        json{{"n", n}, {"tol", tol.to_fraction_string()}, {"m", m_single}, {"m_max", m_max}},
        verdict,
        json{{"proven", proven},
             {"disproven", disproven},
             {"inconclusive", inconclusive},
             {"results", results}},
        std::move(violations), ms_since(t0));
    out.text = text.str();
    out.exit_code = disproven > 0 ? kExitViolated
                                  : (inconclusive > 0 ? kExitInconclusive : kExitConfirmed);
    return out;
}

// -------------------------------------------------- probe-lemma4-monotone

Output run_probe_monotone(unsigned n1, unsigned n2, unsigned m, const std::string& tol_text) {
    auto t0 = std::chrono::steady_clock::now();
    Rat tol = Rat::parse(tol_text);
    ProbeResult res = lemma4_n_monotonicity_probe(n1, n2, m, tol);

    Output out;
    out.rows.push_back({"n1=" + std::to_string(n1) + ",n2=" + std::to_string(n2) +
                            ",m=" + std::to_string(m),
                        res.passed ? "confirmed" : "inconclusive", "", "", res.detail});
    std::ostringstream text;
    text << "probe-lemma4-monotone: m=" << m << ", n1=" << n1 << " -> n2=" << n2 << "\n";
    text << "  " << res.detail << "\n";
    text << (res.passed ? "CONFIRMED" : "INCONCLUSIVE")
         << ": r decreases and lambda increases with n\n";

    out.envelope = report::make_envelope(
        "probe-lemma4-monotone",
        json{{"n1", n1}, {"n2", n2}, {"m", m}, {"tol", tol.to_fraction_string()}},
        res.passed ? "confirmed" : "inconclusive",
        json{{"passed", res.passed}, {"detail", res.detail}}, json::array(), ms_since(t0));
    out.text = text.str();
    out.exit_code = res.passed ? kExitConfirmed : kExitInconclusive;
    return out;
}

// ----------------------------------------------------------------- tail-check

Output run_tail_check(std::optional<unsigned> n_single, std::optional<unsigned> n_min,
                      std::optional<unsigned> n_max, bool find_smallest, unsigned sweep_hi,
                      unsigned workers) {
    auto t0 = std::chrono::steady_clock::now();
    if (!n_single && !(n_min && n_max) && !find_smallest)
        throw std::domain_error("tail-check: give --n, --n-min/--n-max, or --find-smallest");
    if ((n_min && !n_max) || (!n_min && n_max))
        throw std::domain_error("tail-check: --n-min and --n-max go together");

    Output out;
    json values;
    json violations = json::array();
    std::ostringstream text;
    bool all_ok = true;
    text << "tail-check: (1-2/n)^(n-1) (3-2/n) > (1-1/(n+1))^n\n";

    if (n_single) {
        bool ok = theorem_tail_check(*n_single);
        all_ok = all_ok && ok;
        values["single"] = json{{"n", *n_single}, {"holds", ok}};
        if (!ok)
            violations.push_back(json{{"n", *n_single}});
        text << "  n=" << *n_single << ": " << (ok ? "holds" : "fails") << "\n";
        out.rows.push_back(
            {"n=" + std::to_string(*n_single), ok ? "confirmed" : "violated", "", "", ""});
    }
    if (n_min) {
        std::size_t count = *n_max >= *n_min ? *n_max - *n_min + 1 : 0;
        std::vector<char> holds(count, 0);
        parallel_for(count, workers, [&](std::size_t i) {
            holds[i] = theorem_tail_check(*n_min + static_cast<unsigned>(i)) ? 1 : 0;
        });
        unsigned failures = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if (!holds[i]) {
                ++failures;
                unsigned n = *n_min + static_cast<unsigned>(i);
                violations.push_back(json{{"n", n}});
                out.rows.push_back({"n=" + std::to_string(n), "violated", "", "", ""});
            }
        }
        all_ok = all_ok && failures == 0;
        values["range"] = json{{"n_min", *n_min}, {"n_max", *n_max}, {"failures", failures}};
        text << "  range [" << *n_min << ", " << *n_max << "]: " << (count - failures) << "/"
             << count << " hold\n";
        if (failures == 0)
            out.rows.push_back({"range " + std::to_string(*n_min) + ".." +
                                    std::to_string(*n_max),
                                "confirmed", "", "", "all hold"});
    }
    if (find_smallest) {
        auto smallest = theorem_tail_smallest_n(sweep_hi);
        if (smallest) {
            values["smallest_n"] = *smallest;
            text << "  smallest n >= 3 where it holds: " << *smallest << "\n";
            out.rows.push_back({"smallest_n", "confirmed", std::to_string(*smallest), "", ""});
        } else {
            all_ok = false;
            values["smallest_n"] = nullptr;
            text << "  no n <= " << sweep_hi << " satisfies the inequality\n";
            out.rows.push_back({"smallest_n", "violated", "", "",
                                "none found up to " + std::to_string(sweep_hi)});
        }
    }
    text << (all_ok ? "CONFIRMED" : "VIOLATED") << "\n";

    json params;
    if (n_single)
        params["n"] = *n_single;
    if (n_min) {
        params["n_min"] = *n_min;
        params["n_max"] = *n_max;
    }
    params["find_smallest"] = find_smallest;
    params["sweep_hi"] = sweep_hi;
    params["workers"] = workers;

    out.envelope =
        report::make_envelope("tail-check", std::move(params), all_ok ? "confirmed" : "violated",
                              std::move(values), std::move(violations), ms_since(t0));
    out.text = text.str();
    out.exit_code = all_ok ? kExitConfirmed : kExitViolated;
    return out;
}

// --------------------------------------------------------------- median-check

Output run_median_check(std::optional<unsigned> n, std::optional<unsigned> m,
                        std::optional<unsigned> n_max, unsigned workers) {
    auto t0 = std::chrono::steady_clock::now();
    if (!n && !n_max)
        throw std::domain_error("median-check: give --n [--m] or --n-max");

    Output out;
    json violations = json::array();
    std::ostringstream text;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;

    if (n) {
        std::vector<unsigned> ms;
        if (m)
            ms.push_back(*m);
        else
            for (unsigned mm = 1; mm <= *n; ++mm)
                ms.push_back(mm);
        for (unsigned mm : ms) {
            ++cases;
            if (!median_check(*n, mm)) {
                ++failures;
                violations.push_back(json{{"n", *n}, {"m", mm}});
            }
        }
        text << "median-check: n=" << *n << (m ? " m=" + std::to_string(*m) : " all m") << "\n";
    } else {
        unsigned top = *n_max;
        std::vector<std::uint64_t> fail_at(top + 1, 0);
        parallel_for(top, workers, [&](std::size_t i) {
            unsigned nn = static_cast<unsigned>(i) + 1;
            for (unsigned mm = 1; mm <= nn; ++mm) {
                if (!median_check(nn, mm))
                    ++fail_at[nn];
            }
        });
        for (unsigned nn = 1; nn <= top; ++nn) {
            cases += nn;
            if (fail_at[nn] > 0) {
                failures += fail_at[nn];
                violations.push_back(json{{"n", nn}, {"failures", fail_at[nn]}});
            }
        }
        text << "median-check: all 1 <= m <= n <= " << top << "\n";
    }

    bool all_ok = failures == 0;
    text << "  " << cases << " cases, " << failures << " failures\n";
    text << (all_ok ? "CONFIRMED" : "VIOLATED")
         << ": m is a median of Binomial(n, m/n)\n";
    out.rows.push_back({"cases", all_ok ? "confirmed" : "violated", std::to_string(cases), "",
                        std::to_string(failures) + " failures"});

    json params;
    if (n)
        params["n"] = *n;
    if (m)
        params["m"] = *m;
    if (n_max)
        params["n_max"] = *n_max;
    params["workers"] = workers;

    out.envelope = report::make_envelope(
        "median-check", std::move(params), all_ok ? "confirmed" : "violated",
        json{{"cases", cases}, {"failures", failures}}, std::move(violations), ms_since(t0));
    out.text = text.str();
    out.exit_code = all_ok ? kExitConfirmed : kExitViolated;
    return out;
}

// ------------------------------------------------------------------- selftest

Output run_selftest_cmd(const SelftestOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<SuiteResult> suites = run_selftest(opts);

    Output out;
    json suites_json = json::array();
    std::ostringstream text;
    bool all_ok = true;
    text << "selftest (seed " << opts.seed << ")\n";
    for (const auto& s : suites) {
        all_ok = all_ok && s.passed();
        json item{{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}};
        if (!s.first_failure.empty())
            item["first_failure"] = s.first_failure;
        suites_json.push_back(std::move(item));
        text << "  " << (s.passed() ? "pass" : "FAIL") << "  " << s.name << " (" << s.cases
             << " cases";
        if (!s.passed())
            text << ", " << s.failures << " failures, first: " << s.first_failure;
        text << ")\n";
        out.rows.push_back({s.name, s.passed() ? "confirmed" : "violated",
                            std::to_string(s.cases), "",
                            s.passed() ? "" : s.first_failure});
    }
    text << (all_ok ? "CONFIRMED" : "VIOLATED") << ": property suites\n";

    out.envelope = report::make_envelope(
        "selftest",
        json{{"seed", opts.seed},
             {"lemma5_cases", opts.lemma5_cases},
             {"transport_cases", opts.transport_cases},
             {"median_n_max", opts.median_n_max},
             {"cross_n_max", opts.cross_n_max}},
        all_ok ? "confirmed" : "violated", json{{"suites", suites_json}}, json::array(),
        ms_since(t0));
    out.text = text.str();
    out.exit_code = all_ok ? kExitConfirmed : kExitViolated;
    return out;
}

// -------------------------------------------------------------------- driver

int deliver(const Output& out, const CommonOpts& common, const std::string& command,
            std::string* captured) {
    std::string rendered;
    if (common.format == "json")
        rendered = out.envelope.dump(2) + "\n";
    else if (common.format == "csv")
        rendered = report::render_csv(command, out.rows);
    else
        rendered = out.text;

    if (captured) {
        *captured = rendered;
    } else if (!common.output_path.empty()) {
        std::ofstream os(common.output_path);
        if (!os)
            throw std::domain_error("cannot write output file " + common.output_path);
        os << rendered;
    } else {
        std::cout << rendered;
    }
    return out.exit_code;
}

int run_impl(const std::vector<std::string>& args, std::string* captured) {
    CLI::App app{"Exact verification of the extremal gumball-machine problem: the minimum of "
                 "P(X1+...+Xn <= n) over independent mean-one machines"};
    app.require_subcommand(1);

    // verify-iid
    auto* iid = app.add_subcommand("verify-iid",
                                   "Minimize the i.i.d. objective g(n, j) over j exactly");
    unsigned iid_n = 0, iid_n_min = 0, iid_n_max = 0;
    CommonOpts iid_common;
    auto* iid_n_opt = iid->add_option("--n", iid_n, "Single n");
    iid->add_option("--n-min", iid_n_min, "Range start")->excludes(iid_n_opt);
    iid->add_option("--n-max", iid_n_max, "Range end (inclusive)")->excludes(iid_n_opt);
    add_common(iid, iid_common, true);

    // verify-general
    auto* gen = app.add_subcommand("verify-general",
                                   "Minimize over every extreme-point configuration");
    unsigned gen_n = 0;
    bool gen_no_prune = false, gen_resume = false;
    std::uint64_t gen_max_nodes = 0;
    std::string gen_checkpoint;
    CommonOpts gen_common;
    gen->add_option("--n", gen_n, "Number of machines")->required();
    gen->add_flag("--no-prune", gen_no_prune, "Evaluate every configuration");
    gen->add_option("--checkpoint", gen_checkpoint, "Checkpoint file to write (and resume from)");
    gen->add_flag("--resume", gen_resume, "Resume from the checkpoint file");
    gen->add_option("--max-nodes", gen_max_nodes,
                    "Node budget; an exhausted budget reports inconclusive");
    add_common(gen, gen_common, false);

    // scan-lemma4
    auto* scan = app.add_subcommand("scan-lemma4",
                                    "Exact monotonicity scan of f(n, m) in m");
    unsigned scan_n_lo = 100, scan_n_hi = 3200, scan_m_max = 11, scan_stride = 1;
    CommonOpts scan_common;
    scan->add_option("--n-lo", scan_n_lo, "Range start")->capture_default_str();
    scan->add_option("--n-hi", scan_n_hi, "Range end (exclusive)")->capture_default_str();
    scan->add_option("--m-max", scan_m_max, "Scan transitions m -> m+1 for m < m-max")
        ->capture_default_str();
    scan->add_option("--stride", scan_stride, "Scan every stride-th n")->capture_default_str();
    add_common(scan, scan_common, true);

    // check-lemma3
    auto* l3 = app.add_subcommand("check-lemma3", "Exact spot check of f(n, m) >= 3/8");
    unsigned l3_n = 0, l3_m = 0;
    CommonOpts l3_common;
    l3->add_option("--n", l3_n, "Trial count")->required();
    l3->add_option("--m", l3_m, "Integer mean")->required();
    add_common(l3, l3_common, false);

    // certify-lemma4-final
    auto* cert = app.add_subcommand("certify-lemma4-final",
                                    "Interval-certified final inequality");
    unsigned cert_n = 3200, cert_m = 0, cert_m_max = 11;
    std::string cert_tol = "1e-30";
    CommonOpts cert_common;
    cert->add_option("--n", cert_n, "n determining r and lambda")->capture_default_str();
    cert->add_option("--m", cert_m, "Single m (default: all m <= m-max)");
    cert->add_option("--m-max", cert_m_max, "Check every m up to this")->capture_default_str();
    cert->add_option("--tol", cert_tol, "Enclosure tolerance")->capture_default_str();
    add_common(cert, cert_common, false);

    // probe-lemma4-monotone
    auto* probe = app.add_subcommand("probe-lemma4-monotone",
                                     "Certify r decreases and lambda increases with n");
    unsigned probe_n1 = 0, probe_n2 = 0, probe_m = 0;
    std::string probe_tol = "1e-30";
    CommonOpts probe_common;
    probe->add_option("--n1", probe_n1, "Smaller n")->required();
    probe->add_option("--n2", probe_n2, "Larger n")->required();
    probe->add_option("--m", probe_m, "m")->required();
    probe->add_option("--tol", probe_tol, "Enclosure tolerance")->capture_default_str();
    add_common(probe, probe_common, false);

    // tail-check
    auto* tail = app.add_subcommand("tail-check",
                                    "Exact tail inequality of the theorem's m = 1 case");
    unsigned tail_n = 0, tail_n_min = 0, tail_n_max = 0, tail_sweep_hi = 100;
    bool tail_find_smallest = false;
    CommonOpts tail_common;
    auto* tail_n_opt = tail->add_option("--n", tail_n, "Single n");
    tail->add_option("--n-min", tail_n_min, "Range start");
    tail->add_option("--n-max", tail_n_max, "Range end (inclusive)");
    tail->add_flag("--find-smallest", tail_find_smallest,
                   "Sweep from n = 3 for the smallest n where the inequality holds");
    tail->add_option("--sweep-hi", tail_sweep_hi, "Sweep upper bound")->capture_default_str();
    add_common(tail, tail_common, true);
    (void)tail_n_opt;

    // median-check
    auto* med = app.add_subcommand("median-check",
                                   "Exact median property of Binomial(n, m/n)");
    unsigned med_n = 0, med_m = 0, med_n_max = 0;
    CommonOpts med_common;
    med->add_option("--n", med_n, "Single n");
    med->add_option("--m", med_m, "Single m (needs --n)");
    med->add_option("--n-max", med_n_max, "Check all 1 <= m <= n <= n-max");
    add_common(med, med_common, true);

    // selftest
    auto* self = app.add_subcommand("selftest", "Run the randomized property suites");
    SelftestOptions self_opts;
    CommonOpts self_common;
    self->add_option("--seed", self_opts.seed, "RNG seed")->capture_default_str();
    self->add_option("--lemma5-cases", self_opts.lemma5_cases, "Monotonicity cases")
        ->capture_default_str();
    self->add_option("--transport-cases", self_opts.transport_cases, "Transport ensembles")
        ->capture_default_str();
    self->add_option("--median-n-max", self_opts.median_n_max, "Median triangle bound")
        ->capture_default_str();
    self->add_option("--cross-n-max", self_opts.cross_n_max, "Cross-module bound")
        ->capture_default_str();
    add_common(self, self_common, false);

    std::vector<const char*> argv;
    argv.push_back("gumball");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        if (captured) {
            std::ostringstream os;
            os << app.help();
            *captured = os.str();
        } else {
            std::cout << app.help();
        }
        return kExitConfirmed;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (iid->parsed()) {
            unsigned lo = iid_n != 0 ? iid_n : iid_n_min;
            unsigned hi = iid_n != 0 ? iid_n : iid_n_max;
            return deliver(run_verify_iid(lo, hi, iid_common.workers), iid_common, "verify-iid",
                           captured);
        }
        if (gen->parsed())
            return deliver(run_verify_general(gen_n, !gen_no_prune, gen_checkpoint, gen_resume,
                                              gen_max_nodes),
                           gen_common, "verify-general", captured);
        if (scan->parsed())
            return deliver(run_scan_lemma4(scan_n_lo, scan_n_hi, scan_m_max, scan_stride,
                                           scan_common.workers),
                           scan_common, "scan-lemma4", captured);
        if (l3->parsed())
            return deliver(run_check_lemma3(l3_n, l3_m), l3_common, "check-lemma3", captured);
        if (cert->parsed())
            return deliver(run_certify_final(cert_n, cert_tol, cert_m, cert_m_max), cert_common,
                           "certify-lemma4-final", captured);
        if (probe->parsed())
            return deliver(run_probe_monotone(probe_n1, probe_n2, probe_m, probe_tol),
                           probe_common, "probe-lemma4-monotone", captured);
        if (tail->parsed()) {
            std::optional<unsigned> sn, mn, mx;
            if (tail->count("--n"))
                sn = tail_n;
            if (tail->count("--n-min"))
                mn = tail_n_min;
            if (tail->count("--n-max"))
                mx = tail_n_max;
            return deliver(run_tail_check(sn, mn, mx, tail_find_smallest, tail_sweep_hi,
                                          tail_common.workers),
                           tail_common, "tail-check", captured);
        }
        if (med->parsed()) {
            std::optional<unsigned> nn, mm, nmax;
            if (med->count("--n"))
                nn = med_n;
            if (med->count("--m"))
                mm = med_m;
            if (med->count("--n-max"))
                nmax = med_n_max;
            return deliver(run_median_check(nn, mm, nmax, med_common.workers), med_common,
                           "median-check", captured);
        }
        if (self->parsed())
            return deliver(run_selftest_cmd(self_opts), self_common, "selftest", captured);
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "no subcommand given\n";
    return kExitUsage;
}

}  // namespace

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_impl(args, nullptr);
}

int run_for_test(const std::vector<std::string>& args, std::string* captured_output) {
    return run_impl(args, captured_output);
}

}  // namespace gumball::cli
