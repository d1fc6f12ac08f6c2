#include "gumball/lemmas.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace gumball {

const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Proven: return "proven";
        case VerdictStatus::Disproven: return "disproven";
        case VerdictStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

Rat lemma3_margin(unsigned n, unsigned m) {
    if (n < 100)
        throw std::domain_error("lemma3_margin: requires n >= 100");
    if (m < 12 || 2ull * m > 2ull + n)
        throw std::domain_error("lemma3_margin: requires 12 <= m <= n/2 + 1");
    return f_nm(n, m) - Rat(3, 8);
}

ScanReport lemma4_scan(unsigned n_lo, unsigned n_hi, unsigned m_max, unsigned stride) {
    if (n_lo < 2)
        throw std::domain_error("lemma4_scan: requires n_lo >= 2");
    if (m_max < 2)
        throw std::domain_error("lemma4_scan: m_max must allow at least the 1 -> 2 transition");
    if (stride == 0)
        throw std::domain_error("lemma4_scan: stride must be positive");

    ScanReport rep;
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;
    rep.m_max = m_max;
    rep.stride = stride;

    for (unsigned n = n_lo; n < n_hi; n += stride) {
        // One row shares all its f values: f(n, 1..top).
        unsigned top = std::min(m_max, n);
        if (top < 2)
            continue;
        Rat prev = f_nm(n, 1);
        for (unsigned m = 1; m < top; ++m) {
            Rat next = f_nm(n, m + 1);
            if (prev >= next)
                rep.violations.push_back({n, m, prev, next});
            prev = std::move(next);
        }
    }
    rep.all_pass = rep.violations.empty();
    if (!rep.all_pass) {
        unsigned worst = 0;
        for (const auto& v : rep.violations)
            worst = std::max(worst, v.n);
        rep.largest_failing_n = worst;
    }
    return rep;
}

ScanReport merge_scan_reports(std::vector<ScanReport> parts) {
    if (parts.empty())
        return {};
    ScanReport rep;
    rep.n_lo = parts.front().n_lo;
    rep.n_hi = parts.front().n_hi;
    rep.m_max = parts.front().m_max;
    rep.stride = parts.front().stride;
    for (auto& p : parts) {
        rep.n_lo = std::min(rep.n_lo, p.n_lo);
        rep.n_hi = std::max(rep.n_hi, p.n_hi);
        for (auto& v : p.violations)
            rep.violations.push_back(std::move(v));
    }
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const ScanViolation& a, const ScanViolation& b) {
                  return a.n != b.n ? a.n < b.n : a.m < b.m;
              });
    rep.all_pass = rep.violations.empty();
    if (!rep.all_pass)
        rep.largest_failing_n = rep.violations.back().n;
    return rep;
}

namespace {

CertifiedVerdict decide(RatInterval lhs, Rat rhs) {
    CertifiedVerdict v;
    v.lhs = std::move(lhs);
    v.rhs = std::move(rhs);
    if (v.lhs.hi <= v.rhs) {
        v.status = VerdictStatus::Proven;
        v.detail = "lhs <= " + v.lhs.hi.to_decimal_string() + " vs rhs " +
                   v.rhs.to_decimal_string();
    } else if (v.lhs.lo > v.rhs) {
        v.status = VerdictStatus::Disproven;
        v.detail = "lhs >= " + v.lhs.lo.to_decimal_string() + " vs rhs " +
                   v.rhs.to_decimal_string();
    } else {
        v.status = VerdictStatus::Inconclusive;
        v.detail = "lhs enclosure [" + v.lhs.lo.to_decimal_string() + ", " +
                   v.lhs.hi.to_decimal_string() + "] straddles rhs " +
                   v.rhs.to_decimal_string() + "; tighten the tolerance";
    }
    return v;
}

}  // namespace

CertifiedVerdict lemma4_final_inequality(unsigned n, unsigned m, const Rat& tol) {
    if (m < 1)
        throw std::domain_error("lemma4_final_inequality: requires m >= 1");
    if (n <= m + 1)
        throw std::domain_error("lemma4_final_inequality: requires n > m+1");
    if (tol.sign() <= 0)
        throw std::domain_error("lemma4_final_inequality: tolerance must be positive");

    Rat r(m, n);
    Rat rp(m + 1, n);
    // lambda = exp(-(r(1+r') + r') / (2(1-r')))
    Rat lam_arg = -(r * (Rat(1) + rp) + rp) / (Rat(2) * (Rat(1) - rp));
    RatInterval e_enc = exp_enclosure(Rat(1), tol);
    RatInterval lam = exp_enclosure(lam_arg, tol);

    RatInterval lhs(Rat(0));
    for (unsigned k = 0; k < m; ++k) {
        Rat mk(pow_int(Int(m), k), factorial(k));
        Rat m1k(pow_int(Int(m + 1), k), factorial(k));
        RatInterval weight = exp_enclosure(Rat(k) * r, tol);
        lhs = lhs + weight * (e_enc * mk - lam * m1k);
    }
    Rat rhs(pow_int(Int(m + 1), m), factorial(m));
    return decide(std::move(lhs), std::move(rhs));
}

CertifiedVerdict lemma4_sum_bound_check(unsigned m, const Rat& tol) {
    if (m < 1)
        throw std::domain_error("lemma4_sum_bound_check: requires m >= 1");
    if (tol.sign() <= 0)
        throw std::domain_error("lemma4_sum_bound_check: tolerance must be positive");

    Rat sum_m(0), sum_m1(0);
    for (unsigned k = 0; k < m; ++k) {
        sum_m += Rat(pow_int(Int(m), k), factorial(k));
        sum_m1 += Rat(pow_int(Int(m + 1), k), factorial(k));
    }
    RatInterval lhs = exp_enclosure(Rat(1), tol) * sum_m - RatInterval(sum_m1);
    Rat rhs(pow_int(Int(m + 1), m), factorial(m));
    return decide(std::move(lhs), std::move(rhs));
}

ProbeResult lemma4_n_monotonicity_probe(unsigned n1, unsigned n2, unsigned m, const Rat& tol) {
    if (m < 1 || n1 <= m + 1)
        throw std::domain_error("lemma4_n_monotonicity_probe: requires m >= 1 and n1 > m+1");
    if (n1 >= n2)
        throw std::domain_error("lemma4_n_monotonicity_probe: requires n1 < n2");

    auto lam_enc = [&](unsigned n) {
        Rat r(m, n);
        Rat rp(m + 1, n);
        Rat arg = -(r * (Rat(1) + rp) + rp) / (Rat(2) * (Rat(1) - rp));
        return exp_enclosure(arg, tol);
    };

    ProbeResult res;
    if (!(Rat(m, n2) < Rat(m, n1))) {
        res.passed = false;
        res.detail = "r did not decrease from n1 to n2";
        return res;
    }
    RatInterval l1 = lam_enc(n1);
    RatInterval l2 = lam_enc(n2);
    if (l2.lo > l1.hi) {
        res.passed = true;
        res.detail = "r decreased exactly; lambda separation certified: [" +
                     l1.lo.to_decimal_string() + ", " + l1.hi.to_decimal_string() + "] < [" +
                     l2.lo.to_decimal_string() + ", " + l2.hi.to_decimal_string() + "]";
    } else {
        res.passed = false;
        res.detail = "lambda enclosures overlap at tolerance " + tol.to_decimal_string() +
                     "; tighten the tolerance to separate them";
    }
    return res;
}

bool theorem_tail_check(unsigned n) {
    if (n < 3)
        throw std::domain_error("theorem_tail_check: requires n >= 3");
    Rat lhs = pow_rat(Rat(n - 2, n), static_cast<long>(n - 1)) * Rat(3ul * n - 2, n);
    Rat rhs = pow_rat(Rat(n, n + 1), static_cast<long>(n));
    return lhs > rhs;
}

std::optional<unsigned> theorem_tail_smallest_n(unsigned n_hi) {
    for (unsigned n = 3; n <= n_hi; ++n) {
        if (theorem_tail_check(n))
            return n;
    }
    return std::nullopt;
}

SearchReport verify_iid(unsigned n) {
    if (n < 2)
        throw std::domain_error("verify_iid: requires n >= 2");
    auto t0 = std::chrono::steady_clock::now();

    SearchReport rep;
    rep.n = n;
    rep.conjecture_value = pow_rat(Rat(n, n + 1), static_cast<long>(n));

    std::vector<unsigned> argmin_j;
    Rat best;
    for (unsigned j = 2; j <= n + 1; ++j) {
        Rat v = g_nj(n, j);
        if (argmin_j.empty() || v < best) {
            best = v;
            argmin_j.assign(1, j);
        } else if (v == best) {
            argmin_j.push_back(j);
        }
    }
    rep.min_value = best;
    for (unsigned j : argmin_j)
        rep.argmin.push_back(Config::all_j(n, j));
    rep.configs_evaluated = Int(n);
    rep.configs_pruned = 0;
    rep.complete = true;

    bool has_conj = std::find(argmin_j.begin(), argmin_j.end(), n + 1) != argmin_j.end();
    rep.conjecture_holds = rep.min_value == rep.conjecture_value && has_conj;
    rep.argmin_unique_at_conjecture = argmin_j.size() == 1 && has_conj;
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace gumball
