#ifndef GUMBALL_LEMMAS_HPP
#define GUMBALL_LEMMAS_HPP

#include "gumball/binomial.hpp"
#include "gumball/interval.hpp"
#include "gumball/rational.hpp"
#include "gumball/search.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gumball {

enum class VerdictStatus { Proven, Disproven, Inconclusive };

const char* to_string(VerdictStatus s);

// Outcome of an inequality decided with interval enclosures: the verdict is
// Proven only when the entire left enclosure sits at or below the right
// side, Disproven only when it sits strictly above, and Inconclusive when
// the enclosure straddles it (tighten the tolerance to resolve).
struct CertifiedVerdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    RatInterval lhs;
    Rat rhs;
    std::string detail;
};

struct ScanViolation {
    unsigned n = 0;
    unsigned m = 0;
    Rat f_m;    // f_nm(n, m)
    Rat f_m1;   // f_nm(n, m+1)
};

struct ScanReport {
    unsigned n_lo = 0;
    unsigned n_hi = 0;
    unsigned m_max = 11;
    unsigned stride = 1;
    std::vector<ScanViolation> violations;
    bool all_pass = true;
    std::optional<unsigned> largest_failing_n;
};

// f_nm(n, m) - 3/8, exact. The bound claims this is nonnegative for
// n >= 100, 12 <= m <= n/2 + 1; callers assert the sign. Inputs outside
// that range throw std::domain_error.
Rat lemma3_margin(unsigned n, unsigned m);

// For every n in {n_lo, n_lo+stride, ...} < n_hi and every transition
// m -> m+1 with 1 <= m < m_max (clamped to m+1 <= n), records a violation
// iff f_nm(n, m) >= f_nm(n, m+1). Comparisons are exact.
ScanReport lemma4_scan(unsigned n_lo, unsigned n_hi, unsigned m_max = 11, unsigned stride = 1);

// Merge partial scans of disjoint ranges into one report (violations are
// re-sorted canonically, flags recomputed).
ScanReport merge_scan_reports(std::vector<ScanReport> parts);

// Certifies sum_{k=0}^{m-1} e^{kr} (e m^k/k! - lambda (m+1)^k/k!)
//                                              <= (m+1)^m / m!
// where r = m/n, r' = (m+1)/n and lambda = exp(-(r(1+r')+r')/(2(1-r'))).
// Transcendentals are enclosed to width tol; endpoints stay exact.
// Requires m >= 1, n > m+1, tol > 0.
CertifiedVerdict lemma4_final_inequality(unsigned n, unsigned m, const Rat& tol);

// Certifies the limiting form of the same inequality,
//   sum_{k=0}^{m-1} (e m^k/k! - (m+1)^k/k!) <= (m+1)^m / m!.
CertifiedVerdict lemma4_sum_bound_check(unsigned m, const Rat& tol);

struct ProbeResult {
    bool passed = false;
    std::string detail;
};

// Tests the premises that extend the final inequality to larger n:
// r strictly decreases (exact) and lambda strictly increases (certified
// enclosure separation) from n1 to n2. Not passing because the enclosures
// overlap is reported in the detail; tighten tol. Requires m+1 < n1 < n2.
ProbeResult lemma4_n_monotonicity_probe(unsigned n1, unsigned n2, unsigned m,
                                        const Rat& tol = Rat::parse("1e-30"));

// Exact truth of (1 - 2/n)^(n-1) (3 - 2/n) > (1 - 1/(n+1))^n. Requires n >= 3.
bool theorem_tail_check(unsigned n);

// Smallest n in [3, n_hi] where theorem_tail_check holds, if any.
std::optional<unsigned> theorem_tail_smallest_n(unsigned n_hi = 100);

// Evaluates the i.i.d. objective g_nj(n, j) for every j in [2, n+1] and
// reports the minimum, its argmin set, and whether the minimum sits
// uniquely at j = n+1 with value (n/(n+1))^n. Requires n >= 2.
SearchReport verify_iid(unsigned n);

}  // namespace gumball

#endif
