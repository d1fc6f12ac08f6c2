#include "gumball/selftest.hpp"

#include "gumball/binomial.hpp"
#include "gumball/interval.hpp"
#include "gumball/pmf.hpp"
#include "gumball/search.hpp"

#include <random>
#include <sstream>

namespace gumball {

namespace {

using Rng = std::mt19937_64;

unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

// Random rational in [0, 1] with a denominator up to 60.
Rat unit_rat(Rng& rng) {
    unsigned den = uniform(rng, 1, 60);
    unsigned num = uniform(rng, 0, den);
    return Rat(num, den);
}

// Random mean-one law on {0..cap} as a convex combination of the mean-one
// building blocks: point mass at 1 and two-point laws {0, j}. Forcing a
// positive weight on two-point(force_j) plants an atom above n+1 when the
// transport test needs one.
Pmf random_mean_one_law(Rng& rng, unsigned cap, unsigned force_j) {
    std::vector<unsigned> weights(cap + 1, 0);  // weights[1] = point at 1, weights[j] = two-point j
    unsigned total = 0;
    for (unsigned j = 1; j <= cap; ++j) {
        weights[j] = uniform(rng, 0, 4);
        total += weights[j];
    }
    if (force_j != 0 && weights[force_j] == 0) {
        weights[force_j] = 1 + uniform(rng, 0, 3);
        total += weights[force_j];
    }
    if (total == 0) {
        weights[1] = 1;
        total = 1;
    }

    std::vector<Rat> mass(cap + 1, Rat(0));
    for (unsigned j = 1; j <= cap; ++j) {
        if (weights[j] == 0)
            continue;
        Rat w(weights[j], total);
        if (j == 1) {
            mass[1] += w;
        } else {
            mass[0] += w * (Rat(1) - Rat(1, j));
            mass[j] += w * Rat(1, j);
        }
    }
    return Pmf(std::move(mass), Rat(0));
}

SuiteResult suite_lemma5(Rng& rng, unsigned cases) {
    SuiteResult res{"lemma5-monotone"};
    for (unsigned i = 0; i < cases; ++i) {
        unsigned n = uniform(rng, 1, 30);
        unsigned m = uniform(rng, 0, n);
        Rat x1 = unit_rat(rng);
        Rat x2 = unit_rat(rng);
        if (x1 > x2)
            std::swap(x1, x2);
        ++res.cases;
        if (!lemma5_check(n, m, x1, x2)) {
            ++res.failures;
            if (res.first_failure.empty()) {
                std::ostringstream os;
                os << "n=" << n << " m=" << m << " x1=" << x1.to_fraction_string()
                   << " x2=" << x2.to_fraction_string();
                res.first_failure = os.str();
            }
        }
    }
    return res;
}

SuiteResult suite_transport(Rng& rng, unsigned cases) {
    SuiteResult res{"lemma1-transport"};
    for (unsigned i = 0; i < cases; ++i) {
        unsigned n = uniform(rng, 2, 6);
        unsigned cap = n + 3;
        unsigned k = uniform(rng, n + 2, n + 3);

        std::vector<Pmf> machines;
        machines.push_back(random_mean_one_law(rng, cap, k));
        for (unsigned idx = 1; idx < n; ++idx)
            machines.push_back(random_mean_one_law(rng, cap, 0));

        ++res.cases;
        std::string fail;
        try {
            Pmf moved = lemma1_transport(machines[0], n, k);

            Rat total = moved.overflow();
            for (const Rat& m : moved.mass())
                total += m;
            if (total != Rat(1))
                fail = "total mass " + total.to_fraction_string();
            else if (mean(moved) != Rat(1))
                fail = "mean " + mean(moved).to_fraction_string();
            else {
                auto prob_sum_at_most_n = [&](const Pmf& first) {
                    Pmf acc = convolve(first, machines[1], n);
                    for (unsigned idx = 2; idx < n; ++idx)
                        acc = convolve(acc, machines[idx], n);
                    return prob_at_most(acc, n);
                };
                Rat before = prob_sum_at_most_n(machines[0]);
                Rat after = prob_sum_at_most_n(moved);
                if (after > before)
                    fail = "tail probability increased: " + before.to_fraction_string() +
                           " -> " + after.to_fraction_string();
            }
        } catch (const std::exception& e) {
            fail = std::string("exception: ") + e.what();
        }
        if (!fail.empty()) {
            ++res.failures;
            if (res.first_failure.empty())
                res.first_failure = "case " + std::to_string(i) + ": " + fail;
        }
    }
    return res;
}

SuiteResult suite_median(unsigned n_max) {
    SuiteResult res{"binomial-median"};
    for (unsigned n = 1; n <= n_max; ++n) {
        for (unsigned m = 1; m <= n; ++m) {
            ++res.cases;
            if (!median_check(n, m)) {
                ++res.failures;
                if (res.first_failure.empty())
                    res.first_failure = "n=" + std::to_string(n) + " m=" + std::to_string(m);
            }
        }
    }
    return res;
}

SuiteResult suite_cross_module(unsigned n_max) {
    SuiteResult res{"iid-vs-convolution"};
    for (unsigned n = 2; n <= n_max; ++n) {
        for (unsigned j = 2; j <= n + 1; ++j) {
            ++res.cases;
            if (g_nj(n, j) != eval_config(Config::all_j(n, j))) {
                ++res.failures;
                if (res.first_failure.empty())
                    res.first_failure = "n=" + std::to_string(n) + " j=" + std::to_string(j);
            }
        }
    }
    return res;
}

SuiteResult suite_exp_enclosure() {
    SuiteResult res{"exp-enclosure"};
    // 50-digit truncations; the true values lie within +1e-50 of these.
    const Rat e_ref =
        Rat::parse("2.71828182845904523536028747135266249775724709369995");
    const Rat inv_e_ref =
        Rat::parse("0.36787944117144232159552377016146086744581113103176");
    const Rat ulp = Rat::parse("1e-50");

    auto check = [&](const Rat& x, const Rat& ref, const Rat& tol, const char* label) {
        ++res.cases;
        RatInterval enc = exp_enclosure(x, tol);
        bool ok = enc.width() <= tol && enc.contains(ref) && enc.contains(ref + ulp);
        if (!ok) {
            ++res.failures;
            if (res.first_failure.empty())
                res.first_failure = std::string(label) + " at tol " + tol.to_decimal_string();
        }
    };
    for (const char* tol_text : {"1e-12", "1e-30"}) {
        Rat tol = Rat::parse(tol_text);
        check(Rat(1), e_ref, tol, "e");
        check(Rat(-1), inv_e_ref, tol, "1/e");
    }
    return res;
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts) {
    Rng rng(opts.seed);
    std::vector<SuiteResult> out;
    out.push_back(suite_lemma5(rng, opts.lemma5_cases));
    out.push_back(suite_transport(rng, opts.transport_cases));
    out.push_back(suite_median(opts.median_n_max));
    out.push_back(suite_cross_module(opts.cross_n_max));
    out.push_back(suite_exp_enclosure());
    return out;
}

}  // namespace gumball
