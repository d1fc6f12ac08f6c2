#ifndef GUMBALL_SELFTEST_HPP
#define GUMBALL_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gumball {

struct SelftestOptions {
    std::uint64_t seed = 20240801;
    unsigned lemma5_cases = 1000;   // random monotonicity pairs, n <= 30
    unsigned transport_cases = 500; // random small ensembles
    unsigned median_n_max = 200;    // all 1 <= m <= n <= median_n_max
    unsigned cross_n_max = 12;      // g vs eval_config, all j
};

struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

// The randomized/property suites behind the selftest subcommand:
//   lemma5-monotone, transport, median, cross-module, exp-enclosure.
// Deterministic for a fixed seed.
std::vector<SuiteResult> run_selftest(const SelftestOptions& opts = {});

}  // namespace gumball

#endif
