#ifndef GUMBALL_SEARCH_HPP
#define GUMBALL_SEARCH_HPP

#include "gumball/pmf.hpp"
#include "gumball/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace gumball {

// One extreme-point configuration of n machines: `ones` machines with a
// point mass at 1 and a nondecreasing multiset of two-point values in
// [2, n+1] for the rest.
struct Config {
    unsigned n = 0;
    unsigned ones = 0;
    std::vector<unsigned> jays;

    // Throws std::domain_error unless canonical (counts add up, jays
    // nondecreasing and within [2, n+1]).
    void validate() const;

    // The machine values written out, ones first: e.g. {1, 1, 3}.
    std::vector<unsigned> value_sequence() const;

    static Config all_j(unsigned n, unsigned j);
    // The conjectured minimizer: every machine two-point at n+1.
    static Config conjectured(unsigned n);

    bool operator==(const Config&) const = default;
    // Lexicographic on the value sequence; the canonical report order.
    bool operator<(const Config& o) const { return value_sequence() < o.value_sequence(); }
};

// Number of size-n multisets over the n+1 machine values, C(2n, n).
Int config_count(unsigned n);

// Yields every configuration exactly once, in lexicographic order of the
// value sequence. Throws std::domain_error when n < 2.
class ConfigEnumerator {
public:
    explicit ConfigEnumerator(unsigned n);
    std::optional<Config> next();

private:
    unsigned n_;
    std::vector<unsigned> seq_;
    bool exhausted_ = false;
    bool started_ = false;
};

// Exact P(sum <= n) for one configuration: point-at-1 machines fold into a
// lowered threshold, the two-point machines convolve with overflow
// bucketing at that threshold.
Rat eval_config(const Config& c);

// Snapshot of a partially explored search, sufficient to resume it.
// `completed_prefix` is the last fully explored prefix (at the checkpoint
// depth) of the lexicographic value-sequence tree: every configuration
// whose leading values compare <= to it has been accounted for.
struct ResumeState {
    std::vector<unsigned> completed_prefix;
    Rat incumbent;
    std::vector<Config> incumbent_configs;
    Int configs_evaluated = 0;
    Int configs_pruned = 0;
};

struct SearchOptions {
    bool prune = true;
    // 0 = unlimited. When the node budget runs out the report comes back
    // with complete = false rather than silently partial numbers.
    std::uint64_t max_nodes = 0;
    unsigned checkpoint_depth = 2;
    std::optional<ResumeState> resume;
    // Called after each fully explored checkpoint-depth subtree.
    std::function<void(const ResumeState&)> on_checkpoint;
};

struct SearchReport {
    unsigned n = 0;
    Rat min_value;
    std::vector<Config> argmin;
    Rat conjecture_value;
    bool conjecture_holds = false;
    bool argmin_unique_at_conjecture = false;
    Int configs_evaluated = 0;
    Int configs_pruned = 0;
    bool complete = true;
    double wall_time_ms = 0.0;
};

// Minimizes P(sum <= n) over every configuration. With prune = false each
// configuration is evaluated by convolution; with prune = true subtrees are
// skipped only under certified dominance or a certified lower bound above
// the incumbent, so min_value and argmin are identical in both modes.
// Throws std::domain_error when n < 2.
SearchReport verify_general(unsigned n, const SearchOptions& opts = {});

}  // namespace gumball

#endif
