#include "gumball/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <utility>

namespace gumball {

void Config::validate() const {
    if (ones + jays.size() != n)
        throw std::domain_error("Config: ones + jays must cover all n machines");
    unsigned prev = 2;
    for (unsigned j : jays) {
        if (j < prev || j > n + 1)
            throw std::domain_error("Config: jays must be nondecreasing within [2, n+1]");
        prev = j;
    }
}

std::vector<unsigned> Config::value_sequence() const {
    std::vector<unsigned> seq(ones, 1);
    seq.insert(seq.end(), jays.begin(), jays.end());
    return seq;
}

Config Config::all_j(unsigned n, unsigned j) {
    return Config{n, 0, std::vector<unsigned>(n, j)};
}

Config Config::conjectured(unsigned n) {
    return all_j(n, n + 1);
}

Int config_count(unsigned n) {
    return binom_coeff(2ul * n, n);
}

ConfigEnumerator::ConfigEnumerator(unsigned n) : n_(n), seq_(n, 1) {
    if (n < 2)
        throw std::domain_error("ConfigEnumerator: requires n >= 2");
}

std::optional<Config> ConfigEnumerator::next() {
    if (exhausted_)
        return std::nullopt;
    if (started_) {
        // Successor of a nondecreasing sequence over {1..n+1}: bump the
        // rightmost bumpable value and level everything after it.
        size_t i = seq_.size();
        while (i > 0 && seq_[i - 1] == n_ + 1)
            --i;
        if (i == 0) {
            exhausted_ = true;
            return std::nullopt;
        }
        unsigned v = seq_[i - 1] + 1;
        for (size_t k = i - 1; k < seq_.size(); ++k)
            seq_[k] = v;
    }
    started_ = true;

    Config c;
    c.n = n_;
    for (unsigned v : seq_) {
        if (v == 1)
            ++c.ones;
        else
            c.jays.push_back(v);
    }
    return c;
}

Rat eval_config(const Config& c) {
    c.validate();
    unsigned threshold = c.n - c.ones;
    Pmf acc = Pmf::point(0, threshold);
    for (unsigned j : c.jays)
        acc = convolve(acc, pmf_of(MachineSpec::two_point(j), j), threshold);
    return prob_at_most(acc, threshold);
}

namespace {

// Multisets of size `size` over an alphabet of `span` symbols.
Int multiset_count(unsigned size, unsigned span) {
    if (span == 0)
        return size == 0 ? Int(1) : Int(0);
    return binom_coeff(static_cast<unsigned long>(size) + span - 1, size);
}

struct Dfs {
    unsigned n = 0;
    bool prune = true;
    std::uint64_t max_nodes = 0;
    unsigned ckpt_depth = 2;
    const ResumeState* resume = nullptr;
    const std::function<void(const ResumeState&)>* on_checkpoint = nullptr;

    Rat best;
    std::vector<Config> argmin;
    Int evaluated = 0;
    Int pruned = 0;
    std::uint64_t nodes = 0;
    bool aborted = false;

    std::vector<unsigned> path;

    Config config_from_path(unsigned fill_value, unsigned fill_count) const {
        Config c;
        c.n = n;
        for (unsigned v : path) {
            if (v == 1)
                ++c.ones;
            else
                c.jays.push_back(v);
        }
        c.jays.insert(c.jays.end(), fill_count, fill_value);
        return c;
    }

    void candidate(const Rat& value, Config cfg) {
        if (value < best) {
            best = value;
            argmin.clear();
            argmin.push_back(std::move(cfg));
        } else if (value == best) {
            if (std::find(argmin.begin(), argmin.end(), cfg) == argmin.end())
                argmin.push_back(std::move(cfg));
        }
    }

    void emit_checkpoint() {
        if (!on_checkpoint || !*on_checkpoint)
            return;
        ResumeState snap;
        snap.completed_prefix = path;
        snap.incumbent = best;
        snap.incumbent_configs = argmin;
        snap.configs_evaluated = evaluated;
        snap.configs_pruned = pruned;
        (*on_checkpoint)(snap);
    }

    // rem: machines still to place. min_val: smallest value allowed next.
    // threshold: n minus the point-at-1 machines placed so far. acc: the
    // convolution of the two-point machines placed so far (empty until the
    // first one). Pruning devices run only at depth >= ckpt_depth so that a
    // checkpoint prefix partitions the work exactly.
    void run(unsigned rem, unsigned min_val, unsigned threshold, const std::optional<Pmf>& acc) {
        if (aborted)
            return;
        if (max_nodes != 0 && nodes >= max_nodes) {
            aborted = true;
            return;
        }
        ++nodes;

        if (resume && path.size() == resume->completed_prefix.size() &&
            path <= resume->completed_prefix)
            return;  // covered by the run being resumed

        const Rat tail_prob = acc ? prob_at_most(*acc, threshold) : Rat(1);
        const bool deep = path.size() >= ckpt_depth;

        if (rem == 0) {
            candidate(tail_prob, config_from_path(0, 0));
            ++evaluated;
        } else {
            if (min_val == 1) {
                // Point mass at 1 contributes exactly 1 to the sum.
                path.push_back(1);
                run(rem - 1, 1, threshold - 1, acc);
                path.pop_back();
                if (aborted)
                    return;
            }

            unsigned j_lo = std::max(min_val, 2u);
            bool collapse = prune && deep;
            unsigned j_rec_hi = collapse ? std::min(threshold, n + 1) : n + 1;
            for (unsigned j = j_lo; j <= j_rec_hi; ++j) {
                if (collapse) {
                    // Certified lower bound: every completion keeps the
                    // all-zero branch of each remaining machine, each of
                    // weight at least 1 - 1/j. Grows with j, so one hit
                    // clears the rest of the loop.
                    Rat lower = tail_prob * pow_rat(Rat(1) - Rat(1, j), static_cast<long>(rem));
                    if (lower > best) {
                        for (unsigned jj = j; jj <= j_rec_hi; ++jj)
                            pruned += multiset_count(rem - 1, n + 2 - jj);
                        break;
                    }
                }
                Pmf machine = pmf_of(MachineSpec::two_point(j), j);
                Pmf next = acc ? convolve(*acc, machine, threshold)
                               : convolve(Pmf::point(0, threshold), machine, threshold);
                path.push_back(j);
                run(rem - 1, j, threshold, next);
                path.pop_back();
                if (aborted)
                    return;
            }

            if (collapse) {
                // Machines with an atom above the threshold only ever land
                // their zero branch, so the remaining suffix has the closed
                // form tail_prob * prod(1 - 1/j). The smallest admissible j
                // minimizes it; the rest of the family is dominated.
                unsigned j_top = std::max(j_lo, threshold + 1);
                if (j_top <= n + 1) {
                    Rat value =
                        tail_prob * pow_rat(Rat(1) - Rat(1, j_top), static_cast<long>(rem));
                    candidate(value, config_from_path(j_top, rem));
                    ++evaluated;
                    pruned += multiset_count(rem, n + 2 - j_top) - 1;
                }
            }
        }

        if (path.size() == ckpt_depth)
            emit_checkpoint();
    }
};

}  // namespace

SearchReport verify_general(unsigned n, const SearchOptions& opts) {
    if (n < 2)
        throw std::domain_error("verify_general: requires n >= 2");
    auto t0 = std::chrono::steady_clock::now();

    Rat conjecture = pow_rat(Rat(n, n + 1), static_cast<long>(n));

    Dfs dfs;
    dfs.n = n;
    dfs.prune = opts.prune;
    dfs.max_nodes = opts.max_nodes;
    dfs.ckpt_depth = std::min(std::max(opts.checkpoint_depth, 1u), n);
    dfs.resume = opts.resume ? &*opts.resume : nullptr;
    dfs.on_checkpoint = &opts.on_checkpoint;

    // Seed the incumbent with the conjectured value as a pure bound; the
    // config itself only enters argmin once the search reaches it.
    dfs.best = conjecture;
    if (opts.resume) {
        if (opts.resume->completed_prefix.size() != dfs.ckpt_depth)
            throw std::domain_error("verify_general: resume prefix depth mismatch");
        dfs.best = std::min(dfs.best, opts.resume->incumbent);
        dfs.argmin = opts.resume->incumbent_configs;
        dfs.evaluated = opts.resume->configs_evaluated;
        dfs.pruned = opts.resume->configs_pruned;
    }

    dfs.run(n, 1, n, std::nullopt);

    SearchReport rep;
    rep.n = n;
    rep.complete = !dfs.aborted;
    rep.min_value = dfs.best;
    std::sort(dfs.argmin.begin(), dfs.argmin.end());
    rep.argmin = std::move(dfs.argmin);
    rep.conjecture_value = conjecture;
    Config conj_cfg = Config::conjectured(n);
    bool has_conj = std::find(rep.argmin.begin(), rep.argmin.end(), conj_cfg) != rep.argmin.end();
    rep.conjecture_holds = rep.complete && rep.min_value == conjecture && has_conj;
    rep.argmin_unique_at_conjecture = rep.complete && rep.argmin.size() == 1 && has_conj;
    rep.configs_evaluated = dfs.evaluated;
    rep.configs_pruned = dfs.pruned;
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace gumball
