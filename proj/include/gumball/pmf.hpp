#ifndef GUMBALL_PMF_HPP
#define GUMBALL_PMF_HPP

#include "gumball/rational.hpp"

#include <vector>

namespace gumball {

// One machine's law at an extreme point of the mean-one search space:
// either a point mass at 1, or the two-point law {0 -> 1-1/j, j -> 1/j}.
struct MachineSpec {
    enum class Kind { PointAtOne, TwoPoint };

    Kind kind = Kind::PointAtOne;
    unsigned j = 0;  // meaningful only for TwoPoint, j >= 2

    static MachineSpec point_at_one() { return {Kind::PointAtOne, 0}; }
    // Throws std::domain_error when j < 2.
    static MachineSpec two_point(unsigned j);

    unsigned max_support() const { return kind == Kind::PointAtOne ? 1 : j; }
    bool operator==(const MachineSpec&) const = default;
};

// Finite probability mass function on {0..cap} with an overflow bucket that
// aggregates all mass above cap. Entries are exact rationals, nonnegative,
// and sum to exactly 1 with the overflow included.
class Pmf {
public:
    // Validates the invariants; throws std::domain_error on violation.
    Pmf(std::vector<Rat> mass, Rat overflow);

    // Point mass at v. Throws when v > cap.
    static Pmf point(unsigned v, unsigned cap);

    unsigned cap() const { return static_cast<unsigned>(mass_.size()) - 1; }
    const Rat& at(unsigned v) const { return mass_.at(v); }
    const Rat& overflow() const { return overflow_; }
    const std::vector<Rat>& mass() const { return mass_; }

    bool operator==(const Pmf&) const = default;

private:
    struct unchecked_t {};
    Pmf(unchecked_t, std::vector<Rat> mass, Rat overflow)
        : mass_(std::move(mass)), overflow_(std::move(overflow)) {}

    friend Pmf convolve(const Pmf&, const Pmf&, unsigned);
    friend Pmf lemma1_transport(const Pmf&, unsigned, unsigned);

    std::vector<Rat> mass_;
    Rat overflow_;
};

// Exact law of the machine on {0..cap}; overflow is zero.
// Throws std::domain_error when cap < spec.max_support().
Pmf pmf_of(const MachineSpec& spec, unsigned cap);

// Distribution of the independent sum, truncated at cap: everything landing
// above cap (including anything involving either overflow bucket) goes to
// the result's overflow. Total mass is still exactly 1.
Pmf convolve(const Pmf& a, const Pmf& b, unsigned cap);

// Exact P(X <= t). Throws std::domain_error when t > cap, since the
// truncated representation could not answer exactly.
Rat prob_at_most(const Pmf& p, unsigned t);

// Exact expected value. Throws std::domain_error when overflow > 0.
Rat mean(const Pmf& p);

// Mass transport that empties the atom at k > n+1, moving k/(n+1) of it to
// n+1 and returning the rest to 0. Preserves total mass and the mean; for
// mean-one inputs the new mass at 0 cannot go negative. A zero atom at k is
// a no-op. Throws std::domain_error when k <= n+1, k > cap, the input mean
// is not 1, or the construction would drive mass at 0 negative.
Pmf lemma1_transport(const Pmf& p, unsigned n, unsigned k);

}  // namespace gumball

#endif
