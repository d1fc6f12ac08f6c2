#ifndef GUMBALL_BINOMIAL_HPP
#define GUMBALL_BINOMIAL_HPP

#include "gumball/rational.hpp"

namespace gumball {

// Parameters of a cumulative binomial query: n trials, success probability
// x, cutoff m.
struct BinomQuery {
    unsigned n;
    Rat x;
    unsigned m;

    // Throws std::domain_error unless 0 <= x <= 1 and m <= n.
    void validate() const;
};

// Exact sum_{k<=m} C(n,k) x^k (1-x)^(n-k).
//
// All terms share the denominator den(x)^n, so the sum is accumulated as a
// single big integer with the powers of 1-x built incrementally; one
// reduction at the end produces the canonical result.
Rat binom_cdf(unsigned n, const Rat& x, unsigned m);
Rat binom_cdf(const BinomQuery& q);

// Probability that a Binomial(n, m/n) variable, whose mean is the integer m,
// lands at or below m-1. Requires 1 <= m <= n.
Rat f_nm(unsigned n, unsigned m);

// The i.i.d. objective: probability that n independent two-point(j) machines
// produce a total of at most n, i.e. binom_cdf(n, 1/j, floor(n/j)).
// Requires 2 <= j <= n+1.
Rat g_nj(unsigned n, unsigned j);

// True iff m is a median of Binomial(n, m/n):
// P(X <= m) >= 1/2 and P(X >= m) >= 1/2, decided exactly. Requires 1 <= m <= n.
bool median_check(unsigned n, unsigned m);

// True iff binom_cdf(n, ., m) is non-increasing across the pair x1 <= x2.
// Throws std::domain_error when x1 > x2 (or either is outside [0,1], m > n).
bool lemma5_check(unsigned n, unsigned m, const Rat& x1, const Rat& x2);

}  // namespace gumball

#endif
