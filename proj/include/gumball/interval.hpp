#ifndef GUMBALL_INTERVAL_HPP
#define GUMBALL_INTERVAL_HPP

#include "gumball/rational.hpp"

namespace gumball {

// Closed interval with exact rational endpoints. Every operation returns an
// enclosure of the true result set, so inequality verdicts drawn from these
// intervals are rigorous.
struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() : lo(0), hi(0) {}
    explicit RatInterval(Rat point) : lo(point), hi(std::move(point)) {}
    // Throws std::domain_error unless lo <= hi.
    RatInterval(Rat lo, Rat hi);

    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& inner) const {
        return lo <= inner.lo && inner.hi <= hi;
    }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b);
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b);
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
    // Throws std::domain_error when 0 is in b.
    friend RatInterval operator/(const RatInterval& a, const RatInterval& b);

    friend RatInterval operator*(const RatInterval& a, const Rat& s);
    friend RatInterval operator*(const Rat& s, const RatInterval& a) { return a * s; }
    friend RatInterval operator+(const RatInterval& a, const Rat& s);
    friend RatInterval operator-(const RatInterval& a, const Rat& s);
};

// Rigorous enclosure of exp(x) for |x| <= 4, of width at most tol.
//
// Taylor partial sum with N terms plus the Lagrange-style remainder bound
//   |R_N| <= |x|^N/N! * 1/(1 - |x|/(N+1)),
// valid here since N starts above 8 and |x| <= 4. N is the smallest value
// with bound <= tol/2, which makes enclosures nest as tol shrinks.
// Throws std::domain_error when |x| > 4 or tol <= 0.
RatInterval exp_enclosure(const Rat& x, const Rat& tol);

}  // namespace gumball

#endif
