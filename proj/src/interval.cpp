#include "gumball/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gumball {

RatInterval::RatInterval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi)
        throw std::domain_error("RatInterval: lo > hi");
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo;
    Rat p2 = a.lo * b.hi;
    Rat p3 = a.hi * b.lo;
    Rat p4 = a.hi * b.hi;
    Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {std::move(lo), std::move(hi)};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero())
        throw std::domain_error("RatInterval: division by interval containing zero");
    return a * RatInterval(b.hi.reciprocal(), b.lo.reciprocal());
}

RatInterval operator*(const RatInterval& a, const Rat& s) {
    if (s.sign() >= 0)
        return {a.lo * s, a.hi * s};
    return {a.hi * s, a.lo * s};
}

RatInterval operator+(const RatInterval& a, const Rat& s) {
    return {a.lo + s, a.hi + s};
}

RatInterval operator-(const RatInterval& a, const Rat& s) {
    return {a.lo - s, a.hi - s};
}

RatInterval exp_enclosure(const Rat& x, const Rat& tol) {
    if (tol.sign() <= 0)
        throw std::domain_error("exp_enclosure: tolerance must be positive");
    Rat ax = x.abs();
    if (ax > Rat(4))
        throw std::domain_error("exp_enclosure: |x| > 4 unsupported");

    const Rat half_tol = tol / Rat(2);
    const Int& a = ax.num();
    const Int& b = ax.den();

    // Find the first N > 8 whose remainder bound drops to half_tol.
    unsigned long n = 9;
    Rat term = pow_rat(ax, 9) / Rat(factorial(9));  // |x|^N / N!
    Rat bound;
    for (;;) {
        // bound = term / (1 - |x|/(N+1)) = term * b(N+1) / (b(N+1) - a)
        Int scaled = b * Int(static_cast<unsigned long>(n + 1));
        bound = term * Rat(scaled, scaled - a);
        if (bound <= half_tol)
            break;
        term *= ax / Rat(static_cast<unsigned long>(n + 1));
        ++n;
    }

    // Partial sum of the first N terms, exact.
    Rat sum(1);
    Rat t(1);
    for (unsigned long i = 1; i < n; ++i) {
        t *= x / Rat(i);
        sum += t;
    }
    return {sum - bound, sum + bound};
}

}  // namespace gumball
