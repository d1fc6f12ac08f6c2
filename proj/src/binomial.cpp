#include "gumball/binomial.hpp"

#include <stdexcept>
#include <vector>

namespace gumball {

void BinomQuery::validate() const {
    if (x.sign() < 0 || x > Rat(1))
        throw std::domain_error("BinomQuery: x must lie in [0, 1]");
    if (m > n)
        throw std::domain_error("BinomQuery: m > n");
}

Rat binom_cdf(unsigned n, const Rat& x, unsigned m) {
    BinomQuery{n, x, m}.validate();

    const Int& p = x.num();        // x = p/q canonical, 0 <= p <= q
    const Int& q = x.den();
    Int d = q - p;                 // 1-x = d/q

    // (1-x)^(n-k) for k = m..0, built upward from the single binary power.
    std::vector<Int> dpow(m + 1);
    dpow[m] = pow_int(d, n - m);
    for (unsigned k = m; k > 0; --k)
        dpow[k - 1] = dpow[k] * d;

    Int total = 0;
    Int coeff = 1;                 // C(n, k)
    Int ppow = 1;                  // p^k
    for (unsigned k = 0; k <= m; ++k) {
        if (k > 0) {
            coeff *= n - k + 1;
            mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), k);
            ppow *= p;
        }
        total += coeff * ppow * dpow[k];
    }
    return Rat(total, pow_int(q, n));
}

Rat binom_cdf(const BinomQuery& q) {
    return binom_cdf(q.n, q.x, q.m);
}

Rat f_nm(unsigned n, unsigned m) {
    if (m < 1 || m > n)
        throw std::domain_error("f_nm: requires 1 <= m <= n");
    return binom_cdf(n, Rat(m, n), m - 1);
}

Rat g_nj(unsigned n, unsigned j) {
    if (j < 2 || j > n + 1)
        throw std::domain_error("g_nj: requires 2 <= j <= n+1");
    return binom_cdf(n, Rat(1, j), n / j);
}

bool median_check(unsigned n, unsigned m) {
    if (m < 1 || m > n)
        throw std::domain_error("median_check: requires 1 <= m <= n");
    Rat x(m, n);
    Rat half(1, 2);
    if (binom_cdf(n, x, m) < half)
        return false;
    // P(X >= m) = 1 - P(X <= m-1)
    return Rat(1) - binom_cdf(n, x, m - 1) >= half;
}

bool lemma5_check(unsigned n, unsigned m, const Rat& x1, const Rat& x2) {
    if (x1 > x2)
        throw std::domain_error("lemma5_check: requires x1 <= x2");
    return binom_cdf(n, x1, m) >= binom_cdf(n, x2, m);
}

}  // namespace gumball
