#include "gumball/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace gumball {

namespace {

void reduce(Int& num, Int& den) {
    if (mpz_sgn(den.get_mpz_t()) == 0)
        throw std::domain_error("Rat: zero denominator");
    if (mpz_sgn(den.get_mpz_t()) < 0) {
        mpz_neg(num.get_mpz_t(), num.get_mpz_t());
        mpz_neg(den.get_mpz_t(), den.get_mpz_t());
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
}

Int abs_int(const Int& v) {
    Int r;
    mpz_abs(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

}  // namespace

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    reduce(num_, den_);
}

Rat Rat::abs() const {
    return Rat(canonical_t{}, abs_int(num_), den_);
}

Rat Rat::reciprocal() const {
    if (is_zero())
        throw std::domain_error("Rat: reciprocal of zero");
    if (sign() > 0)
        return Rat(canonical_t{}, den_, num_);
    return Rat(canonical_t{}, -den_, -num_);
}

Rat Rat::operator-() const {
    return Rat(canonical_t{}, -num_, den_);
}

Rat operator+(const Rat& a, const Rat& b) {
    // Henrici's trick: with g = gcd(ad, bd), the only factor the raw sum can
    // share with the raw denominator is gcd(num, g).
    Int g;
    mpz_gcd(g.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
    Int bdg = b.den_ / g;
    Int num = a.num_ * bdg + b.num_ * (a.den_ / g);
    Int den = a.den_ * bdg;
    Int g2;
    mpz_gcd(g2.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
    if (g2 != 1) {
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g2.get_mpz_t());
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g2.get_mpz_t());
    }
    return Rat(Rat::canonical_t{}, std::move(num), std::move(den));
}

Rat operator-(const Rat& a, const Rat& b) {
    return a + (-b);
}

Rat operator*(const Rat& a, const Rat& b) {
    // Cross-cancel first; the result is then already canonical.
    Int g1, g2;
    mpz_gcd(g1.get_mpz_t(), a.num_.get_mpz_t(), b.den_.get_mpz_t());
    mpz_gcd(g2.get_mpz_t(), b.num_.get_mpz_t(), a.den_.get_mpz_t());
    Int num = (a.num_ / g1) * (b.num_ / g2);
    Int den = (a.den_ / g2) * (b.den_ / g1);
    return Rat(Rat::canonical_t{}, std::move(num), std::move(den));
}

Rat operator/(const Rat& a, const Rat& b) {
    return a * b.reciprocal();
}

int Rat::cmp(const Rat& a, const Rat& b) {
    if (a.den_ == b.den_)
        return mpz_cmp(a.num_.get_mpz_t(), b.num_.get_mpz_t());
    Int lhs = a.num_ * b.den_;
    Int rhs = b.num_ * a.den_;
    return mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
}

std::string Rat::to_fraction_string() const {
    return num_.get_str() + "/" + den_.get_str();
}

Rat Rat::parse(std::string_view text) {
    auto fail = [&] { throw std::domain_error("Rat: cannot parse '" + std::string(text) + "'"); };
    if (text.empty())
        fail();

    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::string ns(text.substr(0, slash));
        std::string ds(text.substr(slash + 1));
        if (ns.empty() || ds.empty())
            fail();
        Int n, d;
        if (mpz_set_str(n.get_mpz_t(), ns.c_str(), 10) != 0)
            fail();
        if (mpz_set_str(d.get_mpz_t(), ds.c_str(), 10) != 0)
            fail();
        return Rat(n, d);
    }

    // [sign] digits [. digits] [e [sign] digits]
    size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool any = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i];
        ++i;
        any = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits += text[i];
            ++frac_digits;
            ++i;
            any = true;
        }
    }
    if (!any)
        fail();
    long exp10 = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            eneg = text[i] == '-';
            ++i;
        }
        if (i >= text.size())
            fail();
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000)
                fail();
            ++i;
        }
        exp10 = eneg ? -v : v;
    }
    if (i != text.size())
        fail();

    Int mantissa;
    if (mpz_set_str(mantissa.get_mpz_t(), digits.empty() ? "0" : digits.c_str(), 10) != 0)
        fail();
    if (neg)
        mantissa = -mantissa;
    long net = exp10 - frac_digits;
    if (net >= 0)
        return Rat(mantissa * pow_int(Int(10), static_cast<unsigned long>(net)), Int(1));
    return Rat(mantissa, pow_int(Int(10), static_cast<unsigned long>(-net)));
}

std::string Rat::to_decimal_string(int sig) const {
    if (sig < 1)
        throw std::domain_error("Rat: need at least one significant digit");
    if (is_zero())
        return "0";

    Int a = abs_int(num_);
    const Int& b = den_;

    // Find e with 10^e <= a/b < 10^(e+1).
    auto at_least = [&](long e) {
        // a/b >= 10^e ?
        if (e >= 0) {
            Int rhs = b * pow_int(Int(10), static_cast<unsigned long>(e));
            return a >= rhs;
        }
        Int lhs = a * pow_int(Int(10), static_cast<unsigned long>(-e));
        return lhs >= b;
    };
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
    while (!at_least(e))
        --e;
    while (at_least(e + 1))
        ++e;

    // q = round(a/b * 10^(sig-1-e)), ties away from zero.
    long shift = sig - 1 - e;
    Int t = a;
    Int d = b;
    if (shift >= 0)
        t *= pow_int(Int(10), static_cast<unsigned long>(shift));
    else
        d *= pow_int(Int(10), static_cast<unsigned long>(-shift));
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
    if (2 * r >= d)
        q += 1;
    Int cap = pow_int(Int(10), static_cast<unsigned long>(sig));
    if (q >= cap) {
        q /= 10;
        ++e;
    }

    std::string ds = q.get_str();
    std::string out = sign() < 0 ? "-" : "";
    auto strip = [](std::string s) {
        while (!s.empty() && s.back() == '0')
            s.pop_back();
        return s;
    };
    if (e >= 0 && e < sig) {
        out += ds.substr(0, e + 1);
        std::string frac = strip(ds.substr(e + 1));
        if (!frac.empty())
            out += "." + frac;
    } else if (e < 0 && e >= -4) {
        out += "0.";
        out += std::string(static_cast<size_t>(-e - 1), '0');
        out += strip(ds);
    } else {
        out += ds.substr(0, 1);
        std::string frac = strip(ds.substr(1));
        if (!frac.empty())
            out += "." + frac;
        out += "e" + std::to_string(e);
    }
    return out;
}

Int binom_coeff(unsigned long n, unsigned long k) {
    if (k > n)
        throw std::domain_error("binom_coeff: k > n");
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& x, long e) {
    if (e >= 0) {
        // Powers of a canonical fraction stay canonical.
        return Rat(pow_int(x.num(), static_cast<unsigned long>(e)),
                   pow_int(x.den(), static_cast<unsigned long>(e)));
    }
    if (x.is_zero())
        throw std::domain_error("pow_rat: zero to a negative power");
    return pow_rat(x.reciprocal(), -e);
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace gumball
