#ifndef GUMBALL_RATIONAL_HPP
#define GUMBALL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gumball {

using Int = mpz_class;

// Arbitrary-precision rational, always in canonical form:
// gcd(|num|, den) == 1 and den >= 1. The sign lives in the numerator.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long v) : num_(v), den_(1) {}
    Rat(unsigned long v) : num_(), den_(1) { mpz_set_ui(num_.get_mpz_t(), v); }
    Rat(int v) : num_(v), den_(1) {}
    Rat(unsigned v) : Rat(static_cast<unsigned long>(v)) {}
    explicit Rat(const Int& v) : num_(v), den_(1) {}

    // Reduces to canonical form. Throws std::domain_error if den == 0.
    Rat(Int num, Int den);

    // Accepts "a/b", plain integers, and decimal or scientific notation
    // ("0.25", "1e-30", "-3.5e2"). Throws std::domain_error on bad input.
    static Rat parse(std::string_view text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    // -1, 0 or +1
    int sign() const { return mpz_sgn(num_.get_mpz_t()); }

    Rat abs() const;
    // Throws std::domain_error on zero.
    Rat reciprocal() const;

    Rat operator-() const;
    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    // Throws std::domain_error when b == 0.
    friend Rat operator/(const Rat& a, const Rat& b);

    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    // Sign of a - b, by cross multiplication (denominators are positive).
    static int cmp(const Rat& a, const Rat& b);

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }

    // Always the explicit "num/den" form, e.g. "4/9", "-1/3", "5/1".
    std::string to_fraction_string() const;

    // Round-to-nearest decimal with `sig` significant digits (ties away
    // from zero). Advisory only; the fraction form is authoritative.
    std::string to_decimal_string(int sig = 12) const;

private:
    struct canonical_t {};
    // Caller guarantees gcd(|num|, den) == 1 and den >= 1.
    Rat(canonical_t, Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {}

    Int num_;
    Int den_;
};

// n!/(k!(n-k)!) exactly. Throws std::domain_error when k > n.
Int binom_coeff(unsigned long n, unsigned long k);

// b^e with the 0^0 == 1 convention.
Int pow_int(const Int& b, unsigned long e);

// x^e by binary exponentiation; e may be negative when x != 0.
// Throws std::domain_error on 0^negative.
Rat pow_rat(const Rat& x, long e);

Int factorial(unsigned long n);

}  // namespace gumball

#endif
