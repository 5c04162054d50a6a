// Arbitrary-precision integers and rationals, backed by GMP, plus the handful
// of number-theoretic helpers used across the library.

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "wzeta/errors.hpp"

namespace wzeta {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Floor division, exact for negative operands as well.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const BigInt& r, const BigInt& x) {
    return mpz_divisible_p(x.get_mpz_t(), r.get_mpz_t()) != 0;
}

inline BigInt big_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// p-adic valuation of x (x != 0, p >= 2).
inline unsigned long valuation(const BigInt& x, const BigInt& p) {
    if (x == 0) throw InputError("valuation of zero is undefined");
    BigInt rest = x;
    unsigned long v = 0;
    while (divides(p, rest)) {
        rest /= p;
        ++v;
    }
    return v;
}

inline long to_long_checked(const BigInt& x, const char* what = "integer") {
    if (!x.fits_slong_p())
        throw CapacityError(std::string(what) + " does not fit a machine word: " + x.get_str());
    return x.get_si();
}

// Canonical "p/q" form; integers print without the "/1".
inline std::string rational_str(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Parses "p", "-p" or "p/q" with arbitrary-precision parts.
Rational rational_parse(const std::string& text);

} // namespace wzeta
