// Rational functions in one symbol L whose denominator is a product of a
// power of L and a power of (L - 1).
//
// Every coefficient produced by the zeta engine lives in this subring, and
// restricting denominators to L^b (L-1)^a keeps canonical forms unique and
// equality decidable.  Values are stored canonically:
//
//     value = num(L) / ((L-1)^a * L^b)
//
// with num's leading coefficient nonzero, num(1) != 0 whenever a > 0 and
// num(0) != 0 whenever b > 0.  Zero is the empty numerator with a = b = 0.

#pragma once

#include <string>
#include <vector>

#include "wzeta/rational.hpp"

namespace wzeta {

class LRational {
public:
    LRational() = default;
    explicit LRational(long c);
    explicit LRational(const BigInt& c);

    // L^e for any (possibly negative) exponent.
    static LRational l_pow(long e);
    // L^e / (L-1)^t with t >= 0.
    static LRational monomial_quotient(long l_exp, long lm1_pow);
    // (L-1)^d as a plain polynomial, d >= 0.
    static LRational lminus1_pow(unsigned long d);
    static LRational one() { return LRational(1); }

    bool is_zero() const { return num_.empty(); }

    LRational operator-() const;
    LRational operator+(const LRational& o) const;
    LRational operator-(const LRational& o) const;
    LRational operator*(const LRational& o) const;
    LRational& operator+=(const LRational& o) { *this = *this + o; return *this; }
    LRational& operator-=(const LRational& o) { *this = *this - o; return *this; }
    LRational& operator*=(const LRational& o) { *this = *this * o; return *this; }
    LRational scaled(const BigInt& c) const;

    bool operator==(const LRational& o) const;
    bool operator!=(const LRational& o) const { return !(*this == o); }

    // Coefficients of L^0, L^-1, ..., L^-N of the expansion at L = infinity.
    // Requires the value to have no positive part (deg num <= a + b),
    // otherwise throws InputError.
    std::vector<BigInt> expand(long order) const;

    // Canonical text, e.g. "-L^-5", "L^-1/(L-1)", "(1 - 2*L + L^2)/(L-1)".
    std::string str() const;

    const std::vector<BigInt>& num() const { return num_; }
    long lm1_pow() const { return a_; }
    long l_pow_den() const { return b_; }

private:
    std::vector<BigInt> num_;  // num_[i] is the coefficient of L^i
    long a_ = 0;               // power of (L-1) in the denominator
    long b_ = 0;               // power of L in the denominator
    void canonicalize();
};

} // namespace wzeta
