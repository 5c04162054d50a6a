// Weight and exponent data extracted from a polynomial.
#pragma once

#include <map>

#include "wzeta/sparse_poly.hpp"

namespace wzeta {

// Result of analyzing a polynomial for the invariants the series engine
// needs.  delta[i] is the smallest pure exponent on axis i (0 when the
// axis has no pure term).  When the polynomial is weighted homogeneous, w
// is a primitive positive integer weight vector and every term satisfies
// w . exp = m_w; when it is also convenient, w[i] * delta[i] = m_w and
// m_w = lcm(delta), abs_w = sum of weights.
struct WeightProfile {
    int d = 0;
    std::vector<long> delta;
    std::vector<BigInt> w;
    BigInt m_w = 0;
    BigInt abs_w = 0;
    bool convenient = false;
    bool weighted_homogeneous = false;
    bool singular = false;
    SparsePoly poly;
};

// Computes the profile.  Never throws on well-formed polynomials; the
// flags report what was found.  w, m_w, abs_w are filled only when the
// polynomial is weighted homogeneous.
WeightProfile analyze_polynomial(const SparsePoly& f);

// Throws InputError unless the profile is convenient and weighted
// homogeneous (the combination the series formulas require).
void require_series_ready(const WeightProfile& p);

// s(m) = sum_i floor(m / delta[i]).  Pre: convenient profile, m >= 0.
BigInt s_floor_sum(const WeightProfile& p, const BigInt& m);

// Multiplicity table of the exponents: delta value -> count.
std::map<long, int> delta_multiset(const WeightProfile& p);

// Sum of reciprocals 1/delta[i].
Rational reciprocal_sum(const WeightProfile& p);

// Decides whether some rational combination of the given vectors has all
// coordinates >= 1, via exact Fourier-Motzkin elimination; fills witness
// with such a combination when feasible.  Exposed for testing.
bool positive_combination(const std::vector<std::vector<Rational>>& basis, int dim,
                          std::vector<Rational>& witness);

} // namespace wzeta
