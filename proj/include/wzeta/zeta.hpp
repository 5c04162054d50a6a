// Closed-form series data attached to a convenient weighted homogeneous
// polynomial: per-face cone series, the background series they sum to,
// coefficient descriptors and the closed rational form.
#pragma once

#include "wzeta/chi.hpp"
#include "wzeta/nondegeneracy.hpp"

namespace wzeta {

// Coefficient of T^m in the lattice-point series of the dual cone of the
// face with the given mask: L^-s(m) / (L-1)^(d-|I|) when the face lcm
// divides m, else zero.
LRational cone_series_closed(const WeightProfile& p, std::uint32_t face_mask, const BigInt& m);

// Coefficient of T^m in the background part of the series: -L^-s(m).
LRational background_coeff(const WeightProfile& p, const BigInt& m);

// The same coefficient, resummed independently over the cone partition:
// (L-1)^d * sum over faces and orders m' <= m of the closed cone series,
// minus one.  Equal to background_coeff by the partition identity.
LRational background_resummed(const WeightProfile& p, const BigInt& m);

// Everything reported about the coefficient a_m = L^-s(m) * class.
struct CoeffDescriptor {
    BigInt m;
    BigInt lshift; // s(m)
    bool pure = false;
    ClassToken token;
    ChiTriple chi; // realizations of the class factor
};

// Descriptor of the coefficient at order m.  Pre: convenient weighted
// homogeneous profile (require_series_ready), and no face certified
// degenerate (require_not_degenerate on a report).  Non-singular
// profiles are allowed; their realizations all vanish.
CoeffDescriptor modified_coeff(const WeightProfile& p, const BigInt& m);

// Closed rational form: the series equals
//   sum over face masks (including the empty one) of
//     class(mask) * sum_terms L^-lshift T^texp / (1 - L^-abs_w T^m_w)
// where class(mask) is the nonzero-fiber class minus the zero-fiber
// class of the face, and the empty mask carries minus the unit class.
struct RationalForm {
    struct NumTerm {
        std::uint32_t mask;
        BigInt texp;
        BigInt lshift;
    };
    std::vector<NumTerm> terms; // ordered by mask, then texp
    BigInt denom_lshift;        // abs_w
    BigInt denom_texp;          // m_w
};
RationalForm rational_form(const WeightProfile& p);

} // namespace wzeta
