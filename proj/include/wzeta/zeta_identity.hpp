// Symbolic coefficient layer.  Coefficients of the three series (plain,
// modified, naive) are rational-function combinations of one formal
// symbol per face; the inversion identity between them is checked
// exactly, term by term, without realizing any class.
#pragma once

#include <map>

#include "wzeta/zeta.hpp"

namespace wzeta {

// Formal symbols: the ring unit, plus the nonzero-fiber class and the
// zero-set class of each face.  The zero-set class appears fibered (times
// a torus factor projecting to the base) in the plain series, but that
// fibration is trivial, so as a ring element it is the plain zero-set
// class and one symbol serves both roles.
struct SymbolId {
    enum class Kind : int { unit = 0, nonzero_fiber = 1, zero_set = 2 };
    Kind kind = Kind::unit;
    std::uint32_t mask = 0;
    auto operator<=>(const SymbolId&) const = default;
};

// Linear combination of symbols with LRational coefficients.
using SymCoeff = std::map<SymbolId, LRational>;

SymCoeff sym_add(const SymCoeff& a, const SymCoeff& b);
SymCoeff sym_scale(const SymCoeff& a, const LRational& c);
bool sym_equal(const SymCoeff& a, const SymCoeff& b);
std::string sym_str(const SymCoeff& a);

// Coefficient of T^m in the modified series: for every face whose lcm
// divides m the pair (nonzero fiber - zero fiber) at L^-s(m), plus the
// background -L^-s(m) times the unit.  corrupt_background flips the
// background sign (a deliberately broken variant used as a negative
// control; it must fail the identity at m = 1).
SymCoeff sym_modified_coeff(const WeightProfile& p, const BigInt& m,
                            bool corrupt_background = false);

// Image under the forgetful transform: each symbol is replaced by the
// plain class of its total space, re-embedded along the unit.
SymCoeff sym_naive_transform(const SymCoeff& a);

// Coefficient of T^m of the expanded rational form.
SymCoeff sym_rational_expansion(const WeightProfile& p, const RationalForm& rf, const BigInt& m);

// Checks, through T^order, that the plain series equals
//   modified + (unit - L^-1 * naive(modified)) / (1 - L^-1 T) - unit.
struct IdentityCheck {
    bool ok = true;
    long first_fail = 0; // smallest failing order when !ok
};
IdentityCheck verify_inversion_identity(const WeightProfile& p, long order,
                                        bool corrupt_background = false);

} // namespace wzeta
