// Compactly supported Euler characteristic realizations of the classes
// that occur as series coefficients.
#pragma once

#include "wzeta/faces.hpp"

namespace wzeta {

enum class Ambient { torus, affine };

// chi_c of { sum_i signs[i] * x_i^exps[i] = level } inside (R*)^k or R^k,
// by counting the open cells cut out on each sign orthant.  level is -1,
// 0 or +1 (positive levels all agree after rescaling, as do negative).
// Pre: exps[i] >= 1, signs[i] in {-1,+1}, k <= 24.
long chi_diagonal_fiber(const std::vector<long>& exps, const std::vector<int>& signs, int level,
                        Ambient ambient);

// Exact congruence diagonalization of a symmetric rational matrix:
// basis columns C with C^T G C diagonal.  pos/neg/zero count the signs
// of the diagonal entries.
struct QuadDiag {
    int pos = 0, neg = 0, zero = 0;
    std::vector<Rational> diag;
    std::vector<std::vector<Rational>> basis; // basis[j] = j-th new basis vector
};
QuadDiag diagonalize_quadratic(std::vector<std::vector<Rational>> gram);

// Gram matrix of a face whose terms all have total degree 2, indexed by
// the face axes.
std::vector<std::vector<Rational>> quadratic_gram(const SparsePoly& f,
                                                  const std::vector<int>& axes);

// Identity tag for the class multiplying L^-s(m) in a coefficient.  For
// a fixed polynomial the tag is determined by which exponents divide m.
struct ClassToken {
    enum class Kind { pure, diagonal, quadratic, general };
    Kind kind = Kind::pure;
    std::uint32_t mask = 0;
    std::vector<std::pair<long, int>> diag; // (exponent, pure-term sign) per axis
    int sig_pos = 0, sig_neg = 0, sig_zero = 0; // quadratic signature

    std::string id() const;                    // level-independent canonical form
    std::string str(const std::string& level) const; // id() + "@" + level
};

// chi_c of the three standard realizations of the class factor: the
// fibers over +1 and -1 relative to the zero fiber, and the plain class
// of the total space.
struct ChiTriple {
    long fplus = 0, fminus = 0, bar = 0;
    enum class Exactness { exact, mod2, unknown } how = Exactness::unknown;
};

struct CoeffClass {
    bool pure = false;
    ClassToken token;
    ChiTriple chi;
};

// Class data for the coefficient at order m.  Works for any convenient
// weighted homogeneous profile; for non-singular ones every realization
// vanishes.
CoeffClass coeff_class_any(const WeightProfile& p, const BigInt& m);

// Same, but guarded: throws InputError when the profile is not singular,
// since the series is identically zero there.
CoeffClass coeff_class(const WeightProfile& p, const BigInt& m);

// Certificate that chi of the relative +1 fiber at order m is odd, hence
// nonzero.  exp2 asks that m be even and divisible by no exponent other
// than 2; exp4 that 4 | m and no exponent outside {2,4} divides m
// (InputError otherwise).  The parity is computed from the exact
// quadratic signature for exp2 and from the diagonal representative of
// the face for exp4; an even outcome throws InternalError.
enum class ParityKind { exp2, exp4 };
struct ParityCertificate {
    ParityKind kind;
    std::uint32_t mask = 0;
    long diff = 0;
    bool odd = false;
    std::vector<std::pair<long, int>> diag;
};
ParityCertificate parity_certificate(const WeightProfile& p, const BigInt& m, ParityKind kind);

} // namespace wzeta
