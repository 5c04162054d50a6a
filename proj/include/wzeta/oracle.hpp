// Query interface over the coefficient stream of the modified series.
// Recovery code sees only this: degree bookkeeping of realized
// coefficients, token identity, and parity certificates.  It never sees
// the exponents themselves.
#pragma once

#include <memory>

#include "wzeta/chi.hpp"

namespace wzeta {

class ZetaOracle {
  public:
    virtual ~ZetaOracle() = default;

    // Number of variables of the underlying polynomial.
    virtual int dimension() const = 0;

    // True when the coefficient at m reduces to the unit class.
    virtual bool is_pure(const BigInt& m) const = 0;

    // Degree in u of the plain realization of a pure coefficient
    // (always 1 - s(m)).  Pre: is_pure(m).
    virtual BigInt deg_beta_bar(const BigInt& m) const = 0;

    // Degree in u of the relative +1 fiber realization, up to an additive
    // offset that depends only on the token: -s(m) + offset(token).
    // Pre: !is_pure(m) and the parity certificate below holds.
    virtual BigInt deg_beta_fplus_rel(const BigInt& m) const = 0;

    // Canonical token: equal strings exactly when the same exponent
    // divisor data occurs at both orders.  Pre: !is_pure(m).
    virtual std::string token_id(const BigInt& m) const = 0;

    // Runtime certificate that the relative +1 fiber realization is
    // nonzero at m (odd Euler characteristic difference).
    virtual bool parity_fplus_ok(const BigInt& m, ParityKind kind) const = 0;
};

// Oracle backed by a profile.  Pre: convenient, weighted homogeneous and
// singular (InputError otherwise; non-singular series vanish and carry
// no recoverable data).
std::unique_ptr<ZetaOracle> oracle_from_profile(const WeightProfile& p);

} // namespace wzeta
