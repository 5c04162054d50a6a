#include "wzeta/oracle.hpp"

namespace wzeta {

namespace {

class ProfileOracle final : public ZetaOracle {
  public:
    explicit ProfileOracle(WeightProfile p) : p_(std::move(p)) {}

    int dimension() const override { return p_.d; }

    bool is_pure(const BigInt& m) const override {
        if (m < 1) throw InputError("oracle order must be >= 1");
        for (long e : p_.delta)
            if (divides(BigInt(e), m)) return false;
        return true;
    }

    BigInt deg_beta_bar(const BigInt& m) const override {
        if (!is_pure(m)) throw InputError("deg_beta_bar is only defined at pure orders");
        return 1 - s_floor_sum(p_, m);
    }

    BigInt deg_beta_fplus_rel(const BigInt& m) const override {
        if (is_pure(m)) throw InputError("deg_beta_fplus_rel needs a non-pure order");
        return -s_floor_sum(p_, m);
    }

    std::string token_id(const BigInt& m) const override {
        if (is_pure(m)) throw InputError("token_id needs a non-pure order");
        return coeff_class(p_, m).token.id();
    }

    bool parity_fplus_ok(const BigInt& m, ParityKind kind) const override {
        return parity_certificate(p_, m, kind).odd;
    }

  private:
    WeightProfile p_;
};

} // namespace

std::unique_ptr<ZetaOracle> oracle_from_profile(const WeightProfile& p) {
    require_series_ready(p);
    if (!p.singular)
        throw InputError(
            "profile is non-singular: the modified series vanishes and carries no data");
    return std::make_unique<ProfileOracle>(p);
}

} // namespace wzeta
