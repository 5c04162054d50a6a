#include "wzeta/zeta.hpp"

namespace wzeta {

namespace {

BigInt face_lcm(const WeightProfile& p, std::uint32_t mask) {
    BigInt l = 1;
    for (int i = 0; i < p.d; ++i)
        if (mask >> i & 1u) l = big_lcm(l, BigInt(p.delta[i]));
    return l;
}

int popcount(std::uint32_t mask) {
    int n = 0;
    for (; mask; mask >>= 1) n += mask & 1u;
    return n;
}

} // namespace

LRational cone_series_closed(const WeightProfile& p, std::uint32_t face_mask, const BigInt& m) {
    require_series_ready(p);
    if (m < 1) throw InputError("series order must be >= 1");
    if (face_mask == 0 || face_mask >= (1u << p.d)) throw InputError("invalid face mask");
    if (!divides(face_lcm(p, face_mask), m)) return LRational();
    long s = to_long_checked(s_floor_sum(p, m));
    return LRational::monomial_quotient(-s, p.d - popcount(face_mask));
}

LRational background_coeff(const WeightProfile& p, const BigInt& m) {
    require_series_ready(p);
    if (m < 1) throw InputError("series order must be >= 1");
    long s = to_long_checked(s_floor_sum(p, m));
    return -LRational::l_pow(-s);
}

LRational background_resummed(const WeightProfile& p, const BigInt& m) {
    require_series_ready(p);
    if (m < 1) throw InputError("series order must be >= 1");
    long mm = to_long_checked(m);
    LRational sum;
    for (std::uint32_t mask = 1; mask < (1u << p.d); ++mask) {
        BigInt step = face_lcm(p, mask);
        for (BigInt mp = step; mp <= mm; mp += step)
            sum += cone_series_closed(p, mask, mp);
    }
    return LRational::lminus1_pow((unsigned long)p.d) * sum - LRational::one();
}

CoeffDescriptor modified_coeff(const WeightProfile& p, const BigInt& m) {
    CoeffDescriptor d;
    d.m = m;
    CoeffClass c = coeff_class_any(p, m);
    d.lshift = s_floor_sum(p, m);
    d.pure = c.pure;
    d.token = c.token;
    d.chi = c.chi;
    return d;
}

RationalForm rational_form(const WeightProfile& p) {
    require_series_ready(p);
    if (p.d > 20) throw CapacityError("rational form capped at 20 variables");
    RationalForm rf;
    rf.denom_lshift = p.abs_w;
    rf.denom_texp = p.m_w;
    for (std::uint32_t mask = 0; mask < (1u << p.d); ++mask) {
        BigInt step = face_lcm(p, mask); // 1 for the empty mask
        for (BigInt t = step; t <= p.m_w; t += step)
            rf.terms.push_back({mask, t, s_floor_sum(p, t)});
    }
    return rf;
}

} // namespace wzeta
