#include "wzeta/zeta_identity.hpp"

#include <sstream>

namespace wzeta {

namespace {

void drop_zeros(SymCoeff& a) {
    for (auto it = a.begin(); it != a.end();)
        it = it->second.is_zero() ? a.erase(it) : std::next(it);
}

int popcount(std::uint32_t mask) {
    int n = 0;
    for (; mask; mask >>= 1) n += mask & 1u;
    return n;
}

BigInt face_lcm(const WeightProfile& p, std::uint32_t mask) {
    BigInt l = 1;
    for (int i = 0; i < p.d; ++i)
        if (mask >> i & 1u) l = big_lcm(l, BigInt(p.delta[i]));
    return l;
}

const char* kind_name(SymbolId::Kind k) {
    switch (k) {
        case SymbolId::Kind::unit: return "1";
        case SymbolId::Kind::nonzero_fiber: return "A";
        case SymbolId::Kind::zero_set: return "B";
    }
    return "?";
}

} // namespace

SymCoeff sym_add(const SymCoeff& a, const SymCoeff& b) {
    SymCoeff r = a;
    for (const auto& [id, v] : b) r[id] += v;
    drop_zeros(r);
    return r;
}

SymCoeff sym_scale(const SymCoeff& a, const LRational& c) {
    SymCoeff r;
    if (c.is_zero()) return r;
    for (const auto& [id, v] : a) r[id] = v * c;
    drop_zeros(r);
    return r;
}

bool sym_equal(const SymCoeff& a, const SymCoeff& b) {
    SymCoeff diff = sym_add(a, sym_scale(b, -LRational::one()));
    return diff.empty();
}

std::string sym_str(const SymCoeff& a) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, v] : a) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")*" << kind_name(id.kind);
        if (id.kind != SymbolId::Kind::unit) os << "_" << id.mask;
    }
    return os.str();
}

SymCoeff sym_modified_coeff(const WeightProfile& p, const BigInt& m, bool corrupt_background) {
    require_series_ready(p);
    if (m < 1) throw InputError("series order must be >= 1");
    long s = to_long_checked(s_floor_sum(p, m));
    LRational ls = LRational::l_pow(-s);
    SymCoeff r;
    for (std::uint32_t mask = 1; mask < (1u << p.d); ++mask) {
        if (!divides(face_lcm(p, mask), m)) continue;
        r[{SymbolId::Kind::nonzero_fiber, mask}] += ls;
        r[{SymbolId::Kind::zero_set, mask}] -= ls;
    }
    if (corrupt_background)
        r[{SymbolId::Kind::unit, 0}] += ls;
    else
        r[{SymbolId::Kind::unit, 0}] -= ls;
    drop_zeros(r);
    return r;
}

SymCoeff sym_naive_transform(const SymCoeff& a) {
    SymCoeff r;
    for (const auto& [id, v] : a) {
        switch (id.kind) {
            case SymbolId::Kind::unit:
                // The unit is a torus mapping to itself.
                r[{SymbolId::Kind::unit, 0}] += v * LRational::lminus1_pow(1);
                break;
            case SymbolId::Kind::nonzero_fiber:
                // Total space: the face torus minus its zero set.
                r[{SymbolId::Kind::unit, 0}] +=
                    v * LRational::lminus1_pow((unsigned long)popcount(id.mask));
                r[{SymbolId::Kind::zero_set, id.mask}] -= v;
                break;
            case SymbolId::Kind::zero_set:
                // Total space: zero set times a torus factor.
                r[{SymbolId::Kind::zero_set, id.mask}] += v * LRational::lminus1_pow(1);
                break;
        }
    }
    drop_zeros(r);
    return r;
}

SymCoeff sym_rational_expansion(const WeightProfile& p, const RationalForm& rf, const BigInt& m) {
    if (m < 1) throw InputError("series order must be >= 1");
    SymCoeff r;
    for (const auto& term : rf.terms) {
        if (m < term.texp) continue;
        BigInt gap = m - term.texp;
        if (!divides(rf.denom_texp, gap)) continue;
        BigInt j = gap / rf.denom_texp;
        long shift = to_long_checked(term.lshift + j * rf.denom_lshift);
        LRational v = LRational::l_pow(-shift);
        if (term.mask == 0) {
            r[{SymbolId::Kind::unit, 0}] -= v;
        } else {
            r[{SymbolId::Kind::nonzero_fiber, term.mask}] += v;
            r[{SymbolId::Kind::zero_set, term.mask}] -= v;
        }
    }
    drop_zeros(r);
    return r;
}

IdentityCheck verify_inversion_identity(const WeightProfile& p, long order,
                                        bool corrupt_background) {
    require_series_ready(p);
    if (order < 1) throw InputError("identity check needs order >= 1");
    if (p.d > 12) throw CapacityError("identity check capped at 12 variables");
    const LRational linv = LRational::l_pow(-1);

    std::vector<std::uint32_t> masks;
    std::vector<BigInt> lcms;
    for (std::uint32_t mask = 1; mask < (1u << p.d); ++mask) {
        masks.push_back(mask);
        lcms.push_back(face_lcm(p, mask));
    }
    // Running data: u[face] carries sum_{j>=1} L^-j c_face(m-j), and w is
    // the coefficient of the correction series
    // (unit - L^-1 naive) / (1 - L^-1 T).
    std::vector<LRational> u(masks.size());
    SymCoeff w;
    w[{SymbolId::Kind::unit, 0}] = LRational::one();

    IdentityCheck res;
    for (long m = 1; m <= order; ++m) {
        BigInt mm(m);
        long s = to_long_checked(s_floor_sum(p, mm));
        LRational ls = LRational::l_pow(-s);

        SymCoeff modified = sym_modified_coeff(p, mm, corrupt_background);
        SymCoeff naive = sym_naive_transform(modified);
        w = sym_scale(sym_add(w, sym_scale(naive, -LRational::one())), linv);

        SymCoeff plain;
        for (size_t f = 0; f < masks.size(); ++f) {
            LRational c = divides(lcms[f], mm) ? ls : LRational();
            if (!c.is_zero()) plain[{SymbolId::Kind::nonzero_fiber, masks[f]}] += c;
            if (!u[f].is_zero()) plain[{SymbolId::Kind::zero_set, masks[f]}] += u[f];
            u[f] = (u[f] + c) * linv;
        }
        drop_zeros(plain);

        if (!sym_equal(plain, sym_add(modified, w))) {
            res.ok = false;
            res.first_fail = m;
            return res;
        }
    }
    return res;
}

} // namespace wzeta
