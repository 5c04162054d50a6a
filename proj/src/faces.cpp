#include "wzeta/faces.hpp"

#include <unordered_map>

namespace wzeta {

SparsePoly face_restriction(const WeightProfile& p, std::uint32_t mask) {
    std::vector<Term> kept;
    for (const auto& t : p.poly.terms) {
        bool inside = true;
        for (int i = 0; i < p.d && inside; ++i)
            if (t.exp[i] != 0 && !(mask >> i & 1u)) inside = false;
        if (inside) kept.push_back(t);
    }
    if (kept.empty()) throw InternalError("face restriction lost every term");
    return make_sparse_poly(p.d, std::move(kept));
}

std::vector<FaceDescriptor> compact_faces(const WeightProfile& p) {
    require_series_ready(p);
    if (p.d > 20) throw CapacityError("face enumeration capped at 20 variables");
    std::vector<FaceDescriptor> faces;
    for (std::uint32_t mask = 1; mask < (1u << p.d); ++mask) {
        FaceDescriptor f;
        f.mask = mask;
        for (int i = 0; i < p.d; ++i) {
            if (!(mask >> i & 1u)) continue;
            f.axes.push_back(i);
            std::vector<long> v(p.d, 0);
            v[i] = p.delta[i];
            f.vertices.push_back(std::move(v));
            f.delta_face = big_lcm(f.delta_face, BigInt(p.delta[i]));
        }
        f.restriction = face_restriction(p, mask);
        faces.push_back(std::move(f));
    }
    return faces;
}

Trace support_and_trace(const SparsePoly& f, const std::vector<long>& k) {
    if ((int)k.size() != f.vars) throw InputError("trace direction has wrong dimension");
    Trace tr;
    bool first = true;
    for (const auto& t : f.terms) {
        BigInt dot = 0;
        for (int i = 0; i < f.vars; ++i) dot += BigInt(k[i]) * t.exp[i];
        if (first || dot < tr.value) {
            tr.value = dot;
            tr.minimizers.clear();
            tr.support_mask = 0;
            first = false;
        }
        if (dot == tr.value) {
            tr.minimizers.push_back(t.exp);
            for (int i = 0; i < f.vars; ++i)
                if (t.exp[i] != 0) tr.support_mask |= 1u << i;
        }
    }
    return tr;
}

BruteSeries::BruteSeries(const WeightProfile& p, long m_max) : m_max_(m_max) {
    require_series_ready(p);
    if (m_max < 1 || m_max > 500) throw CapacityError("brute-force order capped at 500");
    if (p.d > 4) throw CapacityError("brute-force enumeration capped at 4 variables");
    const int d = p.d;
    const auto& terms = p.poly.terms;

    // Beyond k_j = box[j] every term touching axis j exceeds m_max, so
    // the whole ray k_j >= box[j] shares one trace and one minimum and
    // sums to a geometric factor L^(1-box[j]) / (L-1).
    std::vector<long> box(d);
    for (int j = 0; j < d; ++j) {
        long nu_min = 0;
        for (const auto& t : terms) {
            if (t.exp[j] > 1000000) throw CapacityError("exponent too large for brute force");
            if (t.exp[j] > 0 && (nu_min == 0 || t.exp[j] < nu_min)) nu_min = t.exp[j];
        }
        if (nu_min == 0) throw InternalError("convenient polynomial misses an axis");
        box[j] = m_max / nu_min + 1;
    }

    // Flat copies of the exponent data for the hot loop.
    const int nterms = (int)terms.size();
    std::vector<long> exps(nterms * d);
    std::vector<std::uint32_t> supports(nterms, 0);
    for (int t = 0; t < nterms; ++t)
        for (int i = 0; i < d; ++i) {
            exps[t * d + i] = terms[t].exp[i];
            if (terms[t].exp[i] != 0) supports[t] |= 1u << i;
        }

    // Bucket counts keyed by (face mask, m, box exponent sum, tail count).
    std::unordered_map<std::uint64_t, long long> buckets;
    std::vector<long> k(d, 1);
    while (true) {
        long best = 0;
        std::uint32_t mask = 0;
        for (int t = 0; t < nterms; ++t) {
            long dot = 0;
            for (int i = 0; i < d; ++i) dot += k[i] * exps[t * d + i];
            if (t == 0 || dot < best) {
                best = dot;
                mask = 0;
            }
            if (dot == best) mask |= supports[t];
        }
        if (best <= m_max_) {
            long esum = 0, tails = 0;
            for (int j = 0; j < d; ++j) {
                esum += k[j];
                if (k[j] == box[j]) ++tails;
            }
            std::uint64_t key = ((std::uint64_t)mask << 40) | ((std::uint64_t)best << 20) |
                                ((std::uint64_t)esum << 4) | (std::uint64_t)tails;
            ++buckets[key];
        }
        int j = d - 1;
        while (j >= 0 && k[j] == box[j]) k[j--] = 1;
        if (j < 0) break;
        ++k[j];
    }

    for (const auto& [key, count] : buckets) {
        auto mask = (std::uint32_t)(key >> 40);
        long m = (long)(key >> 20 & 0xfffff);
        long esum = (long)(key >> 4 & 0xffff);
        long tails = (long)(key & 0xf);
        LRational v = LRational::monomial_quotient(-(esum - tails), tails)
                          .scaled(BigInt(static_cast<long>(count)));
        table_[{mask, m}] += v;
    }
}

LRational BruteSeries::at(std::uint32_t face_mask, long m) const {
    auto it = table_.find({face_mask, m});
    return it == table_.end() ? LRational() : it->second;
}

} // namespace wzeta
