#include "wzeta/profile.hpp"

#include <algorithm>

#include "wzeta/linalg.hpp"

namespace wzeta {

namespace {

// One inequality a . lambda >= c.
struct Ineq {
    std::vector<Rational> a;
    Rational c;
};

bool is_zero_row(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace

bool positive_combination(const std::vector<std::vector<Rational>>& basis, int dim,
                          std::vector<Rational>& witness) {
    int r = (int)basis.size();
    if (r == 0) return false;
    // Constraints: sum_j lambda_j basis[j][i] >= 1 for each coordinate i.
    std::vector<Ineq> sys;
    for (int i = 0; i < dim; ++i) {
        Ineq q;
        q.a.resize(r);
        for (int j = 0; j < r; ++j) q.a[j] = basis[j][i];
        q.c = 1;
        sys.push_back(std::move(q));
    }
    // Eliminate lambda_r-1 down to lambda_0, keeping each stage for the
    // back substitution.
    std::vector<std::vector<Ineq>> stage(r + 1);
    stage[r] = sys;
    for (int k = r - 1; k >= 0; --k) {
        std::vector<Ineq> lower, upper, rest;
        for (const auto& q : stage[k + 1]) {
            if (q.a[k] > 0)
                lower.push_back(q);
            else if (q.a[k] < 0)
                upper.push_back(q);
            else
                rest.push_back(q);
        }
        for (const auto& lo : lower)
            for (const auto& up : upper) {
                // lo.a[k] > 0 gives a lower bound, up.a[k] < 0 an upper
                // bound; the cross combination removes lambda_k.
                Ineq q;
                q.a.assign(r, Rational(0));
                for (int j = 0; j < k; ++j) q.a[j] = lo.a[j] * (-up.a[k]) + up.a[j] * lo.a[k];
                q.c = lo.c * (-up.a[k]) + up.c * lo.a[k];
                rest.push_back(std::move(q));
            }
        stage[k] = std::move(rest);
    }
    for (const auto& q : stage[0]) {
        if (!is_zero_row(q.a)) throw InternalError("elimination left a nonconstant row");
        if (q.c > 0) return false;
    }
    // Feasible; assign lambda_0, lambda_1, ... in order.
    std::vector<Rational> lam(r, Rational(0));
    for (int k = 0; k < r; ++k) {
        bool has_lo = false, has_up = false;
        Rational lo_val, up_val;
        for (const auto& q : stage[k + 1]) {
            if (q.a[k] == 0) continue;
            Rational rest = q.c;
            for (int j = 0; j < k; ++j) rest -= q.a[j] * lam[j];
            Rational bound = rest / q.a[k];
            if (q.a[k] > 0) {
                if (!has_lo || bound > lo_val) lo_val = bound;
                has_lo = true;
            } else {
                if (!has_up || bound < up_val) up_val = bound;
                has_up = true;
            }
        }
        if (has_lo)
            lam[k] = lo_val;
        else if (has_up)
            lam[k] = up_val;
        else
            lam[k] = 0;
        if (has_lo && has_up && lo_val > up_val)
            throw InternalError("inconsistent bounds in back substitution");
    }
    witness.assign(dim, Rational(0));
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < dim; ++i) witness[i] += lam[j] * basis[j][i];
    for (const auto& x : witness)
        if (x < 1) throw InternalError("witness fails the positivity it certified");
    return true;
}

WeightProfile analyze_polynomial(const SparsePoly& f) {
    WeightProfile p;
    p.d = f.vars;
    p.poly = f;
    p.delta.assign(f.vars, 0);

    // Pure terms pin the candidate weights; two distinct pure exponents
    // on one axis rule out weighted homogeneity outright.
    bool axis_conflict = false;
    for (const auto& t : f.terms) {
        int support = -1;
        for (int i = 0; i < f.vars; ++i) {
            if (t.exp[i] == 0) continue;
            support = (support == -1) ? i : -2;
        }
        if (support >= 0) {
            long e = t.exp[support];
            if (p.delta[support] == 0)
                p.delta[support] = e;
            else if (p.delta[support] != e) {
                axis_conflict = true;
                p.delta[support] = std::min(p.delta[support], e);
            }
        }
    }
    p.convenient = std::all_of(p.delta.begin(), p.delta.end(), [](long e) { return e > 0; });

    if (p.convenient && !axis_conflict) {
        BigInt lcm = 1;
        for (long e : p.delta) lcm = big_lcm(lcm, BigInt(e));
        std::vector<BigInt> w(f.vars);
        for (int i = 0; i < f.vars; ++i) w[i] = lcm / p.delta[i];
        bool ok = true;
        for (const auto& t : f.terms) {
            BigInt dot = 0;
            for (int i = 0; i < f.vars; ++i) dot += w[i] * t.exp[i];
            if (dot != lcm) {
                ok = false;
                break;
            }
        }
        if (ok) {
            p.weighted_homogeneous = true;
            p.w = std::move(w);
            p.m_w = lcm;
            for (const auto& wi : p.w) p.abs_w += wi;
        }
    } else if (!axis_conflict) {
        // No full set of pure terms: decide homogeneity from the exponent
        // differences, then ask for a strictly positive weight vector.
        std::vector<std::vector<Rational>> diffs;
        for (size_t t = 1; t < f.terms.size(); ++t) {
            std::vector<Rational> row(f.vars);
            for (int i = 0; i < f.vars; ++i)
                row[i] = Rational(f.terms[t].exp[i] - f.terms[0].exp[i]);
            diffs.push_back(std::move(row));
        }
        auto basis = nullspace_rational(std::move(diffs), f.vars);
        std::vector<Rational> witness;
        if (positive_combination(basis, f.vars, witness)) {
            p.weighted_homogeneous = true;
            // Scale the rational witness to a primitive integer vector.
            BigInt common = 1;
            for (const auto& x : witness) common = big_lcm(common, x.get_den());
            std::vector<BigInt> w(f.vars);
            BigInt g = 0;
            for (int i = 0; i < f.vars; ++i) {
                w[i] = witness[i].get_num() * (common / witness[i].get_den());
                g = big_gcd(g, w[i]);
            }
            for (auto& wi : w) wi /= g;
            p.w = std::move(w);
            for (int i = 0; i < f.vars; ++i) p.m_w += p.w[i] * f.terms[0].exp[i];
            for (const auto& wi : p.w) p.abs_w += wi;
        }
    }

    p.singular = p.convenient && p.weighted_homogeneous &&
                 std::all_of(p.delta.begin(), p.delta.end(), [](long e) { return e >= 2; });
    return p;
}

void require_series_ready(const WeightProfile& p) {
    if (!p.convenient)
        throw InputError("polynomial is not convenient: some axis has no pure power term");
    if (!p.weighted_homogeneous)
        throw InputError("polynomial is not weighted homogeneous");
}

BigInt s_floor_sum(const WeightProfile& p, const BigInt& m) {
    if (!p.convenient) throw InputError("s(m) needs a convenient profile");
    if (m < 0) throw InputError("s(m) needs m >= 0");
    BigInt s = 0;
    for (long e : p.delta) s += floor_div(m, BigInt(e));
    return s;
}

std::map<long, int> delta_multiset(const WeightProfile& p) {
    std::map<long, int> mult;
    for (long e : p.delta) ++mult[e];
    return mult;
}

Rational reciprocal_sum(const WeightProfile& p) {
    Rational s = 0;
    for (long e : p.delta) {
        if (e == 0) throw InputError("reciprocal sum needs a convenient profile");
        s += Rational(1, e);
    }
    return s;
}

} // namespace wzeta
