#include "wzeta/chi.hpp"

#include <algorithm>
#include <sstream>

namespace wzeta {

long chi_diagonal_fiber(const std::vector<long>& exps, const std::vector<int>& signs, int level,
                        Ambient ambient) {
    size_t k = exps.size();
    if (signs.size() != k) throw InputError("sign list does not match exponent list");
    if (k > 24) throw CapacityError("diagonal fiber capped at 24 variables");
    for (size_t i = 0; i < k; ++i) {
        if (exps[i] < 1) throw InputError("exponents must be >= 1");
        if (signs[i] != 1 && signs[i] != -1) throw InputError("signs must be +1 or -1");
    }
    if (level < -1 || level > 1) throw InputError("level must be -1, 0 or +1");

    if (ambient == Ambient::affine) {
        // Stratify R^k by which coordinates vanish; each stratum is a
        // smaller torus fiber (the empty one contributes the origin).
        long total = 0;
        for (std::uint32_t subset = 0; subset < (1u << k); ++subset) {
            std::vector<long> e;
            std::vector<int> s;
            for (size_t i = 0; i < k; ++i)
                if (subset >> i & 1u) {
                    e.push_back(exps[i]);
                    s.push_back(signs[i]);
                }
            total += chi_diagonal_fiber(e, s, level, Ambient::torus);
        }
        return total;
    }

    if (k == 0) return level == 0 ? 1 : 0;
    // On the orthant with signs sigma the fiber is a hyperplane slice of
    // the open positive orthant: an open (k-1)-cell when the effective
    // signs eta are mixed, or match a nonzero level.
    long cells = 0;
    for (std::uint32_t sigma = 0; sigma < (1u << k); ++sigma) {
        int eta_pos = 0, eta_neg = 0;
        for (size_t i = 0; i < k; ++i) {
            int flip = (exps[i] % 2 != 0 && (sigma >> i & 1u)) ? -1 : 1;
            (signs[i] * flip > 0 ? eta_pos : eta_neg)++;
        }
        bool nonempty;
        if (eta_pos > 0 && eta_neg > 0)
            nonempty = true;
        else
            nonempty = level != 0 && (eta_pos > 0 ? level > 0 : level < 0);
        if (nonempty) ++cells;
    }
    return (k % 2 == 0 ? -1 : 1) * cells; // (-1)^(k-1) per cell
}

std::vector<std::vector<Rational>> quadratic_gram(const SparsePoly& f,
                                                  const std::vector<int>& axes) {
    int n = (int)axes.size();
    std::vector<int> pos(f.vars, -1);
    for (int i = 0; i < n; ++i) pos[axes[i]] = i;
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& t : f.terms) {
        std::vector<int> touched;
        for (int i = 0; i < f.vars; ++i)
            for (long e = 0; e < t.exp[i]; ++e) touched.push_back(pos[i]);
        if (touched.size() != 2 || touched[0] < 0 || touched[1] < 0)
            throw InputError("polynomial is not a quadratic form on the given axes");
        if (touched[0] == touched[1])
            g[touched[0]][touched[0]] += t.coef;
        else {
            g[touched[0]][touched[1]] += t.coef / 2;
            g[touched[1]][touched[0]] += t.coef / 2;
        }
    }
    return g;
}

QuadDiag diagonalize_quadratic(std::vector<std::vector<Rational>> gram) {
    int n = (int)gram.size();
    for (const auto& row : gram) {
        if ((int)row.size() != n) throw InputError("gram matrix must be square");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i]) throw InputError("gram matrix must be symmetric");
    const auto original = gram;

    std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) basis[i][i] = 1;
    // basis[j] is the j-th new basis vector; adding lambda * vector j to
    // vector i updates row/column i of the form accordingly.
    auto add_vec = [&](int i, int j, const Rational& lambda) {
        for (int r = 0; r < n; ++r) gram[r][i] += lambda * gram[r][j];
        for (int c = 0; c < n; ++c) gram[i][c] += lambda * gram[j][c];
        for (int c = 0; c < n; ++c) basis[i][c] += lambda * basis[j][c];
    };
    auto swap_vec = [&](int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(gram[r][i], gram[r][j]);
        for (int c = 0; c < n; ++c) std::swap(gram[i][c], gram[j][c]);
        std::swap(basis[i], basis[j]);
    };

    for (int t = 0; t < n; ++t) {
        int pivot = -1;
        for (int j = t; j < n && pivot < 0; ++j)
            if (gram[j][j] != 0) pivot = j;
        if (pivot < 0) {
            // All remaining diagonal entries vanish; a nonzero cross term
            // can be pulled onto the diagonal first.
            int a = -1, b = -1;
            for (int i = t; i < n && a < 0; ++i)
                for (int j = i + 1; j < n && a < 0; ++j)
                    if (gram[i][j] != 0) {
                        a = i;
                        b = j;
                    }
            if (a < 0) break; // zero block
            add_vec(a, b, Rational(1));
            pivot = a;
        }
        if (pivot != t) swap_vec(t, pivot);
        for (int r = t + 1; r < n; ++r) {
            if (gram[r][t] == 0) continue;
            add_vec(r, t, -gram[r][t] / gram[t][t]);
        }
    }

    QuadDiag out;
    out.diag.resize(n);
    for (int i = 0; i < n; ++i) {
        out.diag[i] = gram[i][i];
        if (gram[i][i] > 0)
            ++out.pos;
        else if (gram[i][i] < 0)
            ++out.neg;
        else
            ++out.zero;
    }
    out.basis = std::move(basis);
    // Cross-check the congruence: basis_i G basis_j must be diagonal.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational v = 0;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) v += out.basis[i][r] * original[r][c] * out.basis[j][c];
            Rational want = (i == j) ? out.diag[i] : Rational(0);
            if (v != want) throw InternalError("diagonalization failed its own congruence check");
        }
    return out;
}

std::string ClassToken::id() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::pure:
            os << "pure";
            break;
        case Kind::diagonal:
        case Kind::general: {
            os << (kind == Kind::diagonal ? "diag[" : "gen[");
            bool first = true;
            for (const auto& [e, s] : diag) {
                os << (first ? "" : ",") << "(" << e << "," << (s > 0 ? "+1" : "-1") << ")";
                first = false;
            }
            os << "]";
            break;
        }
        case Kind::quadratic:
            os << "quad[" << sig_pos << "+," << sig_neg << "-," << sig_zero << "0]";
            break;
    }
    return os.str();
}

std::string ClassToken::str(const std::string& level) const { return id() + "@" + level; }

namespace {

// Triples from a diagonal model sum_i s_i x_i^{e_i}, with extra_flip
// multiplying every affine fiber (the (-1)^z factor of split-off zero
// directions).  The bar term (-1)^(face dimension) picks up the same
// factor, since the face has k + z axes.
ChiTriple triple_from_diagonal(const std::vector<long>& exps, const std::vector<int>& signs,
                               int extra_flip, ChiTriple::Exactness how) {
    long a_plus = chi_diagonal_fiber(exps, signs, 1, Ambient::affine) * extra_flip;
    long a_minus = chi_diagonal_fiber(exps, signs, -1, Ambient::affine) * extra_flip;
    long a_zero = chi_diagonal_fiber(exps, signs, 0, Ambient::affine) * extra_flip;
    ChiTriple t;
    t.fplus = a_plus - a_zero;
    t.fminus = a_minus - a_zero;
    size_t k = exps.size();
    t.bar = (k % 2 == 0 ? 1 : -1) * extra_flip + a_zero;
    t.how = how;
    return t;
}

// Axes whose exponent divides m.
std::uint32_t divisor_mask(const WeightProfile& p, const BigInt& m) {
    std::uint32_t mask = 0;
    for (int i = 0; i < p.d; ++i)
        if (divides(BigInt(p.delta[i]), m)) mask |= 1u << i;
    return mask;
}

std::vector<std::pair<long, int>> pure_term_signs(const WeightProfile& p, std::uint32_t mask) {
    std::vector<std::pair<long, int>> diag;
    for (int i = 0; i < p.d; ++i) {
        if (!(mask >> i & 1u)) continue;
        int sign = 0;
        for (const auto& t : p.poly.terms) {
            bool pure_i = t.exp[i] == p.delta[i];
            for (int j = 0; j < p.d && pure_i; ++j)
                if (j != i && t.exp[j] != 0) pure_i = false;
            if (pure_i) sign = t.coef > 0 ? 1 : -1;
        }
        if (sign == 0) throw InternalError("missing pure term on a convenient axis");
        diag.push_back({p.delta[i], sign});
    }
    return diag;
}

bool all_pure_terms(const SparsePoly& f) {
    for (const auto& t : f.terms) {
        int nz = 0;
        for (long e : t.exp)
            if (e != 0) ++nz;
        if (nz > 1) return false;
    }
    return true;
}

bool all_degree_two(const SparsePoly& f) {
    for (const auto& t : f.terms)
        if (SparsePoly::total_degree(t) != 2) return false;
    return true;
}

std::vector<int> axes_of(std::uint32_t mask, int d) {
    std::vector<int> axes;
    for (int i = 0; i < d; ++i)
        if (mask >> i & 1u) axes.push_back(i);
    return axes;
}

} // namespace

CoeffClass coeff_class_any(const WeightProfile& p, const BigInt& m) {
    require_series_ready(p);
    if (m < 1) throw InputError("coefficient order must be >= 1");
    CoeffClass out;
    std::uint32_t mask = divisor_mask(p, m);
    if (mask == 0) {
        out.pure = true;
        out.token.kind = ClassToken::Kind::pure;
        out.chi = {-1, -1, 2, ChiTriple::Exactness::exact};
        return out;
    }
    out.pure = false;
    out.token.mask = mask;
    SparsePoly g = face_restriction(p, mask);
    auto diag = pure_term_signs(p, mask);
    if (all_pure_terms(g)) {
        out.token.kind = ClassToken::Kind::diagonal;
        out.token.diag = diag;
        std::vector<long> exps;
        std::vector<int> signs;
        for (const auto& [e, s] : diag) {
            exps.push_back(e);
            signs.push_back(s);
        }
        out.chi = triple_from_diagonal(exps, signs, 1, ChiTriple::Exactness::exact);
    } else if (all_degree_two(g)) {
        out.token.kind = ClassToken::Kind::quadratic;
        auto q = diagonalize_quadratic(quadratic_gram(g, axes_of(mask, p.d)));
        out.token.sig_pos = q.pos;
        out.token.sig_neg = q.neg;
        out.token.sig_zero = q.zero;
        std::vector<long> exps(q.pos + q.neg, 2);
        std::vector<int> signs(q.pos, 1);
        signs.resize(q.pos + q.neg, -1);
        out.chi = triple_from_diagonal(exps, signs, q.zero % 2 == 0 ? 1 : -1,
                                       ChiTriple::Exactness::exact);
    } else {
        out.token.kind = ClassToken::Kind::general;
        out.token.diag = diag;
        bool small_exps = true;
        for (const auto& [e, s] : diag)
            if (e != 2 && e != 4) small_exps = false;
        if (small_exps) {
            // Only exponents 2 and 4 on these axes: the diagonal part of
            // the face determines every realization mod 2.
            std::vector<long> exps;
            std::vector<int> signs;
            for (const auto& [e, s] : diag) {
                exps.push_back(e);
                signs.push_back(s);
            }
            out.chi = triple_from_diagonal(exps, signs, 1, ChiTriple::Exactness::mod2);
        } else {
            out.chi = {0, 0, 0, ChiTriple::Exactness::unknown};
        }
    }
    return out;
}

CoeffClass coeff_class(const WeightProfile& p, const BigInt& m) {
    require_series_ready(p);
    if (!p.singular)
        throw InputError("profile is non-singular: the series vanishes identically");
    return coeff_class_any(p, m);
}

ParityCertificate parity_certificate(const WeightProfile& p, const BigInt& m, ParityKind kind) {
    require_series_ready(p);
    ParityCertificate cert;
    cert.kind = kind;
    if (kind == ParityKind::exp2) {
        if (!divides(BigInt(2), m)) throw InputError("exp2 parity needs an even order");
        for (int i = 0; i < p.d; ++i)
            if (p.delta[i] != 2 && divides(BigInt(p.delta[i]), m))
                throw InputError("exp2 parity needs no exponent other than 2 dividing m");
    } else {
        if (!divides(BigInt(4), m)) throw InputError("exp4 parity needs 4 | m");
        for (int i = 0; i < p.d; ++i)
            if (p.delta[i] != 2 && p.delta[i] != 4 && divides(BigInt(p.delta[i]), m))
                throw InputError("exp4 parity needs no exponent outside {2,4} dividing m");
    }
    cert.mask = divisor_mask(p, m);
    if (cert.mask == 0) {
        // Pure coefficient: the relative +1 fiber realizes to -1.
        cert.diff = -1;
        cert.odd = true;
        return cert;
    }
    SparsePoly g = face_restriction(p, cert.mask);
    if (kind == ParityKind::exp2) {
        // All exponents on these axes equal 2, so the face is a genuine
        // quadratic form and the signature gives the exact value.
        auto q = diagonalize_quadratic(quadratic_gram(g, axes_of(cert.mask, p.d)));
        std::vector<long> exps(q.pos + q.neg, 2);
        std::vector<int> signs(q.pos, 1);
        signs.resize(q.pos + q.neg, -1);
        ChiTriple t = triple_from_diagonal(exps, signs, q.zero % 2 == 0 ? 1 : -1,
                                           ChiTriple::Exactness::exact);
        cert.diff = t.fplus;
        for (int i = 0; i < q.pos + q.neg; ++i)
            cert.diag.push_back({2, i < q.pos ? 1 : -1});
    } else {
        // Exponents 2 and 4 only: the diagonal representative has the
        // same parity as the face itself.
        cert.diag = pure_term_signs(p, cert.mask);
        std::vector<long> exps;
        std::vector<int> signs;
        for (const auto& [e, s] : cert.diag) {
            exps.push_back(e);
            signs.push_back(s);
        }
        ChiTriple t = triple_from_diagonal(exps, signs, 1, ChiTriple::Exactness::mod2);
        cert.diff = t.fplus;
    }
    cert.odd = cert.diff % 2 != 0;
    if (!cert.odd) throw InternalError("parity certificate found an even relative fiber");
    return cert;
}

} // namespace wzeta
