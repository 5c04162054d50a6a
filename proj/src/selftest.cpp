#include "wzeta/selftest.hpp"

#include <functional>
#include <sstream>

#include "wzeta/oracle.hpp"
#include "wzeta/recovery.hpp"
#include "wzeta/zeta_identity.hpp"

namespace wzeta {

namespace {

WeightProfile profile_of(const std::string& text) {
    return analyze_polynomial(parse_poly_text(text));
}

std::string fail_closed_vs_brute(const std::string& text, long order) {
    WeightProfile p = profile_of(text);
    BruteSeries brute(p, order);
    const std::uint32_t full = (1u << p.d) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        for (long m = 1; m <= order; ++m) {
            LRational closed = cone_series_closed(p, mask, m);
            LRational listed = brute.at(mask, m);
            if (!(closed == listed))
                return text + ": mask " + std::to_string(mask) + " order " + std::to_string(m);
        }
    }
    return "";
}

std::string fail_background(const std::string& text, long order) {
    WeightProfile p = profile_of(text);
    for (long m = 1; m <= order; ++m) {
        if (!(background_coeff(p, m) == background_resummed(p, m)))
            return text + ": order " + std::to_string(m);
    }
    return "";
}

std::string fail_rational_expansion(const std::string& text, long order) {
    WeightProfile p = profile_of(text);
    RationalForm rf = rational_form(p);
    for (long m = 1; m <= order; ++m) {
        SymCoeff lazy = sym_modified_coeff(p, m);
        SymCoeff expanded = sym_rational_expansion(p, rf, m);
        if (!sym_equal(lazy, expanded)) return text + ": order " + std::to_string(m);
    }
    return "";
}

std::string fail_chi_fixtures() {
    struct Fix {
        std::vector<long> exps;
        std::vector<int> signs;
        int level;
        Ambient ambient;
        long want;
        const char* name;
    };
    const std::vector<Fix> fixtures = {
        {{2, 2}, {1, 1}, 1, Ambient::torus, -4, "circle in the torus"},
        {{2, 3}, {1, 1}, 0, Ambient::torus, -2, "cusp zero fiber in the torus"},
        {{2, 2, 2}, {1, 1, 1}, 1, Ambient::affine, 2, "sphere in affine space"},
        {{2, 2}, {1, -1}, 1, Ambient::torus, -4, "hyperbola in the torus"},
    };
    for (const Fix& f : fixtures) {
        long got = chi_diagonal_fiber(f.exps, f.signs, f.level, f.ambient);
        if (got != f.want)
            return std::string(f.name) + ": got " + std::to_string(got) + ", want " +
                   std::to_string(f.want);
    }
    return "";
}

std::string fail_identity(const std::string& text, bool corrupt) {
    WeightProfile p = profile_of(text);
    const long order = 2 * to_long_checked(p.m_w, "degree");
    IdentityCheck c = verify_inversion_identity(p, order, corrupt);
    if (!c.ok)
        return text + ": first failure at order " + std::to_string(c.first_fail) +
               (corrupt ? " (background corrupted)" : "");
    return "";
}

std::string fail_roundtrip(const std::string& text, const std::vector<long>& want_delta) {
    WeightProfile p = profile_of(text);
    auto oracle = oracle_from_profile(p);
    RecoveryReport rep = run_recovery(*oracle);
    if (!rep.ok) return text + ": recovery reported failure";
    if (rep.delta.size() != want_delta.size()) return text + ": wrong exponent count";
    for (std::size_t i = 0; i < want_delta.size(); ++i)
        if (rep.delta[i] != want_delta[i]) return text + ": wrong exponents";
    return "";
}

std::string fail_separation() {
    WeightProfile a = profile_of("x^2 + y^4 + z^6");
    WeightProfile b = profile_of("x^3 + y^3 + z^4");
    auto oa = oracle_from_profile(a);
    auto ob = oracle_from_profile(b);
    RecoveryReport ra = run_recovery(*oa);
    RecoveryReport rb = run_recovery(*ob);
    CompareResult c = compare_recoveries(ra, rb);
    if (c.verdict != CompareResult::Verdict::separated) return "pair not separated";
    if (c.witness_q != 2) return "unexpected witness " + c.witness_q.get_str();
    return "";
}

} // namespace

SelfTestResult run_selftest(bool corrupt_background) {
    SelfTestResult res;
    auto check = [&](const std::string& name, const std::function<std::string()>& body) {
        std::string detail;
        try {
            detail = body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail.empty()) {
            ++res.passed;
            res.lines.push_back("[PASS] " + name);
        } else {
            ++res.failed;
            res.lines.push_back("[FAIL] " + name + ": " + detail);
        }
    };

    check("cone series closed form matches lattice enumeration",
          [] { return fail_closed_vs_brute("x^2 + y^3", 12); });
    check("background coefficient equals its cone resummation", [] {
        std::string r = fail_background("x^2 + y^3", 12);
        return r.empty() ? fail_background("x^2 + y^2", 8) : r;
    });
    check("rational form expands to the series coefficients",
          [] { return fail_rational_expansion("x^2 + y^3", 18); });
    check("diagonal fiber characteristics match fixtures", fail_chi_fixtures);
    check("inversion identity holds through twice the degree", [&] {
        std::string r = fail_identity("x^2 + y^3", corrupt_background);
        return r.empty() ? fail_identity("x^2 + y^2", corrupt_background) : r;
    });
    check("recovery round trip on x^2 + y^3",
          [] { return fail_roundtrip("x^2 + y^3", {2, 3}); });
    check("recovery round trip on x^2 + y^4 + z^6",
          [] { return fail_roundtrip("x^2 + y^4 + z^6", {2, 4, 6}); });
    check("equal reciprocal sums with different weights are separated", fail_separation);
    return res;
}

} // namespace wzeta
