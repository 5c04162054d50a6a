// Acceptance battery for the series engine and the exponent recovery.
// Each numbered check prints one PASS/FAIL line with its case counts and
// wall time; the process exit code is the number of failed checks.
// Budgets and seeds are fixed here so runs are reproducible.
#include <algorithm>
#include <cctype>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wzeta/oracle.hpp"
#include "wzeta/recovery.hpp"
#include "wzeta/zeta_identity.hpp"

using namespace wzeta;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

WeightProfile profile_of(const std::string& text) {
    return analyze_polynomial(parse_poly_text(text));
}

WeightProfile diagonal_profile(const std::vector<long>& delta) {
    std::vector<Term> terms;
    for (size_t i = 0; i < delta.size(); ++i) {
        std::vector<long> e(delta.size(), 0);
        e[i] = delta[i];
        terms.push_back({e, Rational(1)});
    }
    return analyze_polynomial(make_sparse_poly((int)delta.size(), std::move(terms)));
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

// The random sweep shared by checks 1 and 2: 30 diagonal profiles with
// d <= 4 and exponents in {2..7}.
std::vector<std::vector<long>> sweep_deltas() {
    std::mt19937 rng(1001u);
    std::uniform_int_distribution<long> d_dist(1, 4), e_dist(2, 7);
    std::vector<std::vector<long>> out;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<long> delta;
        int d = (int)d_dist(rng);
        for (int i = 0; i < d; ++i) delta.push_back(e_dist(rng));
        out.push_back(std::move(delta));
    }
    return out;
}

// 1. The closed per-face cone coefficients must equal an independent
// lattice-point enumeration at every face and order, within 30 seconds.
Outcome check_cone_series() {
    const double budget = 30.0;
    const auto t0 = Clock::now();
    long checked = 0, wrong = 0;
    for (const auto& delta : sweep_deltas()) {
        WeightProfile p = diagonal_profile(delta);
        BruteSeries brute(p, 120);
        for (std::uint32_t mask = 1; mask < (1u << p.d); ++mask)
            for (long m = 1; m <= 120; ++m) {
                ++checked;
                if (cone_series_closed(p, mask, BigInt(m)) != brute.at(mask, m)) ++wrong;
            }
    }
    const double dt = seconds_since(t0);
    std::ostringstream ss;
    ss << "30 profiles, " << checked << " face/order pairs, " << wrong << " mismatches, "
       << dt << "s (budget " << budget << "s)";
    return {wrong == 0 && dt <= budget, ss.str()};
}

// 2. The background coefficient must equal its resummation over the cone
// partition at every order of the same sweep.
Outcome check_background_resummation() {
    const auto t0 = Clock::now();
    long checked = 0, wrong = 0;
    for (const auto& delta : sweep_deltas()) {
        WeightProfile p = diagonal_profile(delta);
        for (long m = 1; m <= 120; ++m) {
            ++checked;
            if (background_coeff(p, BigInt(m)) != background_resummed(p, BigInt(m))) ++wrong;
        }
    }
    std::ostringstream ss;
    ss << checked << " orders, " << wrong << " mismatches, " << seconds_since(t0) << "s";
    return {wrong == 0, ss.str()};
}

// 3. The closed rational form, expanded as a power series, must
// reproduce the lazily computed coefficients through three periods,
// within 60 seconds.
Outcome check_rational_form() {
    const double budget = 60.0;
    const auto t0 = Clock::now();
    std::vector<WeightProfile> profiles = {
        diagonal_profile({2, 3}),    diagonal_profile({2, 4, 6}), diagonal_profile({3, 5}),
        diagonal_profile({2, 7}),    diagonal_profile({3, 4, 5}), diagonal_profile({5, 6, 7}),
        diagonal_profile({4, 5, 21}), diagonal_profile({8, 12}),
        profile_of("x^2 + x*y^2 + y^4"), profile_of("x^4 + x^2*y^3 + y^6")};
    long checked = 0, wrong = 0;
    BigInt max_period = 0;
    for (const WeightProfile& p : profiles) {
        max_period = std::max(max_period, p.m_w);
        const RationalForm rf = rational_form(p);
        const long n = 3 * to_long_checked(p.m_w);
        for (long m = 1; m <= n; ++m) {
            ++checked;
            if (!sym_equal(sym_rational_expansion(p, rf, BigInt(m)),
                           sym_modified_coeff(p, BigInt(m))))
                ++wrong;
        }
    }
    const double dt = seconds_since(t0);
    std::ostringstream ss;
    ss << "10 profiles, period up to " << max_period.get_str() << ", " << checked
       << " orders, " << wrong << " mismatches, " << dt << "s (budget " << budget << "s)";
    return {wrong == 0 && dt <= budget, ss.str()};
}

// 4. Pinned Euler characteristics of fixed diagonal fibers, all exact.
Outcome check_chi_fixtures() {
    struct Fixture {
        std::vector<long> exps;
        std::vector<int> signs;
        int level;
        Ambient ambient;
        long expect;
        const char* name;
    };
    const std::vector<Fixture> fixtures = {
        {{2, 2}, {1, 1}, 1, Ambient::torus, -4, "circle in the torus"},
        {{2, 2, 2}, {1, 1, 1}, 1, Ambient::affine, 2, "sphere in 3-space"},
        {{2, 2}, {1, -1}, 1, Ambient::torus, -4, "hyperbola in the torus"},
        {{2, 3}, {1, 1}, 1, Ambient::torus, -4, "cuspidal cubic fiber at +1"},
        {{2, 3}, {1, 1}, 0, Ambient::torus, -2, "cuspidal cubic zero set"},
    };
    long wrong = 0;
    std::ostringstream ss;
    for (const Fixture& f : fixtures) {
        long got = chi_diagonal_fiber(f.exps, f.signs, f.level, f.ambient);
        if (got != f.expect) {
            ++wrong;
            ss << " [" << f.name << ": got " << got << ", want " << f.expect << "]";
        }
    }
    std::ostringstream head;
    head << fixtures.size() << " fixtures, " << wrong << " wrong" << ss.str();
    return {wrong == 0, head.str()};
}

// 5. The +1 fiber differs from the zero fiber by an odd affine Euler
// characteristic for every small quadratic signature and every mixed
// exponent-2/4 diagonal in at most 5 variables.
Outcome check_parity_sweep() {
    long checked = 0, even = 0;
    for (int pos = 0; pos + 0 <= 6; ++pos) {
        for (int neg = (pos == 0 ? 1 : 0); pos + neg <= 6; ++neg) {
            std::vector<long> exps((size_t)(pos + neg), 2);
            std::vector<int> signs;
            signs.insert(signs.end(), (size_t)pos, 1);
            signs.insert(signs.end(), (size_t)neg, -1);
            long diff = chi_diagonal_fiber(exps, signs, 1, Ambient::affine) -
                        chi_diagonal_fiber(exps, signs, 0, Ambient::affine);
            ++checked;
            if (diff % 2 == 0) ++even;
        }
    }
    for (int k = 1; k <= 5; ++k) {
        for (long code = 0; code < (1l << (2 * k)); ++code) {
            std::vector<long> exps;
            std::vector<int> signs;
            for (int i = 0; i < k; ++i) {
                exps.push_back((code >> (2 * i) & 1) ? 4 : 2);
                signs.push_back((code >> (2 * i + 1) & 1) ? -1 : 1);
            }
            long diff = chi_diagonal_fiber(exps, signs, 1, Ambient::affine) -
                        chi_diagonal_fiber(exps, signs, 0, Ambient::affine);
            ++checked;
            if (diff % 2 == 0) ++even;
        }
    }
    std::ostringstream ss;
    ss << checked << " fibers, " << even << " even differences";
    return {even == 0, ss.str()};
}

// Largest witness order mentioned in an audit trail ("n=<digits>").
BigInt max_witness_in(const std::vector<std::string>& audit) {
    BigInt best = 0;
    for (const std::string& line : audit) {
        for (size_t at = line.find("n="); at != std::string::npos;
             at = line.find("n=", at + 1)) {
            size_t i = at + 2, j = i;
            while (j < line.size() && std::isdigit((unsigned char)line[j])) ++j;
            if (j > i) best = std::max(best, BigInt(line.substr(i, j - i)));
        }
    }
    return best;
}

// 6. Round-trip recovery: every exponent multiset over {2..9} with at
// most 5 entries, plus a handful of non-diagonal polynomials, must be
// reconstructed exactly from the coefficient stream, each case within
// 5 seconds.  The certification and witness orders run far past 10^6.
Outcome check_recovery_sweep() {
    const double per_case = 5.0;
    std::vector<std::vector<long>> cases;
    std::vector<long> cur;
    auto gen = [&](auto&& self, long start, int left) -> void {
        if (!cur.empty()) cases.push_back(cur);
        if (left == 0) return;
        for (long v = start; v <= 9; ++v) {
            cur.push_back(v);
            self(self, v, left - 1);
            cur.pop_back();
        }
    };
    // Collect multisets of size 1..5 (the root's empty prefix is skipped).
    for (long v = 2; v <= 9; ++v) {
        cur.assign(1, v);
        cases.push_back(cur);
        for (long w = v; w <= 9; ++w) {
            cur.assign(1, v);
            cur.push_back(w);
            gen(gen, w, 3);
        }
    }
    long wrong = 0;
    double slowest = 0;
    BigInt max_witness = 0;
    for (const auto& delta : cases) {
        const auto t0 = Clock::now();
        auto oracle = oracle_from_profile(diagonal_profile(delta));
        RecoveryReport rep = run_recovery(*oracle);
        slowest = std::max(slowest, seconds_since(t0));
        std::vector<BigInt> want;
        for (long v : delta) want.push_back(BigInt(v));
        if (!rep.ok || rep.delta != want) ++wrong;
        max_witness = std::max(max_witness, max_witness_in(rep.audit));
    }
    const std::vector<std::pair<std::string, std::vector<long>>> crooked = {
        {"x^2 + x*y + y^2", {2, 2}},
        {"x^2 + x*y^2 + y^4", {2, 4}},
        {"x^2 + y^2 + z^2 + x*y", {2, 2, 2}},
        {"x^3 + y^3 + z^3 + x*y*z", {3, 3, 3}},
        {"x^4 + x^2*y^3 + y^6", {4, 6}},
    };
    for (const auto& [text, delta] : crooked) {
        const auto t0 = Clock::now();
        auto oracle = oracle_from_profile(profile_of(text));
        RecoveryReport rep = run_recovery(*oracle);
        slowest = std::max(slowest, seconds_since(t0));
        std::vector<BigInt> want;
        for (long v : delta) want.push_back(BigInt(v));
        if (!rep.ok || rep.delta != want) ++wrong;
    }
    std::ostringstream ss;
    ss << cases.size() << " multisets + " << crooked.size() << " non-diagonal, " << wrong
       << " failures, slowest case " << slowest << "s (budget " << per_case
       << "s), largest witness " << max_witness.get_str();
    return {cases.size() == 1286 && wrong == 0 && slowest <= per_case &&
                max_witness > 1000000,
            ss.str()};
}

// 7. A unit exponent is equivalent to a vanishing series: profiles with
// some exponent 1 realize to zero at every order through three periods,
// and profiles with all exponents >= 2 show a nonzero coefficient no
// later than one period.
Outcome check_nonsingular_characterization() {
    std::mt19937 rng(7007u);
    std::uniform_int_distribution<long> d_dist(1, 4), e_dist(1, 6), e2_dist(2, 7);
    long wrong = 0;
    for (int trial = 0; trial < 25; ++trial) {
        int d = (int)d_dist(rng);
        std::vector<long> delta;
        for (int i = 0; i < d; ++i) delta.push_back(e_dist(rng));
        delta[(size_t)rng() % delta.size()] = 1;
        WeightProfile p = diagonal_profile(delta);
        if (p.singular) {
            ++wrong;
            continue;
        }
        const long n = 3 * to_long_checked(p.m_w);
        for (long m = 1; m <= n; ++m) {
            CoeffClass c = coeff_class_any(p, BigInt(m));
            if (c.pure || c.chi.fplus != 0 || c.chi.fminus != 0 || c.chi.bar != 0) {
                ++wrong;
                break;
            }
        }
    }
    for (int trial = 0; trial < 25; ++trial) {
        int d = (int)d_dist(rng);
        std::vector<long> delta;
        for (int i = 0; i < d; ++i) delta.push_back(e2_dist(rng));
        WeightProfile p = diagonal_profile(delta);
        if (!p.singular) {
            ++wrong;
            continue;
        }
        bool nonzero = false;
        const long n = to_long_checked(p.m_w);
        for (long m = 1; m <= n && !nonzero; ++m) {
            CoeffClass c = coeff_class_any(p, BigInt(m));
            // A pure coefficient is a nonzero multiple of the unit; a
            // mixed one is witnessed by any nonvanishing realization.
            nonzero = c.pure || c.chi.fplus != 0 || c.chi.fminus != 0 || c.chi.bar != 0;
        }
        if (!nonzero) ++wrong;
    }
    std::ostringstream ss;
    ss << "25 unit-exponent + 25 singular profiles, " << wrong << " failures";
    return {wrong == 0, ss.str()};
}

long multiset_count(const std::vector<long>& delta, const BigInt& q) {
    long c = 0;
    for (long v : delta)
        if (BigInt(v) == q) ++c;
    return c;
}

// 8. Separation: streams of profiles with different exponent multisets
// must be told apart with a concrete witness exponent, including a pair
// sharing the same reciprocal sum, and equal multisets must never be.
Outcome check_separation() {
    long wrong = 0;
    std::ostringstream notes;

    const std::vector<long> twin_a = {2, 4, 6}, twin_b = {3, 3, 4};
    RecoveryReport la = run_recovery(*oracle_from_profile(diagonal_profile(twin_a)));
    RecoveryReport lb = run_recovery(*oracle_from_profile(diagonal_profile(twin_b)));
    if (reciprocal_sum(diagonal_profile(twin_a)) != reciprocal_sum(diagonal_profile(twin_b)))
        ++wrong;
    CompareResult twin = compare_recoveries(la, lb);
    if (twin.verdict != CompareResult::Verdict::separated || twin.witness_q != 2 ||
        twin.mult_left != 1 || twin.mult_right != 0) {
        ++wrong;
        notes << " [twin pair not separated at exponent 2]";
    }

    std::mt19937 rng(8088u);
    std::uniform_int_distribution<long> d_dist(1, 4), e_dist(2, 7);
    auto random_multiset = [&]() {
        std::vector<long> delta;
        int d = (int)d_dist(rng);
        for (int i = 0; i < d; ++i) delta.push_back(e_dist(rng));
        std::sort(delta.begin(), delta.end());
        return delta;
    };
    for (int pair = 0; pair < 20; ++pair) {
        std::vector<long> a = random_multiset(), b = random_multiset();
        while (b == a) b = random_multiset();
        RecoveryReport ra = run_recovery(*oracle_from_profile(diagonal_profile(a)));
        RecoveryReport rb = run_recovery(*oracle_from_profile(diagonal_profile(b)));
        CompareResult cr = compare_recoveries(ra, rb);
        if (cr.verdict != CompareResult::Verdict::separated ||
            multiset_count(a, cr.witness_q) == multiset_count(b, cr.witness_q)) {
            ++wrong;
            notes << " [pair " << pair << " not separated by a real witness]";
        }
    }

    // Equal multisets: shuffled axis order and non-diagonal terms.
    for (int pair = 0; pair < 10; ++pair) {
        std::vector<long> a = random_multiset();
        std::vector<long> b = a;
        std::shuffle(b.begin(), b.end(), rng);
        RecoveryReport ra = run_recovery(*oracle_from_profile(diagonal_profile(a)));
        RecoveryReport rb = run_recovery(*oracle_from_profile(diagonal_profile(b)));
        if (compare_recoveries(ra, rb).verdict != CompareResult::Verdict::weights_equal) {
            ++wrong;
            notes << " [equal pair " << pair << " separated]";
        }
    }
    RecoveryReport rd = run_recovery(*oracle_from_profile(diagonal_profile({2, 4})));
    RecoveryReport rf = run_recovery(*oracle_from_profile(profile_of("x^2 + x*y^2 + y^4")));
    if (compare_recoveries(rd, rf).verdict != CompareResult::Verdict::weights_equal) {
        ++wrong;
        notes << " [diagonal vs non-diagonal with equal exponents separated]";
    }

    std::ostringstream ss;
    ss << "1 twin + 20 unequal + 11 equal pairs, " << wrong << " failures" << notes.str();
    return {wrong == 0, ss.str()};
}

// 9. The inversion identity between the plain and the modified series
// holds symbolically through two periods on a spread of profiles, and a
// sign corruption of the background is caught at the first order.
Outcome check_inversion_identity() {
    std::vector<WeightProfile> profiles = {
        diagonal_profile({2, 3}),    diagonal_profile({2, 2}),   diagonal_profile({3, 3}),
        diagonal_profile({2, 4, 6}), diagonal_profile({2, 3, 5}), diagonal_profile({4, 4}),
        diagonal_profile({5, 7}),    profile_of("x^2 + x*y + y^2"),
        profile_of("x^2 + x*y^2 + y^4"), profile_of("x^3 + y^3 + z^3 + x*y*z")};
    long wrong = 0;
    std::ostringstream notes;
    for (size_t i = 0; i < profiles.size(); ++i) {
        const long order = 2 * to_long_checked(profiles[i].m_w);
        IdentityCheck good = verify_inversion_identity(profiles[i], order);
        IdentityCheck bad = verify_inversion_identity(profiles[i], order, true);
        if (!good.ok) {
            ++wrong;
            notes << " [profile " << i << " fails at order " << good.first_fail << "]";
        }
        if (bad.ok || bad.first_fail != 1) {
            ++wrong;
            notes << " [corrupted control on profile " << i << " not caught at order 1]";
        }
    }
    std::ostringstream ss;
    ss << profiles.size() << " profiles through twice the period, " << wrong << " failures"
       << notes.str();
    return {wrong == 0, ss.str()};
}

} // namespace

int main() {
    struct Entry {
        const char* label;
        Outcome (*fn)();
    };
    const std::vector<Entry> checks = {
        {"cone series closed form equals brute lattice enumeration", check_cone_series},
        {"background coefficient equals its cone resummation", check_background_resummation},
        {"rational form expands to the lazy coefficients", check_rational_form},
        {"Euler characteristic fixtures", check_chi_fixtures},
        {"fiber parity across quadratic signatures and 2/4 diagonals", check_parity_sweep},
        {"exponent recovery round trip", check_recovery_sweep},
        {"unit exponents are equivalent to a vanishing series", check_nonsingular_characterization},
        {"stream separation with concrete witnesses", check_separation},
        {"inversion identity with corrupted control", check_inversion_identity},
    };
    int failed = 0;
    for (size_t i = 0; i < checks.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = checks[i].fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << checks[i].label
                  << ": " << o.detail << " (" << seconds_since(t0) << "s)\n";
        std::cout.flush();
    }
    std::cout << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
    return failed;
}
