#include <doctest.h>

#include <functional>
#include <random>

#include "wzeta/primes.hpp"
#include "wzeta/recovery.hpp"

using namespace wzeta;

namespace {

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

std::vector<BigInt> to_bigs(const std::vector<long>& v) {
    std::vector<BigInt> r;
    for (long x : v) r.push_back(BigInt(x));
    return r;
}

// Oracle that never shows a pure coefficient; the scan can never certify.
class NeverPureOracle : public ZetaOracle {
  public:
    int dimension() const override { return 2; }
    bool is_pure(const BigInt&) const override { return false; }
    BigInt deg_beta_bar(const BigInt&) const override {
        throw InternalError("bar degree queried on a non-pure stream");
    }
    BigInt deg_beta_fplus_rel(const BigInt& m) const override { return -m; }
    std::string token_id(const BigInt&) const override { return "opaque"; }
    bool parity_fplus_ok(const BigInt&, ParityKind) const override { return true; }
};

// Wrapper adding a fixed per-token offset to the relative fiber degrees.
// The reconstruction contract only uses differences at equal tokens, so
// the output must not change.
class OffsetJitterOracle : public ZetaOracle {
  public:
    explicit OffsetJitterOracle(const WeightProfile& p) : base_(oracle_from_profile(p)) {}
    int dimension() const override { return base_->dimension(); }
    bool is_pure(const BigInt& m) const override { return base_->is_pure(m); }
    BigInt deg_beta_bar(const BigInt& m) const override { return base_->deg_beta_bar(m); }
    BigInt deg_beta_fplus_rel(const BigInt& m) const override {
        long off = (long)(std::hash<std::string>{}(base_->token_id(m)) % 97);
        return base_->deg_beta_fplus_rel(m) + off;
    }
    std::string token_id(const BigInt& m) const override { return base_->token_id(m); }
    bool parity_fplus_ok(const BigInt& m, ParityKind kind) const override {
        return base_->parity_fplus_ok(m, kind);
    }

  private:
    std::unique_ptr<ZetaOracle> base_;
};

} // namespace

TEST_CASE("profile oracle pinned values") {
    WeightProfile p = profile_of("x^2 + y^3");
    auto oracle = oracle_from_profile(p);
    CHECK(oracle->dimension() == 2);
    CHECK(oracle->is_pure(BigInt(1)));
    CHECK(oracle->is_pure(BigInt(5)));
    CHECK_FALSE(oracle->is_pure(BigInt(2)));
    CHECK_FALSE(oracle->is_pure(BigInt(6)));

    CHECK(oracle->deg_beta_bar(BigInt(1)) == 1);
    CHECK(oracle->deg_beta_bar(BigInt(5)) == -2);
    // Degree fall across a window counts divisor hits inside it.
    CHECK(oracle->deg_beta_bar(BigInt(29)) - oracle->deg_beta_bar(BigInt(31)) == 2);

    CHECK(oracle->token_id(BigInt(2)) == oracle->token_id(BigInt(4)));
    CHECK(oracle->token_id(BigInt(2)) != oracle->token_id(BigInt(6)));
    CHECK(oracle->deg_beta_fplus_rel(BigInt(2)) - oracle->deg_beta_fplus_rel(BigInt(4)) == 2);
    CHECK(oracle->parity_fplus_ok(BigInt(2), ParityKind::exp2));

    CHECK_THROWS_AS(oracle_from_profile(profile_of("x + y^5")), InputError);
}

TEST_CASE("reciprocal sum estimation") {
    auto cusp = oracle_from_profile(profile_of("x^2 + y^3"));
    ReciprocalSumEstimate e = estimate_reciprocal_sum(*cusp);
    CHECK(e.S == Rational(5, 6));
    CHECK(e.certified_N == 4);

    auto brieskorn = oracle_from_profile(diagonal_profile({2, 4, 6}));
    e = estimate_reciprocal_sum(*brieskorn);
    CHECK(e.S == Rational(11, 12));
    CHECK(e.certified_N == 4);

    auto single = oracle_from_profile(diagonal_profile({2}));
    e = estimate_reciprocal_sum(*single);
    CHECK(e.S == Rational(1, 2));
    CHECK(e.certified_N == 2);

    NeverPureOracle stuck;
    CHECK_THROWS_AS(estimate_reciprocal_sum(stuck, 64), BudgetError);
}

TEST_CASE("candidate grids") {
    DivisorGrid g = exponent_grid(Rational(5, 6), 2);
    CHECK(g.K == 3);
    CHECK(g.P == std::vector<long>{2, 3});
    CHECK(g.Q == to_bigs({1, 2, 3, 6}));

    DivisorGrid h = exponent_grid(Rational(11, 12), 3);
    CHECK(h.K == 12);
    CHECK(h.P == std::vector<long>{2, 3, 5, 7, 11});
    CHECK(h.Q.size() == 96);
    for (long q : {2, 4, 6, 12})
        CHECK(std::find(h.Q.begin(), h.Q.end(), BigInt(q)) != h.Q.end());

    DivisorGrid one = exponent_grid(Rational(1, 2), 1);
    CHECK(one.K == 2);
    CHECK(one.Q == to_bigs({1, 2}));

    CHECK_THROWS_AS(exponent_grid(Rational(3), 2), InputError);

    DivisorGrid b = grid_from_prime_power_bound(4);
    CHECK(b.P == std::vector<long>{2, 3});
    CHECK(b.gamma == std::vector<long>{2, 1});
    CHECK(b.Q == to_bigs({1, 2, 3, 4, 6, 12}));
    CHECK_THROWS_AS(grid_from_prime_power_bound(1), InputError);
    CHECK_THROWS_AS(grid_from_prime_power_bound(30, 10), CapacityError);
}

TEST_CASE("witness selection verifies its divisor table") {
    DivisorGrid grid = grid_from_prime_power_bound(4);

    // Exact 2-adic and 3-adic valuations of 6 pin n = 30 mod 36.
    std::vector<Congruence> good = {{BigInt(2), BigInt(4)}, {BigInt(3), BigInt(9)}};
    std::vector<WindowRow> rows = {{-1, BigInt(1)}, {0, BigInt(6)}, {1, BigInt(1)}};
    BigInt n = choose_witness(good, grid, rows, {});
    CHECK(n == 30);

    // A guarantee row on the same witness.
    CHECK_NOTHROW(choose_witness(good, grid, rows, {{0, BigInt(6)}}));

    // Wrong residue class: 4 divides n - 2 but not the claimed value 2.
    std::vector<Congruence> bad = {{BigInt(2), BigInt(8)}, {BigInt(3), BigInt(9)},
                                   {BigInt(5), BigInt(25)}};
    std::vector<WindowRow> step2 = {{-2, BigInt(2)}, {-1, BigInt(1)}, {0, BigInt(60)},
                                    {1, BigInt(1)},  {2, BigInt(2)}};
    CHECK_THROWS_AS(choose_witness(bad, grid, step2, {}), InternalError);

    // Same congruences with the intended residue 4 mod 8 pass.
    std::vector<Congruence> fixed = {{BigInt(4), BigInt(8)}, {BigInt(3), BigInt(9)},
                                     {BigInt(5), BigInt(25)}};
    CHECK_NOTHROW(choose_witness(fixed, grid, step2, {}));
}

TEST_CASE("pinned witness tables meet the oracle degree data") {
    // For a witness n with divisor row n ~ q and clean neighbours, the
    // bar-degree fall across (n-1, n+1] counts exactly the exponents
    // dividing q.
    std::mt19937 rng(20260815u);
    std::uniform_int_distribution<long> d_dist(1, 4), pick(0, 6);
    const std::vector<long> pool = {2, 3, 4, 6, 8, 9, 12};
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<long> delta;
        int d = (int)d_dist(rng);
        for (int i = 0; i < d; ++i) delta.push_back(pool[pick(rng)]);
        WeightProfile p = diagonal_profile(delta);
        auto oracle = oracle_from_profile(p);

        // Grid bound: the largest prime power inside any exponent.
        long K = 2;
        for (long v : delta)
            for (auto [pr, a] : factorize(v)) {
                long pw = 1;
                for (long i = 0; i < a; ++i) pw *= pr;
                K = std::max(K, pw);
            }
        DivisorGrid grid = grid_from_prime_power_bound(K);

        std::vector<BigInt> sixes;
        for (const auto& q : grid.Q)
            if (divides(BigInt(6), q)) sixes.push_back(q);
        if (sixes.empty()) continue;
        BigInt q = sixes[(size_t)rng() % sixes.size()];

        std::vector<Congruence> congruences;
        for (long pr : grid.P) {
            long a = (long)valuation(q, BigInt(pr));
            if (a > 0)
                congruences.push_back({big_pow(BigInt(pr), a), big_pow(BigInt(pr), a + 1)});
            else
                congruences.push_back({BigInt(2), BigInt(pr)});
        }
        BigInt n = choose_witness(congruences, grid,
                                  {{-1, BigInt(1)}, {0, q}, {1, BigInt(1)}}, {});

        REQUIRE(oracle->is_pure(n - 1));
        REQUIRE(oracle->is_pure(n + 1));
        BigInt fall = oracle->deg_beta_bar(n - 1) - oracle->deg_beta_bar(n + 1);
        BigInt expect = 0;
        for (long v : delta)
            if (divides(BigInt(v), q)) ++expect;
        CHECK(fall == expect);
    }
}

TEST_CASE("full recovery of the cusp") {
    auto oracle = oracle_from_profile(profile_of("x^2 + y^3"));
    RecoveryReport rep = run_recovery(*oracle);
    CHECK(rep.ok);
    CHECK(rep.S == Rational(5, 6));
    CHECK(rep.certified_N == 4);
    CHECK(rep.K == 4);
    CHECK(rep.P == std::vector<long>{2, 3});
    CHECK(rep.grid_size == 6);
    REQUIRE(rep.mult.size() == 2);
    CHECK(rep.mult.at(BigInt(2)) == 1);
    CHECK(rep.mult.at(BigInt(3)) == 1);
    CHECK(rep.delta == to_bigs({2, 3}));
    CHECK(rep.weights == to_bigs({3, 2}));
    CHECK(rep.m_w == 6);
    CHECK_FALSE(rep.audit.empty());

    CHECK_THROWS_AS(run_recovery(*oracle, 1 << 16, 3), CapacityError);
}

TEST_CASE("recovery fixtures across exponent shapes") {
    struct Fixture {
        std::vector<long> delta;
        std::vector<long> weights;
        long m_w;
    };
    std::vector<Fixture> fixtures = {
        {{2, 4, 6}, {6, 3, 2}, 12}, {{2, 2}, {1, 1}, 2},   {{8}, {1}, 8},
        {{3, 3, 4}, {4, 4, 3}, 12}, {{5, 7}, {7, 5}, 35},  {{2, 3, 7}, {21, 14, 6}, 42},
    };
    for (const auto& f : fixtures) {
        auto oracle = oracle_from_profile(diagonal_profile(f.delta));
        RecoveryReport rep = run_recovery(*oracle);
        CHECK(rep.ok);
        std::vector<long> sorted = f.delta;
        std::sort(sorted.begin(), sorted.end());
        CHECK(rep.delta == to_bigs(sorted));
        CHECK(rep.weights == to_bigs(f.weights));
        CHECK(rep.m_w == f.m_w);
    }
}

TEST_CASE("recovery sees only exponents, not the facet terms") {
    std::vector<std::pair<std::string, std::vector<long>>> cases = {
        {"x^2 + x*y^2 + y^4", {2, 4}},
        {"x^4 + x^2*y^3 + y^6", {4, 6}},
        {"x^2 + x*y + y^2", {2, 2}},
        {"x^3 + y^3 + z^3 + x*y*z", {3, 3, 3}},
    };
    for (const auto& [text, delta] : cases) {
        auto oracle = oracle_from_profile(profile_of(text));
        RecoveryReport rep = run_recovery(*oracle);
        CHECK(rep.ok);
        CHECK(rep.delta == to_bigs(delta));
    }
}

TEST_CASE("recovery round trip on random exponent multisets") {
    std::mt19937 rng(271828u);
    std::uniform_int_distribution<long> d_dist(1, 4), e_dist(2, 9);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<long> delta;
        int d = (int)d_dist(rng);
        for (int i = 0; i < d; ++i) delta.push_back(e_dist(rng));
        auto oracle = oracle_from_profile(diagonal_profile(delta));
        RecoveryReport rep = run_recovery(*oracle);
        CHECK(rep.ok);
        std::vector<long> sorted = delta;
        std::sort(sorted.begin(), sorted.end());
        CHECK(rep.delta == to_bigs(sorted));
        CHECK(rep.S == reciprocal_sum(diagonal_profile(delta)));
    }
}

TEST_CASE("per-token degree offsets do not change the recovery") {
    for (const std::vector<long>& delta :
         {std::vector<long>{2, 3}, std::vector<long>{2, 4, 6}, std::vector<long>{4, 5, 9}}) {
        WeightProfile p = diagonal_profile(delta);
        auto plain = oracle_from_profile(p);
        OffsetJitterOracle jitter(p);
        RecoveryReport a = run_recovery(*plain);
        RecoveryReport b = run_recovery(jitter);
        CHECK(a.ok);
        CHECK(b.ok);
        CHECK(a.mult == b.mult);
        CHECK(a.weights == b.weights);
        CHECK(a.S == b.S);
    }
}

TEST_CASE("weights from multiplicity tables") {
    std::map<BigInt, BigInt> m;
    m[BigInt(2)] = 1;
    m[BigInt(4)] = 1;
    m[BigInt(6)] = 1;
    CHECK(weights_from_mults(m) == to_bigs({6, 3, 2}));

    m.clear();
    m[BigInt(3)] = 2;
    m[BigInt(4)] = 1;
    CHECK(weights_from_mults(m) == to_bigs({4, 4, 3}));

    m.clear();
    m[BigInt(2)] = 3;
    CHECK(weights_from_mults(m) == to_bigs({1, 1, 1}));
}

TEST_CASE("comparison verdicts") {
    auto left = run_recovery(*oracle_from_profile(diagonal_profile({2, 4, 6})));
    auto right = run_recovery(*oracle_from_profile(diagonal_profile({3, 3, 4})));
    // Same reciprocal sum, same degree, different exponents.
    CHECK(left.S == right.S);
    CompareResult cr = compare_recoveries(left, right);
    CHECK(cr.verdict == CompareResult::Verdict::separated);
    CHECK(cr.witness_q == 2);
    CHECK(cr.mult_left == 1);
    CHECK(cr.mult_right == 0);

    // Different facet terms over the same exponents are indistinguishable.
    auto diag = run_recovery(*oracle_from_profile(diagonal_profile({2, 4})));
    auto facet = run_recovery(*oracle_from_profile(profile_of("x^2 + x*y^2 + y^4")));
    CompareResult eq = compare_recoveries(diag, facet);
    CHECK(eq.verdict == CompareResult::Verdict::weights_equal);

    RecoveryReport broken;
    CHECK(compare_recoveries(left, broken).verdict == CompareResult::Verdict::inconclusive);
}
