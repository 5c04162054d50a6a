// Reconstruction of the exponent multiset from coefficient data.  The
// driver picks witness orders n by CRT so that the divisor pattern of a
// short neighbourhood of n is known in advance, measures degree
// differences across the window through the oracle, and accumulates
// linear equations in the divisor multiplicities until all of them are
// solved.
#include "wzeta/recovery.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "wzeta/egyptian.hpp"
#include "wzeta/primes.hpp"

namespace wzeta {

namespace {

// constant + sum_q coeff[q] * mult(q)
struct LinForm {
    BigInt constant = 0;
    std::map<BigInt, BigInt> coeff;
};

// Stored with the constant moved to the value side:
// sum_q coeff[q] * mult(q) == rhs.
struct PendingEq {
    std::map<BigInt, BigInt> coeff;
    BigInt rhs;
    std::string what;
};

class MultSolver {
  public:
    explicit MultSolver(std::vector<std::string>& audit) : audit_(audit) {
        // A unit exponent would make every coefficient vanish, which the
        // certification scan has already ruled out.
        solved_[BigInt(1)] = 0;
    }

    bool knows(const BigInt& q) const { return solved_.count(q) != 0; }
    const BigInt& value(const BigInt& q) const { return solved_.at(q); }

    // Substitutes already known multiplicities into the constant part.
    void fold(LinForm& f) const {
        for (auto it = f.coeff.begin(); it != f.coeff.end();) {
            auto s = solved_.find(it->first);
            if (s == solved_.end()) {
                ++it;
                continue;
            }
            f.constant += it->second * s->second;
            it = f.coeff.erase(it);
        }
    }

    void add(LinForm form, const BigInt& value, const std::string& what) {
        fold(form);
        pending_.push_back(PendingEq{std::move(form.coeff), value - form.constant, what});
        sweep();
    }

    // Repeats substitution, single-unknown solving and 2x2 elimination
    // until no further equation resolves.
    void sweep() {
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto it = pending_.begin(); it != pending_.end();) {
                for (auto c = it->coeff.begin(); c != it->coeff.end();) {
                    auto s = solved_.find(c->first);
                    if (s == solved_.end()) {
                        ++c;
                        continue;
                    }
                    it->rhs -= c->second * s->second;
                    c = it->coeff.erase(c);
                }
                if (it->coeff.empty()) {
                    if (it->rhs != 0)
                        throw InternalError("inconsistent measurement: " + it->what);
                    it = pending_.erase(it);
                    progress = true;
                    continue;
                }
                if (it->coeff.size() == 1) {
                    const BigInt& q = it->coeff.begin()->first;
                    const BigInt& c = it->coeff.begin()->second;
                    if (c == 0 || !divides(c, it->rhs))
                        throw InternalError("non-integral multiplicity from " + it->what);
                    record(q, it->rhs / c, it->what);
                    it = pending_.erase(it);
                    progress = true;
                    continue;
                }
                ++it;
            }
            if (progress) continue;
            for (std::size_t i = 0; i < pending_.size() && !progress; ++i) {
                if (pending_[i].coeff.size() != 2) continue;
                for (std::size_t j = i + 1; j < pending_.size() && !progress; ++j) {
                    if (pending_[j].coeff.size() != 2) continue;
                    auto a = pending_[i].coeff.begin();
                    auto b = pending_[j].coeff.begin();
                    if (a->first != b->first || std::next(a)->first != std::next(b)->first)
                        continue;
                    const BigInt a1 = a->second, b1 = std::next(a)->second;
                    const BigInt a2 = b->second, b2 = std::next(b)->second;
                    const BigInt r1 = pending_[i].rhs, r2 = pending_[j].rhs;
                    const BigInt det = a1 * b2 - a2 * b1;
                    if (det == 0) continue;
                    const BigInt xnum = r1 * b2 - r2 * b1;
                    const BigInt ynum = a1 * r2 - a2 * r1;
                    const std::string what = pending_[i].what + " with " + pending_[j].what;
                    if (!divides(det, xnum) || !divides(det, ynum))
                        throw InternalError("non-integral pair solution: " + what);
                    const BigInt qx = a->first, qy = std::next(a)->first;
                    record(qx, xnum / det, what);
                    record(qy, ynum / det, what);
                    pending_.erase(pending_.begin() + static_cast<long>(j));
                    pending_.erase(pending_.begin() + static_cast<long>(i));
                    progress = true;
                }
            }
        }
    }

    std::size_t pending_count() const { return pending_.size(); }

  private:
    void record(const BigInt& q, const BigInt& v, const std::string& what) {
        if (v < 0)
            throw InternalError("negative multiplicity for divisor " + q.get_str() +
                                " from " + what);
        auto it = solved_.find(q);
        if (it != solved_.end()) {
            if (it->second != v)
                throw InternalError("conflicting values for divisor " + q.get_str() +
                                    " from " + what);
            return;
        }
        solved_[q] = v;
        audit_.push_back("mult(" + q.get_str() + ") = " + v.get_str() + "  [" + what + "]");
    }

    std::map<BigInt, BigInt> solved_;
    std::vector<PendingEq> pending_;
    std::vector<std::string>& audit_;
};

// Product over p in P of p^min(v_p(x), gamma_p): the part of x the grid
// can see.
BigInt grid_cap(const DivisorGrid& grid, const BigInt& x) {
    BigInt c = 1;
    for (std::size_t i = 0; i < grid.P.size(); ++i) {
        const BigInt p(grid.P[i]);
        BigInt rest = x;
        long v = 0;
        while (v < grid.gamma[i] && divides(p, rest)) {
            rest /= p;
            ++v;
        }
        for (long k = 0; k < v; ++k) c *= p;
    }
    return c;
}

// Sum of mult(r) over grid candidates r dividing cap, as a linear form.
LinForm divisor_mult_sum(const DivisorGrid& grid, const BigInt& cap) {
    LinForm f;
    for (const BigInt& r : grid.Q)
        if (divides(r, cap)) f.coeff[r] += 1;
    return f;
}

// Expected value of the degree span over (n + a_off, n + b_off]: one
// divisor-multiplicity sum per integer point.  Known parts fold into the
// constant; a point whose cap was measured in the first pass substitutes
// that measurement.
LinForm window_rhs(const DivisorGrid& grid, const MultSolver& solver,
                   const std::map<BigInt, BigInt>& first_pass, const BigInt& n, long a_off,
                   long b_off) {
    LinForm total;
    for (long off = a_off + 1; off <= b_off; ++off) {
        const BigInt cap = grid_cap(grid, n + off);
        LinForm part = divisor_mult_sum(grid, cap);
        solver.fold(part);
        if (!part.coeff.empty()) {
            auto it = first_pass.find(cap);
            if (it != first_pass.end()) {
                total.constant += it->second;
                continue;
            }
        }
        total.constant += part.constant;
        for (const auto& [q, c] : part.coeff) total.coeff[q] += c;
    }
    return total;
}

// s(b) - s(a) read off the oracle.  Pure endpoints use the plain degree;
// matching non-pure endpoints use the relative fiber degree, whose
// token-dependent offset cancels in the difference.
BigInt measure_degree_span(const ZetaOracle& oracle, const BigInt& a, const BigInt& b,
                           std::optional<ParityKind> kind, const std::string& what) {
    const bool pa = oracle.is_pure(a);
    const bool pb = oracle.is_pure(b);
    if (pa && pb) return oracle.deg_beta_bar(a) - oracle.deg_beta_bar(b);
    if (pa != pb) throw InternalError("window endpoints differ in purity: " + what);
    if (!kind) throw InternalError("window expected pure endpoints: " + what);
    if (oracle.token_id(a) != oracle.token_id(b))
        throw InternalError("window endpoints carry different tokens: " + what);
    if (!oracle.parity_fplus_ok(a, *kind) || !oracle.parity_fplus_ok(b, *kind))
        throw InternalError("parity certificate failed on a window endpoint: " + what);
    return oracle.deg_beta_fplus_rel(a) - oracle.deg_beta_fplus_rel(b);
}

struct StepDriver {
    const ZetaOracle& oracle;
    const DivisorGrid& grid;
    std::vector<std::string>& audit;
    MultSolver solver;
    // cap -> measured divisor-multiplicity sum, for caps divisible by 6
    std::map<BigInt, BigInt> first_pass;

    StepDriver(const ZetaOracle& o, const DivisorGrid& g, std::vector<std::string>& a)
        : oracle(o), grid(g), audit(a), solver(a) {}

    bool in_grid(long v) const {
        return std::binary_search(grid.Q.begin(), grid.Q.end(), BigInt(v));
    }
    bool has_prime(long p) const {
        return std::binary_search(grid.P.begin(), grid.P.end(), p);
    }

    // v_p(n) = alpha exactly
    static void pin(std::vector<Congruence>& sys, long p, unsigned long alpha) {
        BigInt pa = big_pow(BigInt(p), alpha);
        sys.push_back(Congruence{pa, pa * p});
    }

    void equation(const BigInt& n, long a_off, long b_off, std::optional<ParityKind> kind,
                  const std::string& what) {
        const BigInt val =
            measure_degree_span(oracle, n + a_off, n + b_off, kind, what);
        LinForm rhs = window_rhs(grid, solver, first_pass, n, a_off, b_off);
        solver.add(std::move(rhs), val, what);
    }

    // Pass over every candidate divisible by 6: both neighbours of n are
    // coprime to every candidate, so the degree step across (n-1, n+1]
    // equals the full divisor-multiplicity sum at q.
    void step_multiples_of_six() {
        for (const BigInt& q : grid.Q) {
            if (!divides(6, q)) continue;
            std::vector<Congruence> sys;
            for (std::size_t i = 0; i < grid.P.size(); ++i) {
                const long p = grid.P[i];
                const unsigned long v = valuation(q, BigInt(p));
                if (v >= 1)
                    pin(sys, p, v);
                else
                    sys.push_back(Congruence{2, p});
            }
            const BigInt n = choose_witness(sys, grid, {{-1, 1}, {0, q}, {1, 1}}, {});
            const std::string what = "divisor sum at " + q.get_str() + " (n=" + n.get_str() + ")";
            const BigInt val = measure_degree_span(oracle, n - 1, n + 1, std::nullopt, what);
            first_pass[q] = val;
            audit.push_back("sum of mult over divisors of " + q.get_str() + " = " +
                            val.get_str() + "  [n=" + n.get_str() + "]");
            solver.add(divisor_mult_sum(grid, q), val, what);
        }
    }

    // mult(2) from a window whose only grid-visible neighbours are n
    // (pattern 60) and n+2 (pattern 2).
    void step_two() {
        std::vector<Congruence> sys{{4, 8}, {3, 9}, {5, 25}};
        for (long p : grid.P)
            if (p > 5) sys.push_back(Congruence{3, p});
        const BigInt n =
            choose_witness(sys, grid, {{-2, 2}, {-1, 1}, {0, 60}, {1, 1}, {2, 2}}, {});
        equation(n, -2, 2, ParityKind::exp2, "window at n=" + n.get_str() + " for mult(2)");
    }

    // Odd candidates coprime to 3, ascending: window (n-3, n+1] leaves a
    // single new unknown mult(q).
    void step_odd_coprime_six() {
        for (const BigInt& q : grid.Q) {
            if (q == 1 || divides(2, q) || divides(3, q)) continue;
            std::vector<Congruence> sys{{1, 8}};
            for (long p : grid.P) {
                if (p == 2) continue;
                const unsigned long v = valuation(q, BigInt(p));
                if (v >= 1)
                    pin(sys, p, v);
                else
                    sys.push_back(Congruence{1, p});
            }
            const BigInt n =
                choose_witness(sys, grid, {{-3, 2}, {-2, 1}, {0, q}, {1, 2}},
                               {{-1, has_prime(3) ? BigInt(24) : BigInt(8)}});
            equation(n, -3, 1, ParityKind::exp2,
                     "window at n=" + n.get_str() + " for mult(" + q.get_str() + ")");
        }
    }

    // mult(3) and mult(4) from two windows; together they give a 2x2
    // system the solver eliminates.
    void step_three_and_four() {
        if (!in_grid(3) && !in_grid(4)) return;
        {
            std::vector<Congruence> sys{{4, 8}, {4, 25}, {4, 9}};
            for (long p : grid.P)
                if (p > 5) sys.push_back(Congruence{p - 2, p});
            const BigInt n = choose_witness(
                sys, grid, {{-3, 1}, {-2, 2}, {-1, 3}, {0, 4}, {1, 5}, {3, 1}}, {{2, 6}});
            equation(n, -3, 3, std::nullopt,
                     "window at n=" + n.get_str() + " for mult(3)+mult(4)");
        }
        {
            std::vector<Congruence> sys{{8, 16}, {9, 27}};
            for (long p : grid.P)
                if (p > 3) sys.push_back(Congruence{0, p});
            const BigInt n = choose_witness(
                sys, grid,
                {{-4, 4}, {-3, 3}, {-2, 2}, {-1, 1}, {1, 1}, {2, 2}, {3, 3}, {4, 4}},
                {{0, 6}});
            equation(n, -4, 4, ParityKind::exp4,
                     "window at n=" + n.get_str() + " for 2*mult(3)+mult(4)");
        }
    }

    // Candidates with 2-adic valuation exactly 1, coprime to 3.
    void step_doubled_odd() {
        for (const BigInt& q : grid.Q) {
            if (q <= 2 || valuation(q, 2) != 1 || divides(3, q)) continue;
            std::vector<Congruence> sys{{6, 16}, {4, 9}};
            const bool q5 = divides(5, q);
            const bool q7 = divides(7, q);
            if (!q5) sys.push_back(Congruence{4, 25});
            if (!q7) sys.push_back(Congruence{5, 7});
            for (long p : grid.P) {
                if (p <= 3) continue;
                const unsigned long v = valuation(q, BigInt(p));
                if (v >= 1)
                    pin(sys, p, v);
                else if (p > 7)
                    sys.push_back(Congruence{4, p});
            }
            const BigInt n = choose_witness(
                sys, grid,
                {{-3, 1}, {-2, 4}, {-1, 3}, {0, q}, {1, q5 ? BigInt(1) : BigInt(5)}, {3, 1}},
                {{2, 6}});
            equation(n, -3, 3, std::nullopt,
                     "window at n=" + n.get_str() + " for mult(" + q.get_str() + ")");
        }
    }

    // Candidates with 2-adic valuation at least 2, coprime to 3, smallest
    // first; mult(4) is already known and gets skipped.
    void step_higher_two_power() {
        for (const BigInt& q : grid.Q) {
            if (valuation(q, 2) < 2 || divides(3, q) || solver.knows(q)) continue;
            std::vector<Congruence> sys;
            pin(sys, 2, valuation(q, 2));
            sys.push_back(Congruence{4, 9});
            const bool q5 = divides(5, q);
            if (!q5) sys.push_back(Congruence{7, 25});
            for (long p : grid.P) {
                if (p <= 3) continue;
                const unsigned long v = valuation(q, BigInt(p));
                if (v >= 1)
                    pin(sys, p, v);
                else if (p > 5)
                    sys.push_back(Congruence{4, p});
            }
            const BigInt n = choose_witness(
                sys, grid, {{-3, 1}, {-2, q5 ? BigInt(2) : BigInt(10)}, {-1, 3}, {0, q}, {1, 1}},
                {});
            equation(n, -3, 1, std::nullopt,
                     "window at n=" + n.get_str() + " for mult(" + q.get_str() + ")");
        }
    }

    // Odd candidates divisible by 3, smallest first; mult(3) is known.
    void step_odd_multiple_of_three() {
        for (const BigInt& q : grid.Q) {
            if (divides(2, q) || !divides(3, q) || solver.knows(q)) continue;
            std::vector<Congruence> sys{{5, 8}};
            const bool q5 = divides(5, q);
            if (!q5) sys.push_back(Congruence{4, 25});
            for (long p : grid.P) {
                if (p == 2) continue;
                const unsigned long v = valuation(q, BigInt(p));
                if (v >= 1)
                    pin(sys, p, v);
                else if (p > 5)
                    sys.push_back(Congruence{3, p});
            }
            const BigInt n = choose_witness(
                sys, grid, {{-2, 1}, {-1, 4}, {0, q}, {1, q5 ? BigInt(2) : BigInt(10)}, {2, 1}},
                {});
            equation(n, -2, 2, std::nullopt,
                     "window at n=" + n.get_str() + " for mult(" + q.get_str() + ")");
        }
    }

    void finish(int d, const Rational& S, RecoveryReport& rep) {
        solver.sweep();
        if (solver.pending_count() != 0)
            throw InternalError("equations left unresolved after all passes");
        BigInt total = 0;
        Rational recon = 0;
        for (const BigInt& q : grid.Q) {
            if (!solver.knows(q))
                throw InternalError("no multiplicity derived for divisor " + q.get_str());
            const BigInt& v = solver.value(q);
            if (v == 0) continue;
            rep.mult[q] = v;
            total += v;
            recon += Rational(v) / Rational(q);
        }
        bool ok = true;
        if (total != d) {
            ok = false;
            rep.audit.push_back("check failed: multiplicities sum to " + total.get_str() +
                                ", dimension is " + std::to_string(d));
        }
        Rational want = S;
        want.canonicalize();
        recon.canonicalize();
        if (recon != want) {
            ok = false;
            rep.audit.push_back("check failed: reciprocal sum of recovered exponents is " +
                                rational_str(recon) + ", measured " + rational_str(want));
        }
        if (ok) {
            BigInt lcm = 1;
            for (const auto& [q, v] : rep.mult) {
                const long count = to_long_checked(v, "multiplicity");
                for (long k = 0; k < count; ++k) rep.delta.push_back(q);
                lcm = big_lcm(lcm, q);
            }
            rep.m_w = lcm;
            rep.weights = weights_from_mults(rep.mult);
            std::string line = "recovered exponents:";
            for (const BigInt& e : rep.delta) line += " " + e.get_str();
            rep.audit.push_back(line);
        }
        rep.ok = ok;
    }
};

} // namespace

DivisorGrid grid_from_prime_power_bound(long K, std::size_t q_cap) {
    if (K < 2) throw InputError("prime power bound must be at least 2");
    DivisorGrid g;
    g.K = K;
    g.P = primes_up_to(K);
    BigInt size = 1;
    for (long p : g.P) {
        long gam = 0;
        BigInt pw = 1;
        while (pw * p <= K) {
            pw *= p;
            ++gam;
        }
        g.gamma.push_back(gam);
        size *= gam + 1;
        if (size > static_cast<long>(q_cap))
            throw CapacityError("divisor grid for bound " + std::to_string(K) + " exceeds " +
                                std::to_string(q_cap) + " candidates; raise the cap to proceed");
    }
    std::vector<BigInt> cur{BigInt(1)};
    for (std::size_t i = 0; i < g.P.size(); ++i) {
        std::vector<BigInt> next;
        next.reserve(cur.size() * static_cast<std::size_t>(g.gamma[i] + 1));
        BigInt pw = 1;
        for (long e = 0; e <= g.gamma[i]; ++e) {
            for (const BigInt& x : cur) next.push_back(x * pw);
            pw *= g.P[i];
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    g.Q = std::move(cur);
    return g;
}

DivisorGrid exponent_grid(const Rational& S, int d, unsigned long node_budget,
                          std::size_t q_cap) {
    if (d < 1) throw InputError("dimension must be positive");
    const auto sols = egyptian_solutions(S, d, node_budget);
    if (sols.empty())
        throw InputError("no multiset of " + std::to_string(d) +
                         " integers >= 2 has reciprocal sum " + rational_str(S));
    BigInt K = 2;
    for (const auto& sol : sols)
        for (const auto& part : sol)
            if (part > K) K = part;
    return grid_from_prime_power_bound(to_long_checked(K, "grid bound"), q_cap);
}

ReciprocalSumEstimate estimate_reciprocal_sum(const ZetaOracle& oracle, long max_n) {
    if (max_n < 2) throw BudgetError("scan budget is below the smallest usable order");
    const int d = oracle.dimension();
    BigInt M = 1;
    long covered = 1;
    long N = 2;
    while (true) {
        for (long k = covered + 1; k <= N; ++k) M = big_lcm(M, BigInt(k));
        covered = N;
        if (oracle.is_pure(M - 1) && oracle.is_pure(M + 1)) {
            const BigInt s_lo = 1 - oracle.deg_beta_bar(M - 1);
            const BigInt s_hi = 1 - oracle.deg_beta_bar(M + 1);
            // A degree step equal to the dimension across two pure
            // neighbours certifies that every exponent divides M.
            if (s_hi - s_lo == d) {
                Rational S(s_hi, M);
                S.canonicalize();
                return ReciprocalSumEstimate{S, N};
            }
        }
        if (N > max_n / 2)
            throw BudgetError("no certifying order found up to N = " + std::to_string(max_n));
        N *= 2;
    }
}

BigInt choose_witness(const std::vector<Congruence>& congruences, const DivisorGrid& grid,
                      const std::vector<WindowRow>& rows,
                      const std::vector<GuaranteeRow>& guarantees) {
    const BigInt n = crt_solve(congruences);
    for (const auto& row : rows) {
        const BigInt x = n + row.offset;
        if (x < 1)
            throw InternalError("window reaches below order 1 at offset " +
                                std::to_string(row.offset));
        for (const BigInt& r : grid.Q) {
            if (divides(r, x) != divides(r, row.value))
                throw InternalError("divisor table mismatch at offset " +
                                    std::to_string(row.offset) + ": candidate " + r.get_str() +
                                    " against expected pattern " + row.value.get_str());
        }
    }
    for (const auto& g : guarantees) {
        if (!divides(g.forced, n + g.offset))
            throw InternalError("forced divisor " + g.forced.get_str() +
                                " missing at offset " + std::to_string(g.offset));
    }
    return n;
}

std::vector<BigInt> weights_from_mults(const std::map<BigInt, BigInt>& mult) {
    BigInt lcm = 1;
    for (const auto& [q, v] : mult) {
        if (v <= 0) continue;
        if (q < 1) throw InputError("exponents must be positive");
        lcm = big_lcm(lcm, q);
    }
    std::vector<BigInt> w;
    for (const auto& [q, v] : mult) {
        if (v <= 0) continue;
        const long count = to_long_checked(v, "multiplicity");
        for (long k = 0; k < count; ++k) w.push_back(lcm / q);
    }
    // ascending exponents give descending weights already; sort anyway so
    // the contract does not depend on map order
    std::sort(w.begin(), w.end(), [](const BigInt& a, const BigInt& b) { return a > b; });
    return w;
}

CompareResult compare_recoveries(const RecoveryReport& left, const RecoveryReport& right) {
    CompareResult res;
    if (!left.ok || !right.ok) return res;
    std::vector<BigInt> keys;
    for (const auto& [q, v] : left.mult) keys.push_back(q);
    for (const auto& [q, v] : right.mult) keys.push_back(q);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const BigInt& q : keys) {
        auto a = left.mult.find(q);
        auto b = right.mult.find(q);
        const BigInt va = a == left.mult.end() ? BigInt(0) : a->second;
        const BigInt vb = b == right.mult.end() ? BigInt(0) : b->second;
        if (va != vb) {
            res.verdict = CompareResult::Verdict::separated;
            res.witness_q = q;
            res.mult_left = va;
            res.mult_right = vb;
            return res;
        }
    }
    res.verdict = CompareResult::Verdict::weights_equal;
    return res;
}

RecoveryReport run_recovery(const ZetaOracle& oracle, long max_n, std::size_t q_cap) {
    RecoveryReport rep;
    const ReciprocalSumEstimate est = estimate_reciprocal_sum(oracle, max_n);
    rep.S = est.S;
    rep.certified_N = est.certified_N;
    const DivisorGrid grid = grid_from_prime_power_bound(est.certified_N, q_cap);
    rep.K = grid.K;
    rep.P = grid.P;
    rep.grid_size = grid.Q.size();
    rep.audit.push_back("reciprocal sum " + rational_str(est.S) + " certified at lcm(1.." +
                        std::to_string(est.certified_N) + ")");
    rep.audit.push_back("divisor grid: bound " + grid.K.get_str() + ", " +
                        std::to_string(grid.Q.size()) + " candidates");
    StepDriver drv(oracle, grid, rep.audit);
    drv.step_multiples_of_six();
    drv.step_two();
    drv.step_odd_coprime_six();
    drv.step_three_and_four();
    drv.step_doubled_odd();
    drv.step_higher_two_power();
    drv.step_odd_multiple_of_three();
    drv.finish(oracle.dimension(), est.S, rep);
    return rep;
}

} // namespace wzeta
