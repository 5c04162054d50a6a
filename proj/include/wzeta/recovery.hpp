// Reconstruction of the exponent multiset (hence the weights) from
// coefficient data alone, queried through a ZetaOracle.
#pragma once

#include "wzeta/congruence.hpp"
#include "wzeta/oracle.hpp"

namespace wzeta {

// Candidate divisor grid: P are the primes up to K, gamma[i] the largest
// power with P[i]^gamma[i] <= K, and Q every product of such prime
// powers, ascending.  Any exponent whose prime powers are bounded by K
// lies in Q.
struct DivisorGrid {
    BigInt K;
    std::vector<long> P;
    std::vector<long> gamma;
    std::vector<BigInt> Q;
};

// Grid from the combinatorial bound: K is the largest value occurring in
// any multiset of d integers >= 2 whose reciprocals sum to S.  InputError
// when no such multiset exists.  Feasible for small S, d only.
DivisorGrid exponent_grid(const Rational& S, int d, unsigned long node_budget = 1ul << 22,
                          std::size_t q_cap = 50000);

// Grid for exponents all of whose prime-power factors are <= K.
DivisorGrid grid_from_prime_power_bound(long K, std::size_t q_cap = 50000);

struct ReciprocalSumEstimate {
    Rational S;
    long certified_N = 0;
};

// Doubling scan N = 2, 4, 8, ...: at M = lcm(1..N), when M-1 and M+1 are
// both pure and the degree step across them equals the dimension, every
// exponent divides M; then S = s(M+1)/M exactly, and every prime power
// inside an exponent is at most N.  BudgetError when N exceeds max_n
// without certifying.
ReciprocalSumEstimate estimate_reciprocal_sum(const ZetaOracle& oracle, long max_n = 1 << 16);

// One expected row of a witness table: within Q, the divisors of
// n + offset must be exactly the divisors of `value`.
struct WindowRow {
    long offset;
    BigInt value;
};

// Weaker row: `forced` must divide n + offset.
struct GuaranteeRow {
    long offset;
    BigInt forced;
};

// Solves the congruences and verifies every row against the grid;
// InternalError if a row fails (the tables are theorems, not heuristics).
BigInt choose_witness(const std::vector<Congruence>& congruences, const DivisorGrid& grid,
                      const std::vector<WindowRow>& rows,
                      const std::vector<GuaranteeRow>& guarantees);

struct RecoveryReport {
    Rational S;
    long certified_N = 0;
    BigInt K;
    std::vector<long> P;
    std::size_t grid_size = 0;
    std::map<BigInt, BigInt> mult;  // exponent -> multiplicity, nonzero entries
    std::vector<BigInt> delta;      // exponent multiset, ascending
    std::vector<BigInt> weights;    // lcm(delta)/delta_i, descending
    BigInt m_w = 0;                 // lcm(delta)
    bool ok = false;
    std::vector<std::string> audit; // one line per measured quantity
};

// Full reconstruction.  The oracle is the only source of data.
RecoveryReport run_recovery(const ZetaOracle& oracle, long max_n = 1 << 16,
                            std::size_t q_cap = 50000);

// lcm(delta)/delta per multiset entry, descending.
std::vector<BigInt> weights_from_mults(const std::map<BigInt, BigInt>& mult);

// Comparison of two recovered divisor tables.  Separated means the
// coefficient data distinguishes the inputs; the witness is the smallest
// exponent whose multiplicity differs.
struct CompareResult {
    enum class Verdict { separated, weights_equal, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    BigInt witness_q = 0;
    BigInt mult_left = 0, mult_right = 0;
};
CompareResult compare_recoveries(const RecoveryReport& left, const RecoveryReport& right);

} // namespace wzeta
