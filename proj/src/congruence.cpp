#include "wzeta/congruence.hpp"

namespace wzeta {

namespace {

// Merge x = r1 (mod m1) with x = r2 (mod m2), gcd(m1, m2) = 1.
Congruence merge(const Congruence& a, const Congruence& b) {
    BigInt g, p, q;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.modulus.get_mpz_t(),
               b.modulus.get_mpz_t());
    if (g != 1)
        throw InputError("moduli are not pairwise coprime: " + a.modulus.get_str() + " and " +
                         b.modulus.get_str() + " share factor " + g.get_str());
    BigInt m = a.modulus * b.modulus;
    // x = r1 + m1 * p * (r2 - r1) solves both conditions since m1 * p = 1 (mod m2).
    BigInt r = a.residue + a.modulus * p * (b.residue - a.residue);
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return {r, m};
}

} // namespace

Congruence crt_combine(const std::vector<Congruence>& system) {
    Congruence acc{BigInt(0), BigInt(1)};
    for (const auto& c : system) {
        if (c.modulus < 1) throw InputError("congruence modulus must be >= 1");
        Congruence norm = c;
        mpz_mod(norm.residue.get_mpz_t(), norm.residue.get_mpz_t(), norm.modulus.get_mpz_t());
        acc = merge(acc, norm);
    }
    return acc;
}

BigInt crt_solve_min(const std::vector<Congruence>& system) {
    return crt_combine(system).residue;
}

BigInt crt_solve(const std::vector<Congruence>& system) {
    Congruence c = crt_combine(system);
    BigInt x = c.residue;
    while (x < 2) x += c.modulus;
    return x;
}

} // namespace wzeta
