// Chinese-remainder solving for systems of congruences with big moduli.
#pragma once

#include <vector>

#include "wzeta/rational.hpp"

namespace wzeta {

// One condition x = residue (mod modulus), modulus >= 1.
struct Congruence {
    BigInt residue;
    BigInt modulus;
};

// Merges the system into a single congruence x = r (mod M) with
// 0 <= r < M and M the product of the moduli.  The moduli must be
// pairwise coprime; InputError otherwise, or when a modulus is < 1.
Congruence crt_combine(const std::vector<Congruence>& system);

// Least nonnegative solution of the system.
BigInt crt_solve_min(const std::vector<Congruence>& system);

// Least solution that is >= 2.  Recovery windows probe n-1 and n+1 style
// neighbours, so solutions 0 and 1 are stepped past.
BigInt crt_solve(const std::vector<Congruence>& system);

} // namespace wzeta
