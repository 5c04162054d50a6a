#include "wzeta/primes.hpp"

namespace wzeta {

std::vector<long> primes_up_to(long limit) {
    std::vector<long> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
    for (long p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (long q = p * p; q >= 0 && q <= limit; q += p) composite[q] = true;
    }
    return out;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::vector<std::pair<long, long>> factorize(long n) {
    if (n < 1) throw InputError("factorize expects n >= 1");
    std::vector<std::pair<long, long>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        long e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

} // namespace wzeta
