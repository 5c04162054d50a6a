#include "wzeta/egyptian.hpp"

namespace wzeta {

namespace {

struct Search {
    unsigned long budget;
    unsigned long used = 0;
    std::vector<BigInt> stack;
    std::vector<std::vector<BigInt>> found;

    void run(const Rational& rest, long parts, const BigInt& min_q) {
        if (++used > budget)
            throw CapacityError("egyptian solution search exceeded node budget");
        if (parts == 0) {
            if (rest == 0) found.push_back(stack);
            return;
        }
        if (rest <= 0) return;
        const BigInt& num = rest.get_num();
        const BigInt& den = rest.get_den();
        // 1/q <= rest forces q >= den/num; parts/q >= rest forces
        // q <= parts*den/num.
        BigInt lo;
        mpz_cdiv_q(lo.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
        if (lo < min_q) lo = min_q;
        BigInt hi = floor_div(parts * den, num);
        for (BigInt q = lo; q <= hi; ++q) {
            stack.push_back(q);
            run(rest - Rational(BigInt(1), q), parts - 1, q);
            stack.pop_back();
        }
    }
};

} // namespace

std::vector<std::vector<BigInt>> egyptian_solutions(const Rational& target, long parts,
                                                    unsigned long node_budget) {
    if (parts < 1) throw InputError("egyptian solution search needs at least one part");
    if (target <= 0 || target * 2 > parts) return {};
    Search s{node_budget};
    s.run(target, parts, BigInt(2));
    return s.found;
}

} // namespace wzeta
