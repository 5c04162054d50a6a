// Enumeration of Egyptian-fraction expansions with a fixed number of parts.
#pragma once

#include <vector>

#include "wzeta/rational.hpp"

namespace wzeta {

// All multisets {q_1 <= ... <= q_parts} of integers q_i >= 2 with
// sum 1/q_i = target.  Solutions are returned sorted ascending, in
// lexicographic order.  Targets outside (0, parts/2] admit no such
// multiset and yield an empty list.  The search walks at most
// node_budget recursion nodes and throws CapacityError beyond that;
// InputError for parts < 1.
std::vector<std::vector<BigInt>> egyptian_solutions(const Rational& target, long parts,
                                                    unsigned long node_budget = 1ul << 22);

} // namespace wzeta
