// Small exact-rational linear algebra helpers.
#pragma once

#include <vector>

#include "wzeta/rational.hpp"

namespace wzeta {

// Basis of { v in Q^dim : row . v = 0 for every row }.  Rows may be
// empty, in which case the standard basis comes back.
std::vector<std::vector<Rational>> nullspace_rational(std::vector<std::vector<Rational>> rows,
                                                      int dim);

} // namespace wzeta
