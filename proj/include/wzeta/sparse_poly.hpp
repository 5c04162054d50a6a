// Sparse multivariate polynomials with rational coefficients.
#pragma once

#include <string>
#include <vector>

#include "wzeta/rational.hpp"

namespace wzeta {

// One monomial coef * x1^exp[0] * ... * xd^exp[d-1].
struct Term {
    std::vector<long> exp;
    Rational coef;
};

// Polynomial over x1..xd, kept with terms sorted by exponent vector and
// no zero coefficients.  Use make_sparse_poly to build a validated value.
struct SparsePoly {
    int vars = 0;
    std::vector<Term> terms;

    // Exact evaluation at a rational point (size must equal vars).
    Rational eval(const std::vector<Rational>& point) const;

    // Partial derivative with respect to variable index i (0-based).
    SparsePoly derivative(int i) const;

    // Total degree of a single term.
    static long total_degree(const Term& t);

    // Canonical human-readable form, e.g. "x1^2 + 2*x1*x2 - 1/3*x2^3".
    std::string str() const;
};

// Validates and normalizes raw terms: exponents nonnegative and of length
// vars, like terms merged, zero coefficients dropped.  Throws InputError
// when vars < 1, no nonzero term remains, or an exponent is negative.
SparsePoly make_sparse_poly(int vars, std::vector<Term> terms);

// Parses the textual grammar: terms joined by + or -, each a '*'-separated
// product of rational literals and powers xK^E (K >= 1).  x, y, z are
// accepted as aliases for x1, x2, x3.  Whitespace is free.  The variable
// count is the largest index mentioned unless min_vars is larger.
SparsePoly parse_poly_text(const std::string& text, int min_vars = 0);

// Parses the JSON object {"vars": d, "terms": [{"exp": [..], "coef": "p/q"}]}.
// Coefficients may be JSON integers or strings in p/q form.
SparsePoly parse_poly_json(const std::string& json_text);

} // namespace wzeta
