// Error taxonomy shared by the library and the CLI.
//
// Each exception type maps to one CLI exit code so that scripted callers can
// distinguish bad input, refused (degenerate) input, exhausted budgets and
// genuine internal invariant violations.

#pragma once

#include <stdexcept>
#include <string>

namespace wzeta {

// Malformed or rejected input: parse failures, gate failures (not convenient,
// not weighted homogeneous), out-of-range arguments.  CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A face was certified degenerate, so zeta computations are refused.
// CLI exit code 3.
class DegeneracyError : public std::runtime_error {
public:
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap (dimension, brute-force order, enumeration size) would be
// exceeded.  Treated as an input-level refusal.  CLI exit code 2.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// An adaptive computation ran out of its configured budget before reaching a
// certified answer.  CLI exit code 2.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed: divisor-table mismatch, parity certificate
// failure, inconsistent recovery system.  These indicate a bug or corrupted
// data, never a user mistake.  CLI exit code 4.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wzeta
