// Fast end-to-end checks over built-in fixtures, shared by the CLI.
#pragma once

#include <string>
#include <vector>

namespace wzeta {

struct SelfTestResult {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> lines; // one [PASS]/[FAIL] line per check
    bool ok() const { return failed == 0; }
};

// With corrupt_background set, the inversion-identity check runs against
// a sign-flipped background; the identity then breaks at order 1 and the
// check honestly fails, which is the expected way to exercise the
// internal-error exit path.
SelfTestResult run_selftest(bool corrupt_background = false);

} // namespace wzeta
