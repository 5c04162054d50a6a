// Face-by-face critical point checks in the torus.
#pragma once

#include "wzeta/faces.hpp"

namespace wzeta {

enum class NondegMethod { monomial, diagonal, quadratic_kernel, randomized };
enum class NondegStatus { certified_ok, certified_degenerate, unknown };

struct FaceCheck {
    std::uint32_t mask = 0;
    NondegMethod method = NondegMethod::randomized;
    NondegStatus status = NondegStatus::unknown;
    // Exact point with nonzero coordinates on the face axes at which all
    // partial derivatives of the restriction vanish (degenerate case).
    std::vector<Rational> witness;
};

struct NondegeneracyReport {
    std::vector<FaceCheck> faces;
    bool any_certified_degenerate = false;
    bool all_certified_ok = true;
};

// Checks every compact face.  Single monomials and sums of pure powers
// are certified directly; quadratic forms via the exact kernel; anything
// else is probed at `samples` random rational points per face and left
// `unknown` unless an exact critical point turns up.
NondegeneracyReport check_nondegenerate(const WeightProfile& p,
                                        const std::vector<FaceDescriptor>& faces,
                                        unsigned seed = 0x5eed1234u, int samples = 40);

// Throws DegeneracyError naming the witness when the report certifies a
// degenerate face.
void require_not_degenerate(const NondegeneracyReport& report);

} // namespace wzeta
