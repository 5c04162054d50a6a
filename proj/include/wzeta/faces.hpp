// Compact faces of the Newton polyhedron of a convenient weighted
// homogeneous polynomial, and lattice-point series over their dual cones.
#pragma once

#include <map>

#include "wzeta/lrational.hpp"
#include "wzeta/profile.hpp"

namespace wzeta {

// The compact face spanned by the pure vertices of the axes in `axes`.
struct FaceDescriptor {
    std::vector<int> axes;                   // 0-based, ascending
    std::uint32_t mask = 0;                  // bit i set iff axis i in axes
    std::vector<std::vector<long>> vertices; // delta[i] * e_i for each axis
    SparsePoly restriction;                  // terms supported inside axes
    BigInt delta_face = 1;                   // lcm of delta over axes
};

// All 2^d - 1 compact faces, ordered by ascending mask.  Pre: convenient
// weighted homogeneous profile; d > 20 throws CapacityError.
std::vector<FaceDescriptor> compact_faces(const WeightProfile& p);

// Restriction of the polynomial to the axes of `mask` (terms whose
// support lies inside it).  Never empty for a convenient polynomial.
SparsePoly face_restriction(const WeightProfile& p, std::uint32_t mask);

// min_t k . exp_t over the terms of f, together with the exponent
// vectors attaining it.  Pre: k has size f.vars.
struct Trace {
    BigInt value;
    std::vector<std::vector<long>> minimizers;
    std::uint32_t support_mask = 0; // union of minimizer supports
};
Trace support_and_trace(const SparsePoly& f, const std::vector<long>& k);

// Lattice-point series, coefficientwise: for each face F and order
// m <= m_max, the sum of L^-|k| over integer points k >= 1 whose trace
// face is F and whose minimum value is m.  Tail directions are folded in
// exactly with geometric sums, so the result is the true full-cone value.
// Caps: m_max <= 500 and d <= 4 (CapacityError beyond).
class BruteSeries {
  public:
    BruteSeries(const WeightProfile& p, long m_max);

    // Zero when no lattice point hits the pair.
    LRational at(std::uint32_t face_mask, long m) const;
    long order() const { return m_max_; }

  private:
    long m_max_;
    std::map<std::pair<std::uint32_t, long>, LRational> table_;
};

} // namespace wzeta
