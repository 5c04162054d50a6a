// Serialization of the analysis, series, recovery and comparison results
// to deterministic JSON (insertion-ordered keys, big integers as decimal
// strings) and to plain text.
#pragma once

#include <json.hpp>

#include "wzeta/nondegeneracy.hpp"
#include "wzeta/recovery.hpp"
#include "wzeta/zeta.hpp"

namespace wzeta {

using ordered_json = nlohmann::ordered_json;

// "1 - L^-a T^b" for the shared denominator of the rational form.
std::string denominator_str(const RationalForm& rf);

// Human-readable coefficient, e.g. "-L^-3" or
// "L^-5 * (F - Z)[diag[(2,+1),(3,+1)]] - L^-5".
std::string coeff_str(const CoeffDescriptor& c);

ordered_json profile_json(const WeightProfile& p);
ordered_json nondeg_json(const NondegeneracyReport& r);
// nd may be null when the input failed the series gate.
ordered_json analyze_json(const WeightProfile& p, const NondegeneracyReport* nd);
ordered_json coeff_json(const CoeffDescriptor& c);
ordered_json zeta_json(const WeightProfile& p, const std::vector<CoeffDescriptor>& coeffs,
                       const RationalForm* rf, const std::string& note);
ordered_json recovery_json(const RecoveryReport& r);
ordered_json compare_json(const CompareResult& c, const RecoveryReport& left,
                          const RecoveryReport& right);

std::string analyze_text(const WeightProfile& p, const NondegeneracyReport* nd);
std::string zeta_text(const WeightProfile& p, const std::vector<CoeffDescriptor>& coeffs,
                      const RationalForm* rf, const std::string& note);
std::string recovery_text(const RecoveryReport& r);
std::string compare_text(const CompareResult& c, const RecoveryReport& left,
                         const RecoveryReport& right);

} // namespace wzeta
