#include "wzeta/report_json.hpp"

#include <sstream>

namespace wzeta {

namespace {

std::string big(const BigInt& x) { return x.get_str(); }

ordered_json big_list(const std::vector<BigInt>& xs) {
    ordered_json a = ordered_json::array();
    for (const BigInt& x : xs) a.push_back(big(x));
    return a;
}

std::string joined(const std::vector<BigInt>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += " ";
        s += big(xs[i]);
    }
    return s;
}

std::string lpow_str(const BigInt& s) {
    if (s == 0) return "1";
    return "L^-" + big(s);
}

const char* method_str(NondegMethod m) {
    switch (m) {
    case NondegMethod::monomial: return "monomial";
    case NondegMethod::diagonal: return "diagonal";
    case NondegMethod::quadratic_kernel: return "quadratic_kernel";
    case NondegMethod::randomized: return "randomized";
    }
    return "?";
}

const char* status_str(NondegStatus s) {
    switch (s) {
    case NondegStatus::certified_ok: return "certified_ok";
    case NondegStatus::certified_degenerate: return "certified_degenerate";
    case NondegStatus::unknown: return "unknown";
    }
    return "?";
}

const char* exactness_str(ChiTriple::Exactness e) {
    switch (e) {
    case ChiTriple::Exactness::exact: return "exact";
    case ChiTriple::Exactness::mod2: return "mod2";
    case ChiTriple::Exactness::unknown: return "unknown";
    }
    return "?";
}

const char* verdict_str(CompareResult::Verdict v) {
    switch (v) {
    case CompareResult::Verdict::separated: return "separated";
    case CompareResult::Verdict::weights_equal: return "weights_equal";
    case CompareResult::Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

} // namespace

std::string denominator_str(const RationalForm& rf) {
    return "1 - L^-" + big(rf.denom_lshift) + " T^" + big(rf.denom_texp);
}

std::string coeff_str(const CoeffDescriptor& c) {
    const std::string lp = lpow_str(c.lshift);
    if (c.pure) return "-" + lp;
    if (c.lshift == 0) return "(F - Z)[" + c.token.id() + "] - 1";
    return lp + " * (F - Z)[" + c.token.id() + "] - " + lp;
}

ordered_json profile_json(const WeightProfile& p) {
    ordered_json j;
    j["polynomial"] = p.poly.str();
    j["vars"] = p.d;
    j["convenient"] = p.convenient;
    j["weighted_homogeneous"] = p.weighted_homogeneous;
    j["singular"] = p.singular;
    j["delta"] = p.delta;
    if (p.weighted_homogeneous) {
        j["weights"] = big_list(p.w);
        j["degree"] = big(p.m_w);
        j["weight_sum"] = big(p.abs_w);
    }
    if (p.convenient) j["reciprocal_sum"] = rational_str(reciprocal_sum(p));
    return j;
}

ordered_json nondeg_json(const NondegeneracyReport& r) {
    ordered_json j;
    j["all_certified_ok"] = r.all_certified_ok;
    j["any_certified_degenerate"] = r.any_certified_degenerate;
    ordered_json faces = ordered_json::array();
    for (const FaceCheck& f : r.faces) {
        ordered_json e;
        ordered_json axes = ordered_json::array();
        for (int i = 0; i < 32; ++i)
            if (f.mask >> i & 1u) axes.push_back(i + 1);
        e["axes"] = axes;
        e["method"] = method_str(f.method);
        e["status"] = status_str(f.status);
        if (!f.witness.empty()) {
            ordered_json w = ordered_json::array();
            for (const Rational& x : f.witness) w.push_back(rational_str(x));
            e["witness"] = w;
        }
        faces.push_back(e);
    }
    j["faces"] = faces;
    return j;
}

ordered_json analyze_json(const WeightProfile& p, const NondegeneracyReport* nd) {
    ordered_json j;
    j["kind"] = "analyze";
    const ordered_json prof = profile_json(p);
    for (const auto& [k, v] : prof.items()) j[k] = v;
    j["nondegeneracy"] = nd ? nondeg_json(*nd) : ordered_json(nullptr);
    return j;
}

ordered_json coeff_json(const CoeffDescriptor& c) {
    ordered_json j;
    j["m"] = big(c.m);
    j["lshift"] = big(c.lshift);
    j["pure"] = c.pure;
    j["class"] = coeff_str(c);
    if (!c.pure) {
        j["token"] = c.token.id();
        ordered_json chi;
        chi["fplus"] = c.chi.fplus;
        chi["fminus"] = c.chi.fminus;
        chi["bar"] = c.chi.bar;
        chi["exactness"] = exactness_str(c.chi.how);
        j["chi"] = chi;
    }
    return j;
}

ordered_json zeta_json(const WeightProfile& p, const std::vector<CoeffDescriptor>& coeffs,
                       const RationalForm* rf, const std::string& note) {
    ordered_json j;
    j["kind"] = "zeta";
    j["polynomial"] = p.poly.str();
    j["vars"] = p.d;
    j["delta"] = p.delta;
    j["weights"] = big_list(p.w);
    j["degree"] = big(p.m_w);
    if (!note.empty()) j["note"] = note;
    ordered_json cs = ordered_json::array();
    for (const CoeffDescriptor& c : coeffs) cs.push_back(coeff_json(c));
    j["coefficients"] = cs;
    if (rf) {
        ordered_json r;
        r["denominator"] = denominator_str(*rf);
        ordered_json terms = ordered_json::array();
        for (const RationalForm::NumTerm& t : rf->terms) {
            ordered_json e;
            e["mask"] = t.mask;
            e["texp"] = big(t.texp);
            e["lshift"] = big(t.lshift);
            terms.push_back(e);
        }
        r["terms"] = terms;
        j["rational_form"] = r;
    } else {
        j["rational_form"] = nullptr;
    }
    return j;
}

ordered_json recovery_json(const RecoveryReport& r) {
    ordered_json j;
    j["kind"] = "recovery";
    j["ok"] = r.ok;
    j["reciprocal_sum"] = rational_str(r.S);
    j["certified_N"] = r.certified_N;
    j["prime_power_bound"] = big(r.K);
    j["primes"] = r.P;
    j["grid_size"] = r.grid_size;
    ordered_json ms = ordered_json::array();
    for (const auto& [q, v] : r.mult) {
        ordered_json e;
        e["exponent"] = big(q);
        e["count"] = big(v);
        ms.push_back(e);
    }
    j["multiplicities"] = ms;
    j["exponents"] = big_list(r.delta);
    j["weights"] = big_list(r.weights);
    j["degree"] = big(r.m_w);
    j["audit"] = r.audit;
    return j;
}

ordered_json compare_json(const CompareResult& c, const RecoveryReport& left,
                          const RecoveryReport& right) {
    ordered_json j;
    j["kind"] = "compare";
    j["verdict"] = verdict_str(c.verdict);
    if (c.verdict == CompareResult::Verdict::separated) {
        ordered_json w;
        w["exponent"] = big(c.witness_q);
        w["left_count"] = big(c.mult_left);
        w["right_count"] = big(c.mult_right);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    auto side = [](const RecoveryReport& r) {
        ordered_json s;
        s["ok"] = r.ok;
        s["exponents"] = big_list(r.delta);
        s["weights"] = big_list(r.weights);
        return s;
    };
    j["left"] = side(left);
    j["right"] = side(right);
    return j;
}

std::string analyze_text(const WeightProfile& p, const NondegeneracyReport* nd) {
    std::ostringstream out;
    out << "polynomial: " << p.poly.str() << "\n";
    out << "vars: " << p.d << "\n";
    out << "convenient: " << (p.convenient ? "yes" : "no") << "\n";
    out << "weighted homogeneous: " << (p.weighted_homogeneous ? "yes" : "no") << "\n";
    out << "singular: " << (p.singular ? "yes" : "no") << "\n";
    out << "delta:";
    for (long d : p.delta) out << " " << d;
    out << "\n";
    if (p.weighted_homogeneous) {
        out << "weights: " << joined(p.w) << "\n";
        out << "degree: " << big(p.m_w) << "\n";
        out << "weight sum: " << big(p.abs_w) << "\n";
    }
    if (p.convenient) out << "reciprocal sum: " << rational_str(reciprocal_sum(p)) << "\n";
    if (nd) {
        if (nd->all_certified_ok) {
            out << "nondegeneracy: all " << nd->faces.size() << " faces certified\n";
        } else {
            for (const FaceCheck& f : nd->faces) {
                if (f.status == NondegStatus::certified_ok) continue;
                out << "nondegeneracy: face mask " << f.mask << " " << status_str(f.status);
                if (!f.witness.empty()) {
                    out << " at (";
                    for (std::size_t i = 0; i < f.witness.size(); ++i) {
                        if (i) out << ", ";
                        out << rational_str(f.witness[i]);
                    }
                    out << ")";
                }
                out << "\n";
            }
        }
    }
    return out.str();
}

std::string zeta_text(const WeightProfile& p, const std::vector<CoeffDescriptor>& coeffs,
                      const RationalForm* rf, const std::string& note) {
    std::ostringstream out;
    out << "polynomial: " << p.poly.str() << "\n";
    out << "weights: " << joined(p.w) << "  degree: " << big(p.m_w) << "\n";
    if (!note.empty()) out << "note: " << note << "\n";
    for (const CoeffDescriptor& c : coeffs) {
        out << "a_" << big(c.m) << " = " << coeff_str(c);
        if (!c.pure)
            out << "  [chi +1: " << c.chi.fplus << ", -1: " << c.chi.fminus
                << ", bar: " << c.chi.bar << ", " << exactness_str(c.chi.how) << "]";
        out << "\n";
    }
    if (rf) out << "denominator: " << denominator_str(*rf) << "\n";
    return out.str();
}

std::string recovery_text(const RecoveryReport& r) {
    std::ostringstream out;
    out << "reciprocal sum: " << rational_str(r.S) << " (certified at lcm(1.."
        << r.certified_N << "))\n";
    out << "grid: bound " << big(r.K) << ", " << r.grid_size << " candidates\n";
    for (const auto& [q, v] : r.mult)
        out << "mult(" << big(q) << ") = " << big(v) << "\n";
    if (r.ok) {
        out << "exponents: " << joined(r.delta) << "\n";
        out << "weights: " << joined(r.weights) << "\n";
        out << "degree: " << big(r.m_w) << "\n";
    }
    out << "status: " << (r.ok ? "ok" : "failed") << "\n";
    if (!r.ok)
        for (const std::string& line : r.audit) out << "  " << line << "\n";
    return out.str();
}

std::string compare_text(const CompareResult& c, const RecoveryReport& left,
                         const RecoveryReport& right) {
    std::ostringstream out;
    out << "verdict: " << verdict_str(c.verdict) << "\n";
    if (c.verdict == CompareResult::Verdict::separated)
        out << "witness exponent: " << big(c.witness_q) << " (left " << big(c.mult_left)
            << ", right " << big(c.mult_right) << ")\n";
    out << "left exponents: " << joined(left.delta) << " ; weights: " << joined(left.weights)
        << "\n";
    out << "right exponents: " << joined(right.delta)
        << " ; weights: " << joined(right.weights) << "\n";
    return out.str();
}

} // namespace wzeta
