// Command line front end: analyze, zeta, recover, compare, selftest.
#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "wzeta/oracle.hpp"
#include "wzeta/report_json.hpp"
#include "wzeta/selftest.hpp"

namespace {

using namespace wzeta;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline expression, or a file holding either an expression or the JSON
// object form (detected by a leading '{').
SparsePoly load_poly(const std::string& input, const std::string& poly) {
    if (!input.empty() && !poly.empty())
        throw InputError("give either --input or --poly, not both");
    if (input.empty() && poly.empty())
        throw InputError("no polynomial given; use --input FILE or --poly EXPR");
    const std::string text = input.empty() ? poly : slurp(input);
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return parse_poly_json(text);
        break;
    }
    return parse_poly_text(text);
}

void emit(const ordered_json& j, const std::string& text, const std::string& format) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_analyze(const std::string& input, const std::string& poly, const std::string& format) {
    const WeightProfile p = analyze_polynomial(load_poly(input, poly));
    const bool ready = p.convenient && p.weighted_homogeneous;
    std::optional<NondegeneracyReport> nd;
    if (ready) nd = check_nondegenerate(p, compact_faces(p));
    emit(analyze_json(p, nd ? &*nd : nullptr), analyze_text(p, nd ? &*nd : nullptr), format);
    if (!ready) return 2;
    if (nd->any_certified_degenerate) return 3;
    return 0;
}

int cmd_zeta(const std::string& input, const std::string& poly, long order,
             const std::string& format) {
    const WeightProfile p = analyze_polynomial(load_poly(input, poly));
    require_series_ready(p);
    require_not_degenerate(check_nondegenerate(p, compact_faces(p)));
    if (!p.singular) {
        const std::string note =
            "the polynomial is non-singular; every coefficient of the modified series vanishes";
        emit(zeta_json(p, {}, nullptr, note), zeta_text(p, {}, nullptr, note), format);
        return 0;
    }
    const long n = order > 0 ? order : 2 * to_long_checked(p.m_w, "degree");
    if (n > 100000)
        throw CapacityError("order " + std::to_string(n) + " is too large; cap is 100000");
    std::vector<CoeffDescriptor> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n));
    for (long m = 1; m <= n; ++m) coeffs.push_back(modified_coeff(p, m));
    const RationalForm rf = rational_form(p);
    emit(zeta_json(p, coeffs, &rf, ""), zeta_text(p, coeffs, &rf, ""), format);
    return 0;
}

RecoveryReport recover_one(const std::string& input, const std::string& poly, long budget,
                           std::size_t caps) {
    const WeightProfile p = analyze_polynomial(load_poly(input, poly));
    require_series_ready(p);
    require_not_degenerate(check_nondegenerate(p, compact_faces(p)));
    const auto oracle = oracle_from_profile(p);
    return run_recovery(*oracle, budget, caps);
}

int cmd_recover(const std::string& input, const std::string& poly, long budget,
                std::size_t caps, const std::string& format) {
    const RecoveryReport rep = recover_one(input, poly, budget, caps);
    emit(recovery_json(rep), recovery_text(rep), format);
    return rep.ok ? 0 : 4;
}

int cmd_compare(const std::vector<std::string>& files, const std::string& poly_a,
                const std::string& poly_b, long budget, std::size_t caps,
                const std::string& format) {
    std::string in_a, in_b;
    if (!files.empty()) in_a = files[0];
    if (files.size() > 1) in_b = files[1];
    const RecoveryReport left = recover_one(in_a, poly_a, budget, caps);
    const RecoveryReport right = recover_one(in_b, poly_b, budget, caps);
    const CompareResult res = compare_recoveries(left, right);
    emit(compare_json(res, left, right), compare_text(res, left, right), format);
    return 0;
}

int cmd_selftest(bool corrupt) {
    const SelfTestResult res = run_selftest(corrupt);
    for (const std::string& line : res.lines) std::cout << line << "\n";
    std::cout << res.passed << " passed, " << res.failed << " failed\n";
    if (!res.ok())
        throw InternalError("self test failed " + std::to_string(res.failed) + " check(s)");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton-polyhedron series of weighted homogeneous polynomials and "
                 "weight recovery from coefficient data"};
    app.require_subcommand(1);

    std::string input, poly, format = "text";
    std::string poly_a, poly_b;
    std::vector<std::string> files;
    long order = 0;
    long budget = 1 << 16;
    std::size_t caps = 50000;
    bool corrupt = false;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--input,-i", input, "input file (expression or JSON)");
        sub->add_option("--poly", poly, "inline polynomial expression");
        sub->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "weights, exponents and face checks");
    add_io(analyze);

    CLI::App* zeta = app.add_subcommand("zeta", "modified series coefficients and rational form");
    add_io(zeta);
    zeta->add_option("--order", order, "orders to print (default: twice the degree)");

    CLI::App* recover =
        app.add_subcommand("recover", "reconstruct exponents from coefficient data");
    add_io(recover);
    recover->add_option("--budget", budget, "certification scan bound (default 65536)");
    recover->add_option("--caps", caps, "divisor grid size cap (default 50000)");

    CLI::App* compare =
        app.add_subcommand("compare", "decide whether coefficient data separates two inputs");
    compare->add_option("inputs", files, "up to two input files")->expected(0, 2);
    compare->add_option("--poly-a", poly_a, "first polynomial, inline");
    compare->add_option("--poly-b", poly_b, "second polynomial, inline");
    compare->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    compare->add_option("--budget", budget, "certification scan bound (default 65536)");
    compare->add_option("--caps", caps, "divisor grid size cap (default 50000)");

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in check battery");
    selftest->add_flag("--corrupt", corrupt,
                       "corrupt the background series to exercise failure detection");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(input, poly, format);
        if (zeta->parsed()) return cmd_zeta(input, poly, order, format);
        if (recover->parsed()) return cmd_recover(input, poly, budget, caps, format);
        if (compare->parsed()) return cmd_compare(files, poly_a, poly_b, budget, caps, format);
        if (selftest->parsed()) return cmd_selftest(corrupt);
        throw wzeta::InputError("no command given");
    } catch (const wzeta::DegeneracyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const wzeta::InternalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const wzeta::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wzeta::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wzeta::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
