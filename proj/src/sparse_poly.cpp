#include "wzeta/sparse_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include <json.hpp>

namespace wzeta {

Rational SparsePoly::eval(const std::vector<Rational>& point) const {
    if ((int)point.size() != vars) throw InputError("evaluation point has wrong dimension");
    Rational acc = 0;
    for (const auto& t : terms) {
        Rational v = t.coef;
        for (int i = 0; i < vars; ++i)
            for (long e = 0; e < t.exp[i]; ++e) v *= point[i];
        acc += v;
    }
    return acc;
}

SparsePoly SparsePoly::derivative(int i) const {
    std::vector<Term> out;
    for (const auto& t : terms) {
        if (t.exp[i] == 0) continue;
        Term d = t;
        d.coef *= t.exp[i];
        d.exp[i] -= 1;
        out.push_back(std::move(d));
    }
    SparsePoly p;
    p.vars = vars;
    if (!out.empty()) p = make_sparse_poly(vars, std::move(out));
    p.vars = vars;
    return p;
}

long SparsePoly::total_degree(const Term& t) {
    long s = 0;
    for (long e : t.exp) s += e;
    return s;
}

std::string SparsePoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Terms are stored ascending; print leading-variable-first.
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& t = *it;
        Rational c = t.coef;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool constant = SparsePoly::total_degree(t) == 0;
        bool wrote = false;
        if (c != 1 || constant) {
            os << rational_str(c);
            wrote = true;
        }
        for (int i = 0; i < vars; ++i) {
            if (t.exp[i] == 0) continue;
            if (wrote) os << "*";
            os << "x" << (i + 1);
            if (t.exp[i] > 1) os << "^" << t.exp[i];
            wrote = true;
        }
    }
    return os.str();
}

SparsePoly make_sparse_poly(int vars, std::vector<Term> terms) {
    if (vars < 1) throw InputError("polynomial needs at least one variable");
    std::map<std::vector<long>, Rational> merged;
    for (auto& t : terms) {
        if ((int)t.exp.size() != vars) throw InputError("exponent vector has wrong length");
        for (long e : t.exp)
            if (e < 0) throw InputError("negative exponents are not allowed");
        merged[t.exp] += t.coef;
    }
    SparsePoly p;
    p.vars = vars;
    for (auto& [exp, coef] : merged)
        if (coef != 0) p.terms.push_back({exp, coef});
    if (p.terms.empty()) throw InputError("polynomial has no nonzero term");
    return p;
}

namespace {

struct TextParser {
    const std::string& s;
    size_t pos = 0;
    int max_var = 0;

    explicit TextParser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("polynomial parse error at position " + std::to_string(pos) + ": " +
                         what);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    long parse_ulong(const char* what) {
        skip_ws();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail(what);
        long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) fail("number too large");
            ++pos;
        }
        return v;
    }

    Rational parse_number() {
        BigInt num = parse_bigint();
        if (eat('/')) {
            BigInt den = parse_bigint();
            if (den == 0) fail("zero denominator");
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    BigInt parse_bigint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("expected a number");
        return BigInt(s.substr(start, pos - start));
    }

    // variable | number, multiplied into the term under construction.
    void parse_factor(Rational& coef, std::map<int, long>& exps) {
        skip_ws();
        if (pos >= s.size()) fail("expected a factor");
        char c = s[pos];
        if (std::isdigit((unsigned char)c)) {
            coef *= parse_number();
            return;
        }
        int var;
        if (c == 'x') {
            ++pos;
            if (pos < s.size() && std::isdigit((unsigned char)s[pos]))
                var = (int)parse_ulong("variable index");
            else
                var = 1;
            if (var < 1) fail("variable index must be >= 1");
        } else if (c == 'y') {
            ++pos;
            var = 2;
        } else if (c == 'z') {
            ++pos;
            var = 3;
        } else {
            fail("expected a variable or number");
        }
        long e = 1;
        if (eat('^')) e = parse_ulong("exponent");
        exps[var] += e;
        max_var = std::max(max_var, var);
    }

    std::vector<std::pair<Rational, std::map<int, long>>> parse_sum() {
        std::vector<std::pair<Rational, std::map<int, long>>> raw;
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        while (true) {
            Rational coef = negate ? -1 : 1;
            std::map<int, long> exps;
            parse_factor(coef, exps);
            while (eat('*')) parse_factor(coef, exps);
            raw.push_back({coef, exps});
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('-'))
                negate = true;
            else if (eat('+'))
                negate = false;
            else
                fail("expected '+', '-' or end of input");
        }
        return raw;
    }
};

} // namespace

SparsePoly parse_poly_text(const std::string& text, int min_vars) {
    TextParser p(text);
    auto raw = p.parse_sum();
    int vars = std::max(p.max_var, std::max(min_vars, 1));
    std::vector<Term> terms;
    for (auto& [coef, exps] : raw) {
        Term t;
        t.coef = coef;
        t.exp.assign(vars, 0);
        for (auto& [var, e] : exps) t.exp[var - 1] = e;
        terms.push_back(std::move(t));
    }
    return make_sparse_poly(vars, std::move(terms));
}

SparsePoly parse_poly_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw InputError("polynomial JSON needs \"vars\" and \"terms\"");
    if (!j["vars"].is_number_integer()) throw InputError("\"vars\" must be an integer");
    int vars = j["vars"].get<int>();
    if (!j["terms"].is_array()) throw InputError("\"terms\" must be an array");
    std::vector<Term> terms;
    for (const auto& jt : j["terms"]) {
        if (!jt.is_object() || !jt.contains("exp") || !jt.contains("coef"))
            throw InputError("each term needs \"exp\" and \"coef\"");
        Term t;
        for (const auto& e : jt["exp"]) {
            if (!e.is_number_integer()) throw InputError("exponents must be integers");
            t.exp.push_back(e.get<long>());
        }
        const auto& jc = jt["coef"];
        if (jc.is_number_integer())
            t.coef = Rational(jc.get<long>());
        else if (jc.is_string())
            t.coef = rational_parse(jc.get<std::string>());
        else
            throw InputError("coefficients must be integers or \"p/q\" strings");
        terms.push_back(std::move(t));
    }
    return make_sparse_poly(vars, std::move(terms));
}

} // namespace wzeta
