#include "wzeta/rational.hpp"

#include <cctype>

namespace wzeta {

Rational rational_parse(const std::string& text) {
    size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string body = text.substr(begin, end - begin);
    if (body.empty()) throw InputError("empty rational literal");
    for (size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                  ((c == '-' || c == '+') && (i == 0 || body[i - 1] == '/'));
        if (!ok) throw InputError("bad rational literal '" + text + "'");
    }
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), body.c_str(), 10) != 0)
        throw InputError("bad rational literal '" + text + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw InputError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

} // namespace wzeta
