#include "wzeta/nondegeneracy.hpp"

#include <random>
#include <sstream>

#include "wzeta/chi.hpp"
#include "wzeta/linalg.hpp"

namespace wzeta {

namespace {

bool all_pure(const SparsePoly& f) {
    for (const auto& t : f.terms) {
        int nz = 0;
        for (long e : t.exp)
            if (e != 0) ++nz;
        if (nz > 1) return false;
    }
    return true;
}

bool all_degree_two(const SparsePoly& f) {
    for (const auto& t : f.terms)
        if (SparsePoly::total_degree(t) != 2) return false;
    return true;
}

// Critical points of a quadratic form in the torus are exactly the
// kernel vectors with every coordinate nonzero.  A subspace avoids all
// coordinate hyperplanes iff it is contained in none of them.
FaceCheck quadratic_check(const FaceDescriptor& face) {
    FaceCheck c;
    c.mask = face.mask;
    c.method = NondegMethod::quadratic_kernel;
    auto g = quadratic_gram(face.restriction, face.axes);
    int n = (int)g.size();
    auto kernel = nullspace_rational(g, n);
    if (kernel.empty()) {
        c.status = NondegStatus::certified_ok;
        return c;
    }
    for (int i = 0; i < n; ++i) {
        bool inside_hyperplane = true;
        for (const auto& b : kernel)
            if (b[i] != 0) inside_hyperplane = false;
        if (inside_hyperplane) {
            c.status = NondegStatus::certified_ok;
            return c;
        }
    }
    // Kernel escapes every hyperplane; a combination sum t^j b_j has all
    // coordinates nonzero for all but finitely many t.
    for (long t = 1; t < 200; ++t) {
        std::vector<Rational> v(n, Rational(0));
        Rational scale = 1;
        for (const auto& b : kernel) {
            for (int i = 0; i < n; ++i) v[i] += scale * b[i];
            scale *= t;
        }
        bool nonzero = true;
        for (const auto& x : v)
            if (x == 0) nonzero = false;
        if (nonzero) {
            c.status = NondegStatus::certified_degenerate;
            c.witness = std::move(v);
            return c;
        }
    }
    throw InternalError("failed to realize a kernel vector off the hyperplanes");
}

FaceCheck randomized_check(const FaceDescriptor& face, std::mt19937& rng, int samples) {
    FaceCheck c;
    c.mask = face.mask;
    c.method = NondegMethod::randomized;
    c.status = NondegStatus::unknown;
    std::vector<SparsePoly> partials;
    for (int i : face.axes) partials.push_back(face.restriction.derivative(i));
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    int vars = face.restriction.vars;
    for (int s = 0; s < samples; ++s) {
        std::vector<Rational> x(vars, Rational(1));
        for (int i : face.axes) {
            int p = 0;
            while (p == 0) p = num(rng);
            x[i] = Rational(p, den(rng));
        }
        bool critical = true;
        for (const auto& dp : partials) {
            if (dp.terms.empty()) continue;
            if (dp.eval(x) != 0) {
                critical = false;
                break;
            }
        }
        if (critical) {
            c.status = NondegStatus::certified_degenerate;
            c.witness.clear();
            for (int i : face.axes) c.witness.push_back(x[i]);
            return c;
        }
    }
    return c;
}

} // namespace

NondegeneracyReport check_nondegenerate(const WeightProfile& p,
                                        const std::vector<FaceDescriptor>& faces, unsigned seed,
                                        int samples) {
    NondegeneracyReport report;
    std::mt19937 rng(seed);
    for (const auto& face : faces) {
        FaceCheck c;
        if (face.restriction.terms.size() == 1) {
            c.mask = face.mask;
            c.method = NondegMethod::monomial;
            c.status = NondegStatus::certified_ok;
        } else if (all_pure(face.restriction)) {
            c.mask = face.mask;
            c.method = NondegMethod::diagonal;
            c.status = NondegStatus::certified_ok;
        } else if (all_degree_two(face.restriction)) {
            c = quadratic_check(face);
        } else {
            c = randomized_check(face, rng, samples);
        }
        if (c.status == NondegStatus::certified_degenerate)
            report.any_certified_degenerate = true;
        if (c.status != NondegStatus::certified_ok) report.all_certified_ok = false;
        report.faces.push_back(std::move(c));
    }
    return report;
}

void require_not_degenerate(const NondegeneracyReport& report) {
    for (const auto& c : report.faces) {
        if (c.status != NondegStatus::certified_degenerate) continue;
        std::ostringstream os;
        os << "degenerate face (axes mask " << c.mask << ") with torus critical point (";
        for (size_t i = 0; i < c.witness.size(); ++i)
            os << (i ? ", " : "") << rational_str(c.witness[i]);
        os << ")";
        throw DegeneracyError(os.str());
    }
}

} // namespace wzeta
