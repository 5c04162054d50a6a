// Lazy memoized power series in T with no constant term.
#pragma once

#include <functional>
#include <vector>

#include "wzeta/errors.hpp"

namespace wzeta {

// Coefficients are produced on demand by a generator callback and cached.
// Index m >= 1 is the exponent of T.
template <typename R>
class TSeries {
public:
    using Gen = std::function<R(long)>;

    explicit TSeries(Gen gen) : gen_(std::move(gen)) {}

    const R& coeff(long m) {
        if (m < 1) throw InputError("series coefficient index must be >= 1");
        while (static_cast<long>(cache_.size()) < m)
            cache_.push_back(gen_(static_cast<long>(cache_.size()) + 1));
        return cache_[static_cast<size_t>(m) - 1];
    }

    // First n coefficients a_1..a_n.
    std::vector<R> prefix(long n) {
        std::vector<R> out;
        out.reserve(static_cast<size_t>(std::max(n, 0l)));
        for (long m = 1; m <= n; ++m) out.push_back(coeff(m));
        return out;
    }

private:
    Gen gen_;
    std::vector<R> cache_;
};

} // namespace wzeta
