#include "wzeta/linalg.hpp"

#include <algorithm>

namespace wzeta {

std::vector<std::vector<Rational>> nullspace_rational(std::vector<std::vector<Rational>> rows,
                                                      int dim) {
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (int col = 0; col < dim && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        Rational inv = rows[rank][col];
        for (auto& x : rows[rank]) x /= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (int j = 0; j < dim; ++j) rows[r][j] -= f * rows[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(dim, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace wzeta
