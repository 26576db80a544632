#include "ccopt/lp.hpp"

#include <stdexcept>

namespace ccopt {

LpSolution simplex_maximize(const RatMatrix& a,
                            const std::vector<Rational>& b,
                            const std::vector<Rational>& c) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m || c.size() != n)
        throw std::invalid_argument("simplex_maximize: shape mismatch");
    for (const auto& bi : b)
        if (bi.sign() < 0)
            throw std::invalid_argument("simplex_maximize: requires b >= 0");

    // Tableau: m constraint rows over n structural + m slack columns, plus
    // a rhs column and a reduced-cost row.  Row objective[j] holds z_j - c_j,
    // so a negative entry marks an improving column.
    const std::size_t cols = n + m + 1;
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = a.at(i, j);
        t[i][n + i] = 1;
        t[i][cols - 1] = b[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j)
        t[m][j] = -c[j];

    for (;;) {
        // Bland: entering column = lowest index with negative reduced cost.
        std::size_t enter = cols - 1;
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            if (t[m][j].sign() < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols - 1)
            break; // optimal

        // Ratio test; ties broken by the lowest basis variable index.
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter].sign() <= 0)
                continue;
            Rational ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            return {LpStatus::Unbounded, Rational(), {}};

        // Pivot on (leave, enter).
        const Rational piv = t[leave][enter];
        for (auto& x : t[leave])
            x /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter].is_zero())
                continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j)
                t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    LpSolution out;
    out.status = LpStatus::Optimal;
    out.value = t[m][cols - 1];
    out.x.assign(n, Rational());
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n)
            out.x[basis[i]] = t[i][cols - 1];
    return out;
}

} // namespace ccopt
