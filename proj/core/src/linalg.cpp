#include "ccopt/linalg.hpp"

namespace ccopt {

std::pair<IntVector, Int> clear_denominators(const RatVector& b) {
    Int scale = 1;
    for (const auto& x : b)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.den().get_mpz_t());
    IntVector out;
    out.reserve(b.dim());
    for (const auto& x : b)
        out.push_back(x.num() * (scale / x.den()));
    return {std::move(out), std::move(scale)};
}

std::size_t rank_rational(const RatMatrix& m) {
    std::vector<IntVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(clear_denominators(m.row(i)).first);
    return rank_int_rows(rows);
}

std::size_t rank_int_rows(const std::vector<IntVector>& input) {
    std::vector<IntVector> rows = input;
    if (rows.empty())
        return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        const IntVector& p = rows[rank];
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0)
                continue;
            // row_i := p[col] * row_i - row_i[col] * p, then shrink by gcd
            Int f = rows[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                rows[i][j] = p[col] * rows[i][j] - f * p[j];
            make_primitive(rows[i]);
        }
        ++rank;
    }
    return rank;
}

void make_primitive(IntVector& v) {
    Int g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g <= 1)
        return;
    for (auto& x : v)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Int dot(const IntVector& a, const IntVector& b) {
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

IntVector primitive_direction(const RatVector& v) {
    if (v.is_zero())
        throw std::invalid_argument("primitive_direction of zero vector");
    IntVector w = clear_denominators(v).first;
    make_primitive(w);
    return w;
}

} // namespace ccopt
