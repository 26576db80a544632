#include "ccopt/powerset.hpp"

namespace ccopt {

Subset powerset_linear_opt(std::size_t n, const ScalarWeighting& b) {
    if (b.n != n)
        throw std::invalid_argument("powerset_linear_opt: weighting size mismatch");
    std::vector<std::size_t> members;
    for (std::size_t j = 1; j <= n; ++j)
        if (b.of(j).sign() > 0)
            members.push_back(j);
    return Subset(n, std::move(members));
}

GeneratorSet powerset_edge_directions(std::size_t n) {
    if (n < 1)
        throw std::invalid_argument("powerset_edge_directions: n >= 1 required");
    std::vector<RatVector> units;
    units.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVector e(n);
        e[j] = 1;
        units.push_back(std::move(e));
    }
    return GeneratorSet(n, std::move(units));
}

EdgeGuaranteedFamily make_powerset_family(std::size_t n) {
    PowerSetFamily fam(n);
    FamilyPresentation pres;
    pres.n = n;
    pres.membership = [](const Subset&) { return true; };
    pres.linear = [n](const ScalarWeighting& b) { return powerset_linear_opt(n, b); };
    pres.stateless = true;
    return EdgeGuaranteedFamily(n, std::move(pres), Subset(n, {}),
                                powerset_edge_directions(n));
}

Problem psd_qap_to_instance(const RatMatrix& w_matrix) {
    const std::size_t d = w_matrix.rows();
    const std::size_t n = w_matrix.cols();
    if (n < 1 || d < 1)
        throw std::invalid_argument("psd_qap_to_instance: empty matrix");
    std::vector<RatVector> rows;
    rows.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVector col(d);
        for (std::size_t t = 0; t < d; ++t)
            col[t] = w_matrix.at(t, j);
        rows.push_back(std::move(col));
    }
    return Problem{make_powerset_family(n), VectorWeighting(std::move(rows)),
                   ConvexObjective::squared_l2()};
}

} // namespace ccopt
