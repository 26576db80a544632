#include "ccopt/bruteforce.hpp"

#include "ccopt/errors.hpp"

namespace ccopt {

namespace {

// Depth-first scan of all subsets in lexicographic member-list order,
// filtered by the membership oracle.  The visitor returns false to stop.
template <typename Fn>
void scan_members(const EdgeGuaranteedFamily& fam, const EnumerationBudget& budget,
                  Fn&& visit) {
    if (!fam.presentation.has_membership())
        throw std::invalid_argument("exhaustive scan needs a membership oracle");
    if (fam.n > budget.max_n)
        throw BudgetError("ground set of size " + std::to_string(fam.n) +
                          " exceeds the enumeration budget max_n = " +
                          std::to_string(budget.max_n));
    std::size_t found = 0;
    std::vector<std::size_t> stack;
    auto emit = [&](const std::vector<std::size_t>& members) {
        Subset f(fam.n, members);
        if (!fam.presentation.membership(f))
            return;
        if (++found > budget.max_members)
            throw BudgetError("more than " + std::to_string(budget.max_members) +
                              " members; enumeration budget exceeded");
        visit(std::move(f));
    };
    // Iterative DFS: state = next element to try at each depth.
    emit(stack);
    std::vector<std::size_t> next{1};
    while (!next.empty()) {
        if (next.back() > fam.n) {
            next.pop_back();
            if (!stack.empty())
                stack.pop_back();
            continue;
        }
        const std::size_t j = next.back()++;
        stack.push_back(j);
        emit(stack);
        next.push_back(j + 1);
    }
}

} // namespace

std::vector<Subset> enumerate_members(const EdgeGuaranteedFamily& fam,
                                      const EnumerationBudget& budget) {
    std::vector<Subset> out;
    scan_members(fam, budget, [&](Subset f) { out.push_back(std::move(f)); });
    return out;
}

std::pair<Subset, Rational> brute_linear_max(const EdgeGuaranteedFamily& fam,
                                             const ScalarWeighting& b,
                                             const EnumerationBudget& budget) {
    if (b.n != fam.n)
        throw std::invalid_argument("brute_linear_max: weighting size mismatch");
    bool have = false;
    Subset best;
    Rational best_val;
    scan_members(fam, budget, [&](Subset f) {
        Rational val = b.total(f);
        if (!have || val > best_val) {
            have = true;
            best = std::move(f);
            best_val = std::move(val);
        }
    });
    if (!have)
        throw std::invalid_argument("family has no members");
    return {std::move(best), std::move(best_val)};
}

std::pair<Subset, Rational> brute_convex_max(const EdgeGuaranteedFamily& fam,
                                             const VectorWeighting& w,
                                             const ConvexObjective& c,
                                             const EnumerationBudget& budget) {
    if (w.n != fam.n)
        throw std::invalid_argument("brute_convex_max: weighting size mismatch");
    bool have = false;
    Subset best;
    Rational best_val;
    scan_members(fam, budget, [&](Subset f) {
        Rational val = evaluate_objective(c, subset_weight(w, f));
        if (!have || val > best_val) {
            have = true;
            best = std::move(f);
            best_val = std::move(val);
        }
    });
    if (!have)
        throw std::invalid_argument("family has no members");
    return {std::move(best), std::move(best_val)};
}

bool is_circuit(const RatMatrix& a, const RatVector& z) {
    if (a.cols() != z.dim())
        throw std::invalid_argument("is_circuit: dimension mismatch");
    std::vector<std::size_t> supp;
    for (std::size_t j = 0; j < z.dim(); ++j)
        if (!z[j].is_zero())
            supp.push_back(j);
    if (supp.empty())
        return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational acc;
        for (std::size_t j : supp)
            acc += a.at(i, j) * z[j];
        if (!acc.is_zero())
            return false;
    }
    // Minimal support: dropping any support column leaves independent columns,
    // so no kernel vector lives on a proper subset of supp(z).
    for (std::size_t skip : supp) {
        RatMatrix cols(supp.size() - 1, a.rows());
        std::size_t r = 0;
        for (std::size_t j : supp) {
            if (j == skip)
                continue;
            for (std::size_t i = 0; i < a.rows(); ++i)
                cols.at(r, i) = a.at(i, j);
            ++r;
        }
        if (rank_rational(cols) != supp.size() - 1)
            return false;
    }
    return true;
}

} // namespace ccopt
