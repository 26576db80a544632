#pragma once

/// Exhaustive reference oracles.  Deliberately simple: these certify every
/// other module on small instances, so they must stay obviously correct.
/// Budgets are hard errors, never silent truncation.

#include <utility>
#include <vector>

#include "ccopt/oracles.hpp"
#include "ccopt/reduce.hpp"

namespace ccopt {

struct EnumerationBudget {
    std::size_t max_n = 14;                  // ground-set cap (2^n scan)
    std::size_t max_members = std::size_t(1) << 20; // cap on members returned

    bool operator==(const EnumerationBudget&) const = default;
};

/// All members of the family in lexicographic order of their member lists
/// (empty set first, then {1}, {1,2}, ...).  Needs a membership oracle.
std::vector<Subset> enumerate_members(const EdgeGuaranteedFamily& fam,
                                      const EnumerationBudget& budget = {});

/// Exhaustive maximizer of b(F); ties to the lexicographically first member.
std::pair<Subset, Rational> brute_linear_max(const EdgeGuaranteedFamily& fam,
                                             const ScalarWeighting& b,
                                             const EnumerationBudget& budget = {});

/// Exhaustive maximizer of c(w(F)); ties to the lexicographically first.
std::pair<Subset, Rational> brute_convex_max(const EdgeGuaranteedFamily& fam,
                                             const VectorWeighting& w,
                                             const ConvexObjective& c,
                                             const EnumerationBudget& budget = {});

/// True iff z is a circuit of the matrix a: nonzero, a z = 0, and no nonzero
/// kernel vector has support strictly inside supp(z) (equivalently, every
/// proper subset of the support columns is linearly independent).
bool is_circuit(const RatMatrix& a, const RatVector& z);

} // namespace ccopt
