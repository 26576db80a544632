#pragma once

/// Exact linear programming over the rationals.
///
/// Solves  max c.x  subject to  Ax <= b, x >= 0  with b >= 0, by the primal
/// simplex method on a dense tableau.  Bland's rule is used for both the
/// entering and the leaving variable, so the method terminates without any
/// perturbation and the answer is fully deterministic.  Intended for the
/// small systems that arise in sign-cell witness searches, not as a general
/// purpose solver.

#include <vector>

#include "ccopt/linalg.hpp"

namespace ccopt {

enum class LpStatus {
    Optimal,
    Unbounded,
};

struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    Rational value;
    std::vector<Rational> x;
};

/// Requires b[i] >= 0 for all i (the all-slack basis must be feasible);
/// throws std::invalid_argument otherwise or on shape mismatch.
LpSolution simplex_maximize(const RatMatrix& a,
                            const std::vector<Rational>& b,
                            const std::vector<Rational>& c);

} // namespace ccopt
