#pragma once

/// The main engine: maximize a convex function of a vector weight over an
/// edge-guaranteed family, by reduction to zonotope vertex enumeration plus
/// one linear-optimization query per zonotope vertex.
///
/// The normal fan of the zonotope of projected edge directions refines the
/// normal fan of the projected member polytope, so each witness functional
/// a^i is maximized over the member polytope at a single vertex, and every
/// vertex of conv{w(F)} is hit by some query.  A convex objective attains
/// its maximum at a vertex; scanning all candidates is therefore exact.

#include <functional>
#include <vector>

#include "ccopt/oracles.hpp"
#include "ccopt/zonotope.hpp"

namespace ccopt {

struct ConvexObjective {
    enum class Kind { SquaredL2, Linear, MaxCoordinate, Custom };

    Kind kind = Kind::SquaredL2;
    RatVector linear_coeffs;                            // Kind::Linear
    std::function<Rational(const RatVector&)> callback; // Kind::Custom
    bool declared_convex = true; // custom callbacks: caller's promise, not verified

    static ConvexObjective squared_l2() { return {}; }
    static ConvexObjective linear(RatVector a) {
        ConvexObjective c;
        c.kind = Kind::Linear;
        c.linear_coeffs = std::move(a);
        return c;
    }
    static ConvexObjective max_coordinate() {
        ConvexObjective c;
        c.kind = Kind::MaxCoordinate;
        return c;
    }
    static ConvexObjective custom(std::function<Rational(const RatVector&)> fn,
                                  bool declared_convex) {
        ConvexObjective c;
        c.kind = Kind::Custom;
        c.callback = std::move(fn);
        c.declared_convex = declared_convex;
        return c;
    }
};

Rational evaluate_objective(const ConvexObjective& c, const RatVector& x);

/// One zonotope vertex with everything derived from it in step 3.
struct SolveCandidate {
    SignVector signs;       // fingerprint of the zonotope vertex
    RatVector vertex;       // u^i, vertex of zone(projected E)
    RatVector witness;      // a^i, uniquely maximized at u^i
    Subset member;          // F^i = argmax of b^i(j) = a^i . w(j)
    RatVector weight;       // w(F^i)
    Rational value;         // c(w(F^i))
};

struct SolveReport {
    Subset optimum;
    RatVector optimum_weight;
    Rational value;
    bool degenerate = false; // projected edges all vanished: single-point image
    std::size_t zonotope_vertices = 0;
    std::size_t oracle_queries = 0;
    std::size_t evaluation_queries = 0;
    std::vector<SolveCandidate> candidates;
    AugmentationStats augmentation; // aggregated over simulated oracles
};

struct SolveOptions {
    unsigned jobs = 1; // oracle queries run concurrently when > 1 and the
                       // presentation is declared stateless
};

/// A full problem instance: family, vector weighting, objective.
struct Problem {
    EdgeGuaranteedFamily family;
    VectorWeighting weighting;
    ConvexObjective objective;
};

RatVector subset_weight(const VectorWeighting& w, const Subset& f);

SolveReport convex_maximize(const EdgeGuaranteedFamily& fam, const VectorWeighting& w,
                            const ConvexObjective& c, const SolveOptions& opts = {});

} // namespace ccopt
