#pragma once

/// The power-set family 2^N: every subset is a member, the member polytope
/// is the unit cube, edges are unit directions, and linear optimization is
/// the sign rule {j : b(j) > 0}.  Carrier of the PSD quadratic form
/// application: maximizing x^T W^T W x over x in {0,1}^n is convex
/// maximization of ||w(F)||^2 with w(j) = column j of W.

#include "ccopt/oracles.hpp"
#include "ccopt/reduce.hpp"

namespace ccopt {

struct PowerSetFamily {
    std::size_t n = 0;
    explicit PowerSetFamily(std::size_t n_) : n(n_) {
        if (n < 1)
            throw std::invalid_argument("power set needs n >= 1");
    }
};

/// Exactly {j : b(j) > 0}; zeros excluded (strict rule, ties go to smaller sets).
Subset powerset_linear_opt(std::size_t n, const ScalarWeighting& b);

/// The n standard unit vectors.
GeneratorSet powerset_edge_directions(std::size_t n);

/// Full presentation: membership (always true), native linear oracle,
/// F0 = empty set, unit edge directions.
EdgeGuaranteedFamily make_powerset_family(std::size_t n);

/// Quadratic form instance: maximize ||W 1_F||^2 = 1_F^T W^T W 1_F over all
/// subsets; weighting rows are the columns of W, objective is squared_l2.
Problem psd_qap_to_instance(const RatMatrix& w_matrix);

} // namespace ccopt
