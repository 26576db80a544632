#pragma once

/// Vertex enumeration for zonotopes zone(E) = sum of segments [-e^i, +e^i].
///
/// Every vertex of a zonotope is a sign combination sum_i s_i e^i, and the
/// vertices correspond exactly to the full-dimensional cells of the central
/// hyperplane arrangement {a : a.e^i = 0}.  enumerate_vertices walks that
/// arrangement exactly and returns, for each vertex, a witness functional a
/// lying strictly inside the vertex's normal cone, i.e. a is uniquely
/// maximized over the zonotope at that vertex.

#include <optional>
#include <vector>

#include "ccopt/linalg.hpp"

namespace ccopt {

struct GeneratorSet {
    std::size_t dim = 0;              // ambient dimension d
    std::vector<RatVector> generators; // m vectors in Q^dim
    std::vector<bool> zero;           // zero[i] flags generators[i] == 0

    GeneratorSet() = default;
    GeneratorSet(std::size_t d, std::vector<RatVector> gens)
        : dim(d), generators(std::move(gens)) {
        if (dim == 0)
            throw std::invalid_argument("generator set needs ambient dimension >= 1");
        zero.reserve(generators.size());
        for (const auto& g : generators) {
            if (g.dim() != dim)
                throw std::invalid_argument("generator dimension mismatch");
            zero.push_back(g.is_zero());
        }
    }

    std::size_t size() const { return generators.size(); }

    /// Count of pairwise nonproportional nonzero generators: the m' against
    /// which the vertex count bound is stated.
    std::size_t nonproportional_count() const;
};

struct ZonotopeVertex {
    RatVector point;    // sum_i signs[i] * e^i (zero generators contribute 0)
    RatVector witness;  // integer functional, strictly sign-correct on each nonzero e^i
    SignVector signs;   // length m; +1 for zero generators by convention
};

struct ZonotopeVertexList {
    GeneratorSet generator_set;
    std::vector<ZonotopeVertex> vertices; // sorted lexicographically by signs
};

/// Worst-case vertex count 2 * sum_{i=0}^{d-1} C(m-1, i) of a d-dimensional
/// zonotope with m generators.
Int vertex_count_bound(std::size_t m, std::size_t d);

/// Searches for a functional a with signs[i] * (a . e^i) > 0 for every
/// nonzero generator; returns nothing when that open cone is empty.
/// Realized as an exact strict-feasibility linear program: maximize t
/// subject to signs[i]*(a.e^i) >= t with a and t box-bounded; the cone is
/// nonempty iff the optimum is positive.
std::optional<RatVector> cell_witness(const GeneratorSet& gens, const SignVector& signs);

/// All vertices of zone(gens), each with a strict witness functional.
/// Requires at least one nonzero generator (otherwise the zonotope is the
/// single point 0 and has no meaningful sign structure): that case throws.
ZonotopeVertexList enumerate_vertices(const GeneratorSet& gens);

/// Test oracle: enumerates all 2^m sign points and returns the ones that are
/// vertices of their convex hull, exactly.  Only for m <= 16 and dim <= 3.
/// Output sorted lexicographically.
std::vector<RatVector> brute_force_vertices(const GeneratorSet& gens);

/// Applies omega(x) = sum_j x_j w(j) to each generator: the image of the
/// edge-direction set under a vector weighting.  Order and multiplicity are
/// preserved; entries may collapse to zero.
GeneratorSet project_generators(const GeneratorSet& edges, const VectorWeighting& w);

} // namespace ccopt
