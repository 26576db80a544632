#pragma once

/// Matroid families over {1..n}: uniform, graphic (forest/spanning), and
/// linear (column dependencies of a rational matrix), each usable as a
/// bases family or an independent-sets family.  Linear optimization is the
/// greedy algorithm; edge directions of the base polytope are differences of
/// unit vectors, the independence polytope additionally has unit directions.

#include <utility>
#include <vector>

#include "ccopt/oracles.hpp"

namespace ccopt {

enum class MatroidMode { Bases, Independent };

struct MatroidSpec {
    enum class Kind { Uniform, Graphic, Linear };

    Kind kind = Kind::Uniform;
    std::size_t n = 0; // ground elements 1..n
    MatroidMode mode = MatroidMode::Bases;

    std::size_t uniform_rank = 0; // Kind::Uniform

    std::size_t graph_vertices = 0;                      // Kind::Graphic
    std::vector<std::pair<std::size_t, std::size_t>> graph_edges; // element i <-> edge i

    RatMatrix columns; // Kind::Linear, column j <-> element j

    static MatroidSpec uniform(std::size_t rank, std::size_t n, MatroidMode mode);
    static MatroidSpec graphic(std::size_t vertices,
                               std::vector<std::pair<std::size_t, std::size_t>> edges,
                               MatroidMode mode);
    static MatroidSpec linear(RatMatrix columns, MatroidMode mode);

    bool operator==(const MatroidSpec&) const = default;
};

bool matroid_independent(const MatroidSpec& spec, const Subset& f);

/// Rank of the whole ground set (size of any maximal independent set).
std::size_t matroid_rank(const MatroidSpec& spec);

/// Greedy: elements sorted by b descending, ties by index ascending.
/// Bases mode adds every element preserving independence until a basis is
/// complete (negative values included); independent mode skips b(j) <= 0.
Subset matroid_greedy(const MatroidSpec& spec, const ScalarWeighting& b);

/// Bases: {1_i - 1_j : i < j}; independent: the same plus all unit vectors.
GeneratorSet matroid_edge_directions(std::size_t n, MatroidMode mode);

/// Full presentation with membership and native greedy linear oracle.
EdgeGuaranteedFamily make_matroid_family(const MatroidSpec& spec);

} // namespace ccopt
