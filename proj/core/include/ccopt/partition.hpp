#pragma once

/// Shaped vector partitions: order n items, each carrying a point in Q^d,
/// into p parts whose sizes obey bounds l <= |part| <= u.  Encoded over the
/// ground set {(i,j)} of size np with flat index (i-1)*p + j; a member is a
/// total assignment with admissible shape.
///
/// The member polytope is the projection (erase row 0) of a transportation
/// polytope over the complete bipartite graph K_{n+1,p}, so its edge
/// directions are projections of circuits of K_{n+1,p}, i.e. alternating
/// cycles.  In the unrestricted case (l = 0, u = n) the single-item-switch
/// directions suffice.  Linear optimization is an exact min-cost flow.

#include <optional>
#include <vector>

#include "ccopt/oracles.hpp"
#include "ccopt/reduce.hpp"

namespace ccopt {

struct ShapedPartitionInstance {
    std::size_t n = 0; // items
    std::size_t p = 0; // parts
    std::size_t d = 0; // point dimension
    std::vector<RatVector> points;   // n points in Q^d
    std::vector<std::size_t> lower;  // p lower shape bounds
    std::vector<std::size_t> upper;  // p upper shape bounds
    bool unrestricted = false;       // true iff l == 0 and u == n componentwise

    ShapedPartitionInstance() = default;
    ShapedPartitionInstance(std::vector<RatVector> pts, std::size_t parts,
                            std::vector<std::size_t> l, std::vector<std::size_t> u);

    /// Bounds-free convenience: l = 0, u = n.
    static ShapedPartitionInstance free_shape(std::vector<RatVector> pts, std::size_t parts);

    std::size_t ground_size() const { return n * p; }
    /// Flat ground element for item i in part j (both 1-based).
    std::size_t flat(std::size_t i, std::size_t j) const { return (i - 1) * p + j; }
};

struct Partition {
    std::vector<std::size_t> part_of; // item i (1-based) -> part, at index i-1

    Partition() = default;
    Partition(std::size_t p, std::vector<std::size_t> assignment)
        : part_of(std::move(assignment)) {
        for (std::size_t j : part_of)
            if (j < 1 || j > p)
                throw std::invalid_argument("partition part index out of range");
    }

    std::size_t items() const { return part_of.size(); }
    std::vector<std::size_t> shape(std::size_t p) const {
        std::vector<std::size_t> s(p, 0);
        for (std::size_t j : part_of)
            ++s[j - 1];
        return s;
    }
    friend bool operator==(const Partition& a, const Partition& b) {
        return a.part_of == b.part_of;
    }
};

Subset partition_to_subset(const ShapedPartitionInstance& inst, const Partition& part);

/// Decodes a ground subset into an assignment; nothing if some item does not
/// appear exactly once.  Shape bounds are not checked here.
std::optional<Partition> partition_from_subset(const ShapedPartitionInstance& inst,
                                               const Subset& f);

/// The (n+p) x ((n+1)p) transportation constraint system of K_{n+1,p}:
/// row sums of items 1..n and column sums of parts 1..p (row 0 is free; its
/// balance is implied).  Lifted flat layout: (i,j) -> i*p + (j-1), i in 0..n.
RatMatrix transportation_constraint_matrix(std::size_t n, std::size_t p);

/// All circuits of K_{n+1,p} as lifted alternating-cycle vectors in
/// {-1,0,1}^((n+1)p), one canonical orientation each (lowest nonzero flat
/// index positive).  Deterministic order.
std::vector<RatVector> transportation_circuits(std::size_t n, std::size_t p);

/// Sum over cycle lengths: (1/2) C(p,i) C(n+1,i) i! (i-1)!, i = 2..min(p,n+1).
Int circuit_count_formula(std::size_t n, std::size_t p);

/// General case: projections (erase row 0) of all transportation circuits.
/// Unrestricted case: the n*C(p,2) single-item-switch directions.
GeneratorSet partition_edge_directions(const ShapedPartitionInstance& inst);

/// Exact maximizer of sum_i b(i, part(i)) over admissible-shape partitions,
/// via min-cost flow on the transportation lift (successive shortest paths,
/// integer-cleared costs).  Unrestricted instances take each item to its
/// argmax part, ties to the lowest part index.
Partition partition_linear_opt(const ShapedPartitionInstance& inst,
                               const ScalarWeighting& b);

/// The lifted weighting over the np ground set: element (i,j) carries the
/// d x p matrix v^i (x) 1_j flattened row-major to dimension d*p, so that
/// subset weights are flattened part-sum matrices V^pi.
VectorWeighting partition_weighting(const ShapedPartitionInstance& inst);

/// Full presentation: membership (decode + shape check) and native flow
/// oracle; F0 is the first admissible shape filled in item order.
EdgeGuaranteedFamily make_partition_family(const ShapedPartitionInstance& inst);

} // namespace ccopt
