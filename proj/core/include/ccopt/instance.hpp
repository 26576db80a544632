#pragma once

/// On-disk problem descriptions.  The format is JSON with every rational
/// written as a string ("3", "-1/2"); floating-point literals are rejected
/// outright so exactness survives serialization.  Parsing is purely
/// syntactic/dimensional (ParseError); semantic emptiness of the described
/// family surfaces later, when the problem is built (InfeasibleError).

#include <optional>
#include <string>
#include <vector>

#include "ccopt/bruteforce.hpp"
#include "ccopt/clustering.hpp"
#include "ccopt/matroid.hpp"
#include "ccopt/partition.hpp"
#include "ccopt/powerset.hpp"
#include "ccopt/reduce.hpp"

namespace ccopt {

struct InstanceFile {
    enum class FamilyKind { PowerSet, Matroid, ShapedPartition, Clustering };

    struct PartitionBlock {
        std::vector<RatVector> points;
        std::size_t p = 0;
        std::vector<std::size_t> lower;
        std::vector<std::size_t> upper;

        bool operator==(const PartitionBlock&) const = default;
    };
    struct ClusteringBlock {
        std::vector<RatVector> points;
        std::size_t p = 0;
        std::size_t m = 0;

        bool operator==(const ClusteringBlock&) const = default;
    };

    int version = 1;
    FamilyKind kind = FamilyKind::PowerSet;
    std::size_t powerset_n = 0;                   // FamilyKind::PowerSet
    std::optional<MatroidSpec> matroid;           // FamilyKind::Matroid
    std::optional<PartitionBlock> partition;      // FamilyKind::ShapedPartition
    std::optional<ClusteringBlock> clustering;    // FamilyKind::Clustering

    /// Explicit n x d table; absent exactly when the family implies the
    /// weighting (shaped partitions and clustering lift their own points).
    std::optional<VectorWeighting> weighting;

    ConvexObjective::Kind objective = ConvexObjective::Kind::SquaredL2;
    RatVector objective_coeffs; // Kind::Linear only

    bool unrestricted = false; // drop shape bounds (partition-backed families)
    unsigned jobs = 1;
    EnumerationBudget budget;  // cap for brute-force cross-checks

    std::size_t ground_size() const;

    bool operator==(const InstanceFile&) const = default;
};

/// Parse JSON text.  Throws ParseError naming the offending field.
InstanceFile parse_instance(const std::string& text);

/// Read and parse a file; the path prefixes any error message.
InstanceFile load_instance(const std::string& path);

/// Canonical text: parse_instance(serialize_instance(f)) == f.
std::string serialize_instance(const InstanceFile& f);

/// A runnable problem plus the context needed to decode its results.
struct BuiltProblem {
    Problem problem;
    InstanceFile::FamilyKind kind = InstanceFile::FamilyKind::PowerSet;
    std::optional<ShapedPartitionInstance> partition; // partition-backed kinds
};

/// Materialize family, weighting and objective.  Throws InfeasibleError when
/// the described family has no members.
BuiltProblem build_problem(const InstanceFile& f);

} // namespace ccopt
