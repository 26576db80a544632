#pragma once

/// Balanced clustering as a shaped-partition problem: p clusters of equal
/// size m over n = p*m points.  Maximizing the squared l2 norm of the
/// flattened part-sum matrix is equivalent to minimizing the sum of cluster
/// variances, because for fixed cluster sizes
///   sum_j (1/|pi_j|) sum_{i in pi_j} ||v^i - mu_j||^2
///     = sum_i ||v^i||^2 / m - (1/m^2) * sum_j ||s_j||^2
/// with s_j the sum of cluster j (balanced case |pi_j| = m).

#include "ccopt/partition.hpp"

namespace ccopt {

/// The shaped-partition instance with l = u = (m,...,m) and the squared_l2
/// objective over the flattened part-sum matrix.
std::pair<ShapedPartitionInstance, ConvexObjective>
clustering_to_instance(std::vector<RatVector> points, std::size_t p, std::size_t m);

/// Sum of cluster variances: sum_j (1/|pi_j|) sum_{i in pi_j} ||v^i - mu_j||^2,
/// mu_j the mean of part j.  The part count is the highest part index used;
/// empty parts below it are an error.
Rational cluster_variance(const std::vector<RatVector>& points, const Partition& part);

} // namespace ccopt
