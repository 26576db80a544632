#include "ccopt/clustering.hpp"

#include <algorithm>

namespace ccopt {

std::pair<ShapedPartitionInstance, ConvexObjective>
clustering_to_instance(std::vector<RatVector> points, std::size_t p, std::size_t m) {
    if (points.size() != p * m)
        throw std::invalid_argument("clustering needs n = p * m points, got " +
                                    std::to_string(points.size()));
    ShapedPartitionInstance inst(std::move(points), p,
                                 std::vector<std::size_t>(p, m),
                                 std::vector<std::size_t>(p, m));
    return {std::move(inst), ConvexObjective::squared_l2()};
}

Rational cluster_variance(const std::vector<RatVector>& points, const Partition& part) {
    if (part.items() != points.size())
        throw std::invalid_argument("cluster_variance: assignment length mismatch");
    if (part.items() == 0)
        throw std::invalid_argument("cluster_variance: no points");
    const std::size_t p = *std::max_element(part.part_of.begin(), part.part_of.end());
    const std::vector<std::size_t> shape = part.shape(p);
    for (std::size_t j = 0; j < p; ++j)
        if (shape[j] == 0)
            throw std::invalid_argument("cluster_variance: empty part " +
                                        std::to_string(j + 1));
    const std::size_t d = points[0].dim();
    std::vector<RatVector> sums(p, RatVector(d));
    std::vector<Rational> sq(p);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::size_t j = part.part_of[i] - 1;
        sums[j] += points[i];
        sq[j] += inner_product(points[i], points[i]);
    }
    // Per part: (sum ||v||^2 - ||s||^2 / count) / count.
    Rational total;
    for (std::size_t j = 0; j < p; ++j) {
        const Rational count(static_cast<long>(shape[j]));
        total += (sq[j] - inner_product(sums[j], sums[j]) / count) / count;
    }
    return total;
}

} // namespace ccopt
