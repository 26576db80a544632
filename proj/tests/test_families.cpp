#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "ccopt/bruteforce.hpp"
#include "ccopt/clustering.hpp"
#include "ccopt/matroid.hpp"
#include "ccopt/partition.hpp"
#include "ccopt/powerset.hpp"

#include "test_helpers.hpp"

using namespace ccopt;

namespace {

ScalarWeighting weighting(std::initializer_list<Rational> values) {
    return ScalarWeighting(values.size(), std::vector<Rational>(values));
}

const EnumerationBudget kWideBudget{22, std::size_t(1) << 22};

} // namespace

// ---------------------------------------------------------------- power set

TEST_CASE("powerset_linear_opt is the strict sign rule") {
    CHECK(powerset_linear_opt(4, weighting({3, -1, 0, 2})) == Subset(4, {1, 4}));
    CHECK(powerset_linear_opt(3, weighting({-2, -1, Rational(-1, 2)})) == Subset(3, {}));
    CHECK(powerset_linear_opt(3, weighting({0, 0, 0})) == Subset(3, {}));
}

TEST_CASE("powerset_edge_directions are the unit vectors") {
    GeneratorSet e2 = powerset_edge_directions(2);
    REQUIRE(e2.size() == 2);
    CHECK(e2.generators[0] == RatVector{1, 0});
    CHECK(e2.generators[1] == RatVector{0, 1});
    CHECK(powerset_edge_directions(1).generators[0] == RatVector{1});
    CHECK(powerset_edge_directions(3).size() == 3);
    CHECK_THROWS_AS(PowerSetFamily(0), std::invalid_argument);
}

TEST_CASE("the power-set family presentation") {
    EdgeGuaranteedFamily fam = make_powerset_family(3);
    CHECK(fam.n == 3);
    CHECK(fam.f0 == Subset(3, {}));
    CHECK(fam.presentation.has_membership());
    CHECK(fam.presentation.has_linear());
    CHECK(fam.presentation.membership(Subset(3, {1, 2, 3})));
    CHECK(fam.presentation.stateless);
}

TEST_CASE("quadratic form maximization over subsets") {
    RatMatrix w(1, 3);
    w.at(0, 0) = 1;
    w.at(0, 1) = -1;
    w.at(0, 2) = 2;
    Problem prob = psd_qap_to_instance(w);
    SolveReport rep = convex_maximize(prob.family, prob.weighting, prob.objective);
    CHECK(rep.value == Rational(9));
    CHECK(rep.optimum == Subset(3, {1, 3}));

    RatMatrix zero(2, 2);
    Problem pz = psd_qap_to_instance(zero);
    // All projected directions vanish; the initial member already attains 0.
    SolveReport rz = convex_maximize(pz.family, pz.weighting, pz.objective);
    CHECK(rz.value == Rational(0));

    RatMatrix id(2, 2);
    id.at(0, 0) = 1;
    id.at(1, 1) = 1;
    Problem pi = psd_qap_to_instance(id);
    SolveReport ri = convex_maximize(pi.family, pi.weighting, pi.objective);
    CHECK(ri.value == Rational(2));
    CHECK(ri.optimum == Subset(2, {1, 2}));
}

// ------------------------------------------------------------------ matroids

TEST_CASE("matroid independence across the three variants") {
    MatroidSpec u = MatroidSpec::uniform(2, 3, MatroidMode::Independent);
    CHECK(matroid_independent(u, Subset(3, {1, 3})));
    CHECK_FALSE(matroid_independent(u, Subset(3, {1, 2, 3})));

    MatroidSpec tri =
        MatroidSpec::graphic(3, {{1, 2}, {2, 3}, {1, 3}}, MatroidMode::Independent);
    CHECK_FALSE(matroid_independent(tri, Subset(3, {1, 2, 3})));
    CHECK(matroid_independent(tri, Subset(3, {1, 2})));
    CHECK(matroid_independent(tri, Subset(3, {})));

    MatroidSpec lin = MatroidSpec::linear(
        RatMatrix({{1, 0, 1}, {0, 1, 1}}), MatroidMode::Independent);
    CHECK_FALSE(matroid_independent(lin, Subset(3, {1, 2, 3})));
    CHECK(matroid_independent(lin, Subset(3, {1, 2})));
}

TEST_CASE("matroid rank") {
    CHECK(matroid_rank(MatroidSpec::uniform(2, 3, MatroidMode::Bases)) == 2);
    CHECK(matroid_rank(MatroidSpec::graphic(3, {{1, 2}, {2, 3}, {1, 3}},
                                            MatroidMode::Bases)) == 2);
    CHECK(matroid_rank(MatroidSpec::linear(RatMatrix({{1, 0, 1}, {0, 1, 1}}),
                                           MatroidMode::Bases)) == 2);
    CHECK(matroid_rank(MatroidSpec::uniform(0, 2, MatroidMode::Bases)) == 0);
}

TEST_CASE("matroid greedy on the frozen examples") {
    MatroidSpec u = MatroidSpec::uniform(2, 3, MatroidMode::Bases);
    CHECK(matroid_greedy(u, weighting({5, 1, 3})) == Subset(3, {1, 3}));

    MatroidSpec tri =
        MatroidSpec::graphic(3, {{1, 2}, {2, 3}, {1, 3}}, MatroidMode::Bases);
    ScalarWeighting bt = weighting({2, 2, 1});
    Subset tree = matroid_greedy(tri, bt);
    CHECK(tree == Subset(3, {1, 2}));
    CHECK(bt.total(tree) == Rational(4));

    MatroidSpec ui = MatroidSpec::uniform(2, 3, MatroidMode::Independent);
    CHECK(matroid_greedy(ui, weighting({5, -1, 3})) == Subset(3, {1, 3}));

    // Rank-0 matroid: the empty set is the unique basis.
    MatroidSpec zero = MatroidSpec::uniform(0, 2, MatroidMode::Bases);
    CHECK(matroid_greedy(zero, weighting({7, 7})) == Subset(2, {}));
}

TEST_CASE("matroid spec factories validate their input") {
    CHECK_THROWS_AS(MatroidSpec::uniform(4, 3, MatroidMode::Bases),
                    std::invalid_argument);
    CHECK_THROWS_AS(MatroidSpec::graphic(2, {{1, 3}}, MatroidMode::Bases),
                    std::invalid_argument);
    CHECK_THROWS_AS(MatroidSpec::graphic(2, {{0, 1}}, MatroidMode::Bases),
                    std::invalid_argument);
}

TEST_CASE("matroid edge directions") {
    GeneratorSet bases3 = matroid_edge_directions(3, MatroidMode::Bases);
    CHECK(bases3.size() == 3);
    GeneratorSet ind3 = matroid_edge_directions(3, MatroidMode::Independent);
    CHECK(ind3.size() == 6);
    CHECK(matroid_edge_directions(1, MatroidMode::Bases).size() == 0);

    // Every exchange direction has coordinate sum zero.
    for (const auto& g : bases3.generators) {
        Rational sum;
        for (const auto& x : g)
            sum += x;
        CHECK(sum.is_zero());
    }
}

TEST_CASE("basis pairs one exchange apart differ by a listed direction") {
    MatroidSpec tri =
        MatroidSpec::graphic(3, {{1, 2}, {2, 3}, {1, 3}}, MatroidMode::Bases);
    EdgeGuaranteedFamily fam = make_matroid_family(tri);
    std::vector<Subset> bases = enumerate_members(fam);
    REQUIRE(bases.size() == 3); // the triangle has 3 spanning trees
    GeneratorSet dirs = matroid_edge_directions(3, MatroidMode::Bases);
    for (const auto& b1 : bases)
        for (const auto& b2 : bases) {
            if (b1 == b2)
                continue;
            std::vector<std::size_t> only1, only2;
            std::set_difference(b1.members.begin(), b1.members.end(),
                                b2.members.begin(), b2.members.end(),
                                std::back_inserter(only1));
            std::set_difference(b2.members.begin(), b2.members.end(),
                                b1.members.begin(), b1.members.end(),
                                std::back_inserter(only2));
            if (only1.size() != 1 || only2.size() != 1)
                continue;
            RatVector diff(3);
            diff[only1[0] - 1] = 1;
            diff[only2[0] - 1] = -1;
            bool found = false;
            for (const auto& d : dirs.generators)
                found = found || d == diff || d == -diff;
            CHECK(found);
        }
}

TEST_CASE("greedy weight equals exhaustive maximum on random matroids") {
    testutil::Rng rng(66001);
    std::uniform_int_distribution<std::size_t> ndist(1, 8);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = ndist(rng);
        MatroidSpec spec = testutil::rnd_matroid_spec(rng, n);
        EdgeGuaranteedFamily fam = make_matroid_family(spec);
        ScalarWeighting b = testutil::rnd_scalar_weighting(rng, n);
        Subset greedy = matroid_greedy(spec, b);
        CHECK(fam.presentation.membership(greedy));
        CHECK(b.total(greedy) == brute_linear_max(fam, b).second);
    }
}

// ----------------------------------------------------------------- partitions

TEST_CASE("shaped partition instances validate bounds") {
    std::vector<RatVector> pts{RatVector{0}, RatVector{1}};
    CHECK_THROWS_AS(ShapedPartitionInstance(pts, 2, {2, 2}, {2, 2}), InfeasibleError);
    CHECK_THROWS_AS(ShapedPartitionInstance(pts, 2, {1, 1}, {0, 1}),
                    std::invalid_argument); // l > u
    CHECK_THROWS_AS(ShapedPartitionInstance(pts, 2, {0, 0}, {3, 1}),
                    std::invalid_argument); // u > n
    ShapedPartitionInstance free = ShapedPartitionInstance::free_shape(pts, 2);
    CHECK(free.unrestricted);
    CHECK(free.ground_size() == 4);
    CHECK(free.flat(2, 1) == 3);
}

TEST_CASE("partitions encode to subsets and back") {
    std::vector<RatVector> pts{RatVector{0}, RatVector{1}, RatVector{2}};
    ShapedPartitionInstance inst = ShapedPartitionInstance::free_shape(pts, 2);
    Partition part(2, {1, 2, 1});
    Subset f = partition_to_subset(inst, part);
    CHECK(f == Subset(6, {1, 4, 5}));
    auto back = partition_from_subset(inst, f);
    REQUIRE(back.has_value());
    CHECK(*back == part);

    // Missing or doubled items fail to decode.
    CHECK_FALSE(partition_from_subset(inst, Subset(6, {1, 4})).has_value());
    CHECK_FALSE(partition_from_subset(inst, Subset(6, {1, 2, 4, 5})).has_value());
    CHECK(part.shape(2) == std::vector<std::size_t>{2, 1});
    CHECK_THROWS_AS(Partition(2, {1, 3}), std::invalid_argument);
}

TEST_CASE("transportation constraint matrix shape and balance") {
    const std::size_t n = 2, p = 2;
    RatMatrix a = transportation_constraint_matrix(n, p);
    CHECK(a.rows() == n + p);
    CHECK(a.cols() == (n + 1) * p);
    // Row for item 1 selects the lifted entries (1,1) and (1,2).
    CHECK(a.at(0, 2) == Rational(1));
    CHECK(a.at(0, 3) == Rational(1));
    CHECK(a.at(0, 0) == Rational(0));
    // Column row for part 1 selects (0,1),(1,1),(2,1).
    CHECK(a.at(n, 0) == Rational(1));
    CHECK(a.at(n, 2) == Rational(1));
    CHECK(a.at(n, 4) == Rational(1));
}

TEST_CASE("transportation circuits: count, entries, kernel, minimality") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t p = 2; p <= 3; ++p) {
            std::vector<RatVector> circuits = transportation_circuits(n, p);
            CHECK(Int(circuits.size()) == circuit_count_formula(n, p));
            RatMatrix a = transportation_constraint_matrix(n, p);
            std::set<std::vector<std::string>> seen;
            for (const auto& z : circuits) {
                REQUIRE(z.dim() == (n + 1) * p);
                // Entries in {-1,0,1} and canonical orientation.
                bool first_nonzero_seen = false;
                for (const auto& x : z) {
                    CHECK((x == Rational(0) || x == Rational(1) || x == Rational(-1)));
                    if (!first_nonzero_seen && !x.is_zero()) {
                        CHECK(x == Rational(1));
                        first_nonzero_seen = true;
                    }
                }
                CHECK(first_nonzero_seen);
                // Kernel membership and inclusion-minimal support.
                CHECK(is_circuit(a, z));
                // Distinctness.
                std::vector<std::string> key;
                for (const auto& x : z)
                    key.push_back(x.str());
                CHECK(seen.insert(key).second);
            }
        }
    }
}

TEST_CASE("circuit count formula on the frozen values") {
    CHECK(circuit_count_formula(2, 2) == 3);
    CHECK(circuit_count_formula(1, 2) == 1);
    CHECK(circuit_count_formula(2, 3) == 15);
    CHECK(transportation_circuits(2, 2).size() == 3);
    CHECK(transportation_circuits(1, 2).size() == 1);
}

TEST_CASE("partition edge directions: general vs unrestricted") {
    std::vector<RatVector> pts{RatVector{0}, RatVector{1}};
    ShapedPartitionInstance bounded(pts, 2, {1, 1}, {1, 1});
    GeneratorSet general = partition_edge_directions(bounded);
    CHECK(general.size() == 3);
    CHECK(general.dim == 4);

    ShapedPartitionInstance free = ShapedPartitionInstance::free_shape(pts, 2);
    GeneratorSet switches = partition_edge_directions(free);
    CHECK(switches.size() == 2);
    // Each switch moves one item between the two parts.
    for (const auto& g : switches.generators) {
        int plus = 0, minus = 0;
        for (const auto& x : g) {
            if (x == Rational(1))
                ++plus;
            if (x == Rational(-1))
                ++minus;
        }
        CHECK(plus == 1);
        CHECK(minus == 1);
    }

    std::vector<RatVector> one{RatVector{5}};
    ShapedPartitionInstance single(one, 2, {0, 0}, {1, 1});
    CHECK(partition_edge_directions(single).size() == 1);
}

TEST_CASE("partition linear optimization on the frozen example") {
    std::vector<RatVector> pts{RatVector{0}, RatVector{1}};
    ShapedPartitionInstance inst(pts, 2, {1, 1}, {1, 1});
    // b-matrix rows (3,0) and (1,5) in the flat (i-1)*p + j layout.
    ScalarWeighting b = weighting({3, 0, 1, 5});
    Partition best = partition_linear_opt(inst, b);
    CHECK(best == Partition(2, {1, 2}));
    CHECK(b.total(partition_to_subset(inst, best)) == Rational(8));
}

TEST_CASE("unrestricted linear optimization sends items to argmax parts") {
    testutil::Rng rng(66002);
    std::uniform_int_distribution<std::size_t> ndist(1, 5);
    std::uniform_int_distribution<std::size_t> pdist(1, 4);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = ndist(rng), p = pdist(rng);
        std::vector<RatVector> pts;
        for (std::size_t i = 0; i < n; ++i)
            pts.push_back(testutil::rnd_vector(rng, 1));
        ShapedPartitionInstance inst = ShapedPartitionInstance::free_shape(pts, p);
        ScalarWeighting b = testutil::rnd_scalar_weighting(rng, n * p);
        Partition best = partition_linear_opt(inst, b);
        for (std::size_t i = 1; i <= n; ++i) {
            std::size_t argmax = 1;
            for (std::size_t j = 2; j <= p; ++j)
                if (b.of(inst.flat(i, j)) > b.of(inst.flat(i, argmax)))
                    argmax = j;
            CHECK(best.part_of[i - 1] == argmax);
        }
    }
}

TEST_CASE("transportation oracle equals brute force within shape bounds") {
    testutil::Rng rng(66003);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> pdist(1, 3);
        const std::size_t p = pdist(rng);
        std::uniform_int_distribution<std::size_t> ndist(1, p == 3 ? 4 : 6);
        const std::size_t n = ndist(rng);
        auto [lower, upper] = testutil::rnd_shape_bounds(rng, n, p);
        std::vector<RatVector> pts;
        for (std::size_t i = 0; i < n; ++i)
            pts.push_back(testutil::rnd_vector(rng, 1));
        ShapedPartitionInstance inst(pts, p, lower, upper);
        ScalarWeighting b = testutil::rnd_scalar_weighting(rng, n * p);

        Partition best = partition_linear_opt(inst, b);
        std::vector<std::size_t> shape = best.shape(p);
        for (std::size_t j = 0; j < p; ++j) {
            CHECK(shape[j] >= lower[j]);
            CHECK(shape[j] <= upper[j]);
        }
        EdgeGuaranteedFamily fam = make_partition_family(inst);
        CHECK(b.total(partition_to_subset(inst, best)) ==
              brute_linear_max(fam, b, kWideBudget).second);
    }
}

TEST_CASE("partition weighting carries v^i into column j") {
    std::vector<RatVector> pts{RatVector{1, 2}, RatVector{3, 5}};
    ShapedPartitionInstance inst = ShapedPartitionInstance::free_shape(pts, 2);
    VectorWeighting w = partition_weighting(inst);
    CHECK(w.n == 4);
    CHECK(w.d == 4); // d*p with d=2, p=2
    CHECK(w.of(inst.flat(1, 1)) == RatVector{1, 0, 2, 0});
    CHECK(w.of(inst.flat(1, 2)) == RatVector{0, 1, 0, 2});
    CHECK(w.of(inst.flat(2, 1)) == RatVector{3, 0, 5, 0});
    CHECK(w.of(inst.flat(2, 2)) == RatVector{0, 3, 0, 5});

    // Subset weight is the flattened matrix of part sums.
    Subset f = partition_to_subset(inst, Partition(2, {1, 2}));
    CHECK(subset_weight(w, f) == RatVector{1, 3, 2, 5});
}

TEST_CASE("the partition family presentation") {
    std::vector<RatVector> pts{RatVector{0}, RatVector{1}, RatVector{7}};
    ShapedPartitionInstance inst(pts, 2, {1, 1}, {2, 2});
    EdgeGuaranteedFamily fam = make_partition_family(inst);
    CHECK(fam.n == 6);
    CHECK(fam.presentation.has_membership());
    CHECK(fam.presentation.has_linear());
    // F0 decodes to an admissible shape.
    auto f0 = partition_from_subset(inst, fam.f0);
    REQUIRE(f0.has_value());
    std::vector<std::size_t> shape = f0->shape(2);
    CHECK(shape[0] >= 1);
    CHECK(shape[1] >= 1);
    // Shape violations are non-members even when the decode succeeds.
    Subset all_first = partition_to_subset(inst, Partition(2, {1, 1, 1}));
    CHECK_FALSE(fam.presentation.membership(all_first));
}

// ----------------------------------------------------------------- clustering

TEST_CASE("balanced clustering on the line: frozen optimum") {
    std::vector<RatVector> pts{RatVector{0}, RatVector{1}, RatVector{4}, RatVector{5}};
    auto [inst, objective] = clustering_to_instance(pts, 2, 2);
    CHECK(inst.lower == std::vector<std::size_t>{2, 2});
    CHECK(inst.upper == std::vector<std::size_t>{2, 2});

    EdgeGuaranteedFamily fam = make_partition_family(inst);
    VectorWeighting w = partition_weighting(inst);
    SolveReport rep = convex_maximize(fam, w, objective);
    CHECK(rep.value == Rational(82));
    auto part = partition_from_subset(inst, rep.optimum);
    REQUIRE(part.has_value());
    CHECK(*part == Partition(2, {1, 1, 2, 2}));
    CHECK(cluster_variance(pts, *part) == Rational(1, 2));

    // Independent arbiter: exhaustive scan agrees.
    auto brute = brute_convex_max(fam, w, objective);
    CHECK(brute.second == Rational(82));

    // The three unordered balanced bipartitions take values 82, 52, 50.
    std::multiset<Rational> values;
    for (const auto& member : enumerate_members(fam))
        values.insert(evaluate_objective(objective, subset_weight(w, member)));
    CHECK(values == std::multiset<Rational>{82, 82, 52, 52, 50, 50});
}

TEST_CASE("single-cluster instances have the forced value") {
    std::vector<RatVector> pts{RatVector{1, 2}, RatVector{3, 4}};
    auto [inst, objective] = clustering_to_instance(pts, 1, 2);
    EdgeGuaranteedFamily fam = make_partition_family(inst);
    SolveReport rep = convex_maximize(fam, partition_weighting(inst), objective);
    CHECK(rep.value == Rational(52)); // ||(4,6)||^2
}

TEST_CASE("clustering_to_instance rejects n != p*m") {
    std::vector<RatVector> pts{RatVector{0}, RatVector{1}, RatVector{2}};
    CHECK_THROWS_AS(clustering_to_instance(pts, 2, 2), std::invalid_argument);
}

TEST_CASE("cluster variance on the frozen examples") {
    std::vector<RatVector> pts{RatVector{0}, RatVector{1}, RatVector{4}, RatVector{5}};
    CHECK(cluster_variance(pts, Partition(2, {1, 1, 2, 2})) == Rational(1, 2));
    CHECK(cluster_variance(pts, Partition(4, {1, 2, 3, 4})) == Rational(0));
    // {0,4} and {1,5}: each cluster contributes (1/2)(4+4) = 4, total 8.
    CHECK(cluster_variance(pts, Partition(2, {1, 2, 1, 2})) == Rational(8));

    CHECK_THROWS_AS(cluster_variance(pts, Partition(3, {1, 1, 3, 3})),
                    std::invalid_argument); // part 2 empty
    CHECK_THROWS_AS(cluster_variance({RatVector{0}}, Partition(1, {})),
                    std::invalid_argument); // length mismatch
}

TEST_CASE("variance duality identity holds on every balanced partition") {
    testutil::Rng rng(66004);
    std::uniform_int_distribution<std::size_t> pdist(1, 3);
    std::uniform_int_distribution<std::size_t> mdist(1, 3);
    std::uniform_int_distribution<std::size_t> ddist(1, 2);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t p = pdist(rng), m = mdist(rng), d = ddist(rng);
        const std::size_t n = p * m;
        if (n > 7)
            continue;
        std::vector<RatVector> pts;
        for (std::size_t i = 0; i < n; ++i)
            pts.push_back(testutil::rnd_vector(rng, d));
        auto [inst, objective] = clustering_to_instance(pts, p, m);
        EdgeGuaranteedFamily fam = make_partition_family(inst);
        VectorWeighting w = partition_weighting(inst);

        Rational sq_sum;
        for (const auto& v : pts)
            sq_sum += inner_product(v, v);

        for (const auto& member : enumerate_members(fam, kWideBudget)) {
            auto part = partition_from_subset(inst, member);
            REQUIRE(part.has_value());
            const Rational norm2 = evaluate_objective(objective, subset_weight(w, member));
            const Rational lhs = sq_sum / Rational(Int(m)) -
                                 norm2 / Rational(Int(m * m));
            CHECK(lhs == cluster_variance(pts, *part));
        }
    }
}
