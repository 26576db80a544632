// Microbenchmarks for the hot paths: zonotope vertex enumeration, the full
// convex-maximization pipeline, and the simulated oracle chain.  Inputs are
// seeded so numbers are comparable across runs.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "ccopt/clustering.hpp"
#include "ccopt/oracles.hpp"
#include "ccopt/partition.hpp"
#include "ccopt/powerset.hpp"
#include "ccopt/reduce.hpp"
#include "ccopt/zonotope.hpp"

namespace {

using namespace ccopt;

RatVector seeded_vector(std::mt19937_64& rng, std::size_t d) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    RatVector v(d);
    bool nonzero = false;
    for (std::size_t j = 0; j < d; ++j) {
        v[j] = Rational(num(rng), den(rng));
        nonzero = nonzero || !v[j].is_zero();
    }
    if (!nonzero)
        v[0] = Rational(1);
    return v;
}

GeneratorSet seeded_generators(std::size_t m, std::size_t d) {
    std::mt19937_64 rng(1234500 + m * 10 + d);
    std::vector<RatVector> gens;
    gens.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        gens.push_back(seeded_vector(rng, d));
    return GeneratorSet(d, std::move(gens));
}

void BM_enumerate_vertices_d2(benchmark::State& state) {
    GeneratorSet gens = seeded_generators(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_vertices(gens).vertices.size());
}
BENCHMARK(BM_enumerate_vertices_d2)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_enumerate_vertices_d3(benchmark::State& state) {
    GeneratorSet gens = seeded_generators(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_vertices(gens).vertices.size());
}
BENCHMARK(BM_enumerate_vertices_d3)->Arg(8)->Arg(16)->Arg(24);

void BM_convex_maximize_powerset(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(98765);
    std::vector<RatVector> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        rows.push_back(seeded_vector(rng, 2));
    EdgeGuaranteedFamily fam = make_powerset_family(n);
    VectorWeighting w(std::move(rows));
    ConvexObjective obj = ConvexObjective::squared_l2();
    for (auto _ : state)
        benchmark::DoNotOptimize(convex_maximize(fam, w, obj).value);
}
BENCHMARK(BM_convex_maximize_powerset)->Arg(8)->Arg(16)->Arg(32);

void BM_convex_maximize_clustering(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(24680);
    std::vector<RatVector> points;
    points.reserve(2 * m);
    for (std::size_t i = 0; i < 2 * m; ++i)
        points.push_back(seeded_vector(rng, 1));
    auto [inst, obj] = clustering_to_instance(std::move(points), 2, m);
    EdgeGuaranteedFamily fam = make_partition_family(inst);
    VectorWeighting w = partition_weighting(inst);
    for (auto _ : state)
        benchmark::DoNotOptimize(convex_maximize(fam, w, obj).value);
}
BENCHMARK(BM_convex_maximize_clustering)->Arg(3)->Arg(5)->Arg(8);

void BM_linear_optimize_membership_only(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    EdgeGuaranteedFamily native = make_powerset_family(n);
    FamilyPresentation pres;
    pres.n = n;
    pres.membership = native.presentation.membership;
    EdgeGuaranteedFamily fam(n, std::move(pres), native.f0, native.edges);
    std::mt19937_64 rng(13579);
    std::uniform_int_distribution<int> value(0, 1 << 10);
    std::vector<Rational> values;
    values.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        values.push_back(Rational(value(rng)));
    ScalarWeighting b(n, std::move(values));
    for (auto _ : state)
        benchmark::DoNotOptimize(linear_optimize(fam, b).size());
}
BENCHMARK(BM_linear_optimize_membership_only)->Arg(8)->Arg(16)->Arg(32);

} // namespace

BENCHMARK_MAIN();
