#include "ccopt/reduce.hpp"

#include <stdexcept>
#include <thread>

namespace ccopt {

Rational evaluate_objective(const ConvexObjective& c, const RatVector& x) {
    switch (c.kind) {
    case ConvexObjective::Kind::SquaredL2: {
        Rational acc;
        for (const auto& v : x)
            acc += v * v;
        return acc;
    }
    case ConvexObjective::Kind::Linear:
        return inner_product(c.linear_coeffs, x); // checks dimensions
    case ConvexObjective::Kind::MaxCoordinate: {
        if (x.dim() == 0)
            throw std::invalid_argument("max_coordinate of empty vector");
        Rational best = x[0];
        for (std::size_t i = 1; i < x.dim(); ++i)
            if (x[i] > best)
                best = x[i];
        return best;
    }
    case ConvexObjective::Kind::Custom:
        if (!c.callback)
            throw std::invalid_argument("custom objective without callback");
        return c.callback(x);
    }
    throw std::logic_error("unreachable objective kind");
}

RatVector subset_weight(const VectorWeighting& w, const Subset& f) {
    RatVector acc(w.d);
    for (std::size_t j : f.members)
        acc += w.rows[j - 1];
    return acc;
}

SolveReport convex_maximize(const EdgeGuaranteedFamily& fam, const VectorWeighting& w,
                            const ConvexObjective& c, const SolveOptions& opts) {
    if (fam.n != w.n)
        throw std::invalid_argument("convex_maximize: weighting rows != ground-set size");

    SolveReport report;

    bool all_zero = true;
    GeneratorSet projected;
    if (fam.edges.size() > 0) {
        projected = project_generators(fam.edges, w);
        for (bool z : projected.zero)
            if (!z) {
                all_zero = false;
                break;
            }
    }
    if (all_zero) {
        // conv{w(F)} is a single point: any member is optimal.
        report.degenerate = true;
        report.optimum = fam.f0;
        report.optimum_weight = subset_weight(w, fam.f0);
        report.value = evaluate_objective(c, report.optimum_weight);
        report.evaluation_queries = 1;
        return report;
    }

    const ZonotopeVertexList verts = enumerate_vertices(projected);
    const std::size_t k = verts.vertices.size();
    report.zonotope_vertices = k;
    report.candidates.resize(k);

    std::vector<AugmentationStats> stats(k);
    auto run_query = [&](std::size_t i) {
        const ZonotopeVertex& u = verts.vertices[i];
        std::vector<Rational> b(fam.n);
        for (std::size_t j = 0; j < fam.n; ++j)
            b[j] = inner_product(u.witness, w.rows[j]);
        SolveCandidate cand;
        cand.signs = u.signs;
        cand.vertex = u.point;
        cand.witness = u.witness;
        cand.member = linear_optimize(fam, ScalarWeighting(fam.n, std::move(b)), &stats[i]);
        cand.weight = subset_weight(w, cand.member);
        report.candidates[i] = std::move(cand);
    };

    unsigned jobs = opts.jobs;
    if (!fam.presentation.stateless)
        jobs = 1;
    if (jobs > 1 && k > 1) {
        const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(k));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < k; i += workers)
                    run_query(i);
            });
        for (auto& th : pool)
            th.join();
    } else {
        for (std::size_t i = 0; i < k; ++i)
            run_query(i);
    }

    report.oracle_queries = k;
    for (const auto& s : stats) {
        report.augmentation.membership_calls += s.membership_calls;
        report.augmentation.augmentations += s.augmentations;
        report.augmentation.phases += s.phases;
    }

    // Evaluate and pick the best candidate; value ties resolve to the
    // lexicographically smallest member, matching exhaustive enumeration.
    std::size_t best = 0;
    for (std::size_t i = 0; i < k; ++i) {
        report.candidates[i].value = evaluate_objective(c, report.candidates[i].weight);
        if (i == 0)
            continue;
        if (report.candidates[i].value > report.candidates[best].value ||
            (report.candidates[i].value == report.candidates[best].value &&
             report.candidates[i].member < report.candidates[best].member))
            best = i;
    }
    report.evaluation_queries = k;
    report.optimum = report.candidates[best].member;
    report.optimum_weight = report.candidates[best].weight;
    report.value = report.candidates[best].value;
    return report;
}

} // namespace ccopt
