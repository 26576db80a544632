#include "ccopt/matroid.hpp"

#include <algorithm>
#include <numeric>

namespace ccopt {

MatroidSpec MatroidSpec::uniform(std::size_t rank, std::size_t n, MatroidMode mode) {
    if (rank > n)
        throw std::invalid_argument("uniform matroid rank exceeds ground size");
    MatroidSpec s;
    s.kind = Kind::Uniform;
    s.n = n;
    s.uniform_rank = rank;
    s.mode = mode;
    return s;
}

MatroidSpec MatroidSpec::graphic(std::size_t vertices,
                                 std::vector<std::pair<std::size_t, std::size_t>> edges,
                                 MatroidMode mode) {
    for (const auto& [u, v] : edges)
        if (u < 1 || u > vertices || v < 1 || v > vertices)
            throw std::invalid_argument("graphic matroid edge references missing vertex");
    MatroidSpec s;
    s.kind = Kind::Graphic;
    s.n = edges.size();
    s.graph_vertices = vertices;
    s.graph_edges = std::move(edges);
    s.mode = mode;
    return s;
}

MatroidSpec MatroidSpec::linear(RatMatrix columns, MatroidMode mode) {
    MatroidSpec s;
    s.kind = Kind::Linear;
    s.n = columns.cols();
    s.columns = std::move(columns);
    s.mode = mode;
    return s;
}

namespace {

// Union-find cycle test for the graphic matroid.
bool forest(const MatroidSpec& spec, const Subset& f) {
    std::vector<std::size_t> parent(spec.graph_vertices + 1);
    std::iota(parent.begin(), parent.end(), std::size_t(0));
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t j : f.members) {
        const auto& [u, v] = spec.graph_edges[j - 1];
        std::size_t ru = find(u), rv = find(v);
        if (ru == rv)
            return false;
        parent[ru] = rv;
    }
    return true;
}

bool columns_independent(const MatroidSpec& spec, const Subset& f) {
    if (f.size() == 0)
        return true;
    RatMatrix sub(f.size(), spec.columns.rows());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t r = 0; r < spec.columns.rows(); ++r)
            sub.at(i, r) = spec.columns.at(r, f.members[i] - 1);
    return rank_rational(sub) == f.size();
}

} // namespace

bool matroid_independent(const MatroidSpec& spec, const Subset& f) {
    switch (spec.kind) {
    case MatroidSpec::Kind::Uniform:
        return f.size() <= spec.uniform_rank;
    case MatroidSpec::Kind::Graphic:
        return forest(spec, f);
    case MatroidSpec::Kind::Linear:
        return columns_independent(spec, f);
    }
    throw std::logic_error("unreachable matroid kind");
}

std::size_t matroid_rank(const MatroidSpec& spec) {
    std::vector<std::size_t> members;
    for (std::size_t j = 1; j <= spec.n; ++j) {
        members.push_back(j);
        if (!matroid_independent(spec, Subset(spec.n, members)))
            members.pop_back();
    }
    return members.size();
}

Subset matroid_greedy(const MatroidSpec& spec, const ScalarWeighting& b) {
    if (b.n != spec.n)
        throw std::invalid_argument("matroid_greedy: weighting size mismatch");
    std::vector<std::size_t> order(spec.n);
    std::iota(order.begin(), order.end(), std::size_t(1));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return b.of(x) > b.of(y);
    });
    std::vector<std::size_t> picked;
    for (std::size_t j : order) {
        if (spec.mode == MatroidMode::Independent && b.of(j).sign() <= 0)
            continue;
        picked.push_back(j);
        if (!matroid_independent(spec, Subset(spec.n, picked)))
            picked.pop_back();
    }
    return Subset(spec.n, std::move(picked));
}

GeneratorSet matroid_edge_directions(std::size_t n, MatroidMode mode) {
    if (n < 1)
        throw std::invalid_argument("matroid_edge_directions: n >= 1 required");
    std::vector<RatVector> dirs;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            RatVector e(n);
            e[i - 1] = 1;
            e[j - 1] = -1;
            dirs.push_back(std::move(e));
        }
    }
    if (mode == MatroidMode::Independent) {
        for (std::size_t i = 1; i <= n; ++i) {
            RatVector e(n);
            e[i - 1] = 1;
            dirs.push_back(std::move(e));
        }
    }
    return GeneratorSet(n, std::move(dirs));
}

EdgeGuaranteedFamily make_matroid_family(const MatroidSpec& spec) {
    const std::size_t rank = matroid_rank(spec);
    FamilyPresentation pres;
    pres.n = spec.n;
    pres.stateless = true;
    if (spec.mode == MatroidMode::Bases) {
        pres.membership = [spec, rank](const Subset& f) {
            return f.size() == rank && matroid_independent(spec, f);
        };
    } else {
        pres.membership = [spec](const Subset& f) { return matroid_independent(spec, f); };
    }
    pres.linear = [spec](const ScalarWeighting& b) { return matroid_greedy(spec, b); };

    Subset f0 = spec.mode == MatroidMode::Bases
                    ? matroid_greedy(spec, ScalarWeighting(spec.n,
                                                           std::vector<Rational>(spec.n)))
                    : Subset(spec.n, {});
    return EdgeGuaranteedFamily(spec.n, std::move(pres), std::move(f0),
                                matroid_edge_directions(spec.n, spec.mode));
}

} // namespace ccopt
