#include "ccopt/partition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "ccopt/errors.hpp"

namespace ccopt {

ShapedPartitionInstance::ShapedPartitionInstance(std::vector<RatVector> pts,
                                                 std::size_t parts,
                                                 std::vector<std::size_t> l,
                                                 std::vector<std::size_t> u)
    : n(pts.size()), p(parts), points(std::move(pts)), lower(std::move(l)),
      upper(std::move(u)) {
    if (n < 1 || p < 1)
        throw std::invalid_argument("shaped partition needs n >= 1 and p >= 1");
    d = points[0].dim();
    for (const auto& v : points)
        if (v.dim() != d)
            throw std::invalid_argument("partition points of unequal dimension");
    if (lower.size() != p || upper.size() != p)
        throw std::invalid_argument("shape bound lists must have length p");
    std::size_t lsum = 0, usum = 0;
    for (std::size_t j = 0; j < p; ++j) {
        if (lower[j] > upper[j] || upper[j] > n)
            throw std::invalid_argument("shape bounds need l <= u <= n per part");
        lsum += lower[j];
        usum += upper[j];
    }
    if (lsum > n || usum < n)
        throw InfeasibleError("no admissible shape: need sum(l) <= n <= sum(u), got " +
                              std::to_string(lsum) + " <= " + std::to_string(n) +
                              " <= " + std::to_string(usum));
    unrestricted = true;
    for (std::size_t j = 0; j < p; ++j)
        if (lower[j] != 0 || upper[j] != n)
            unrestricted = false;
}

ShapedPartitionInstance ShapedPartitionInstance::free_shape(std::vector<RatVector> pts,
                                                            std::size_t parts) {
    const std::size_t n = pts.size();
    return ShapedPartitionInstance(std::move(pts), parts,
                                   std::vector<std::size_t>(parts, 0),
                                   std::vector<std::size_t>(parts, n));
}

Subset partition_to_subset(const ShapedPartitionInstance& inst, const Partition& part) {
    if (part.items() != inst.n)
        throw std::invalid_argument("partition item count mismatch");
    std::vector<std::size_t> members;
    members.reserve(inst.n);
    for (std::size_t i = 1; i <= inst.n; ++i)
        members.push_back(inst.flat(i, part.part_of[i - 1]));
    return Subset(inst.ground_size(), std::move(members));
}

std::optional<Partition> partition_from_subset(const ShapedPartitionInstance& inst,
                                               const Subset& f) {
    if (f.n != inst.ground_size() || f.size() != inst.n)
        return std::nullopt;
    std::vector<std::size_t> assignment(inst.n, 0);
    for (std::size_t e : f.members) {
        const std::size_t i = (e - 1) / inst.p + 1;
        const std::size_t j = (e - 1) % inst.p + 1;
        if (assignment[i - 1] != 0)
            return std::nullopt; // item in two parts
        assignment[i - 1] = j;
    }
    for (std::size_t j : assignment)
        if (j == 0)
            return std::nullopt; // item unassigned
    return Partition(inst.p, std::move(assignment));
}

RatMatrix transportation_constraint_matrix(std::size_t n, std::size_t p) {
    RatMatrix a(n + p, (n + 1) * p);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= p; ++j)
            a.at(i - 1, i * p + (j - 1)) = 1;
    for (std::size_t j = 1; j <= p; ++j)
        for (std::size_t i = 0; i <= n; ++i)
            a.at(n + (j - 1), i * p + (j - 1)) = 1;
    return a;
}

namespace {

// Emits every cycle of K_{n+1,p} through >= 2 vertices per side exactly once:
// anchored at its smallest left vertex, remaining left order and right order
// permuted, traversal direction fixed by first-right < last-right.
template <typename Fn>
void for_each_cycle(std::size_t n, std::size_t p, Fn&& emit) {
    const std::size_t left_count = n + 1;
    const std::size_t max_len = std::min(p, left_count);
    for (std::size_t len = 2; len <= max_len; ++len) {
        std::vector<std::size_t> lsel(len), rsel(len);
        // subsets of {0..n} of size len, lexicographic
        std::vector<std::size_t> lidx(len);
        std::iota(lidx.begin(), lidx.end(), std::size_t(0));
        for (;;) {
            std::vector<std::size_t> ridx(len);
            std::iota(ridx.begin(), ridx.end(), std::size_t(0));
            for (;;) {
                for (std::size_t t = 0; t < len; ++t) {
                    lsel[t] = lidx[t];
                    rsel[t] = ridx[t] + 1;
                }
                // permute the non-anchor lefts and all rights
                std::vector<std::size_t> lperm(lsel.begin() + 1, lsel.end());
                std::sort(lperm.begin(), lperm.end());
                do {
                    std::vector<std::size_t> rperm = rsel;
                    std::sort(rperm.begin(), rperm.end());
                    do {
                        if (rperm.front() > rperm.back())
                            continue; // the reversed traversal is canonical
                        std::vector<std::size_t> lefts;
                        lefts.reserve(len);
                        lefts.push_back(lsel[0]);
                        lefts.insert(lefts.end(), lperm.begin(), lperm.end());
                        emit(lefts, rperm);
                    } while (std::next_permutation(rperm.begin(), rperm.end()));
                } while (std::next_permutation(lperm.begin(), lperm.end()));

                // next right subset
                std::size_t k = len;
                while (k > 0 && ridx[k - 1] == p - len + (k - 1))
                    --k;
                if (k == 0)
                    break;
                ++ridx[k - 1];
                for (std::size_t t = k; t < len; ++t)
                    ridx[t] = ridx[t - 1] + 1;
            }
            // next left subset
            std::size_t k = len;
            while (k > 0 && lidx[k - 1] == left_count - len + (k - 1))
                --k;
            if (k == 0)
                break;
            ++lidx[k - 1];
            for (std::size_t t = k; t < len; ++t)
                lidx[t] = lidx[t - 1] + 1;
        }
    }
}

} // namespace

std::vector<RatVector> transportation_circuits(std::size_t n, std::size_t p) {
    const std::size_t dim = (n + 1) * p;
    std::vector<RatVector> out;
    for_each_cycle(n, p, [&](const std::vector<std::size_t>& lefts,
                             const std::vector<std::size_t>& rights) {
        const std::size_t len = lefts.size();
        RatVector v(dim);
        for (std::size_t t = 0; t < len; ++t) {
            const std::size_t fwd = lefts[t] * p + (rights[t] - 1);
            const std::size_t bwd = lefts[(t + 1) % len] * p + (rights[t] - 1);
            v[fwd] += 1;
            v[bwd] -= 1;
        }
        for (std::size_t idx = 0; idx < dim; ++idx) {
            if (v[idx].is_zero())
                continue;
            if (v[idx].sign() < 0)
                v = -v;
            break;
        }
        out.push_back(std::move(v));
    });
    return out;
}

Int circuit_count_formula(std::size_t n, std::size_t p) {
    Int total = 0;
    const std::size_t max_len = std::min(p, n + 1);
    for (std::size_t i = 2; i <= max_len; ++i) {
        Int c1, c2, f1, f2;
        mpz_bin_uiui(c1.get_mpz_t(), static_cast<unsigned long>(p),
                     static_cast<unsigned long>(i));
        mpz_bin_uiui(c2.get_mpz_t(), static_cast<unsigned long>(n + 1),
                     static_cast<unsigned long>(i));
        mpz_fac_ui(f1.get_mpz_t(), static_cast<unsigned long>(i));
        mpz_fac_ui(f2.get_mpz_t(), static_cast<unsigned long>(i - 1));
        total += c1 * c2 * f1 * f2 / 2;
    }
    return total;
}

GeneratorSet partition_edge_directions(const ShapedPartitionInstance& inst) {
    const std::size_t np = inst.ground_size();
    std::vector<RatVector> dirs;
    if (inst.unrestricted) {
        for (std::size_t i = 1; i <= inst.n; ++i) {
            for (std::size_t j1 = 1; j1 <= inst.p; ++j1) {
                for (std::size_t j2 = j1 + 1; j2 <= inst.p; ++j2) {
                    RatVector e(np);
                    e[inst.flat(i, j1) - 1] = 1;
                    e[inst.flat(i, j2) - 1] = -1;
                    dirs.push_back(std::move(e));
                }
            }
        }
        if (dirs.empty()) {
            // p = 1: a single admissible assignment; point polytope.
            return GeneratorSet(np, {});
        }
        return GeneratorSet(np, std::move(dirs));
    }
    for (const RatVector& lifted : transportation_circuits(inst.n, inst.p)) {
        RatVector e(np);
        for (std::size_t idx = inst.p; idx < lifted.dim(); ++idx)
            e[idx - inst.p] = lifted[idx];
        dirs.push_back(std::move(e));
    }
    return GeneratorSet(np, std::move(dirs));
}

namespace {

struct FlowArc {
    std::size_t to;
    std::size_t rev;
    long cap;
    Int cost;
};

class FlowGraph {
public:
    explicit FlowGraph(std::size_t nodes) : adj_(nodes) {}

    void add(std::size_t u, std::size_t v, long cap, Int cost) {
        adj_[u].push_back(FlowArc{v, adj_[v].size(), cap, cost});
        adj_[v].push_back(FlowArc{u, adj_[u].size() - 1, 0, -cost});
    }

    // One unit along a minimum-cost augmenting path (Bellman-Ford; the
    // residual graph of successive shortest paths has no negative cycles).
    bool push_unit(std::size_t s, std::size_t t) {
        const std::size_t nn = adj_.size();
        std::vector<bool> reached(nn, false);
        std::vector<Int> dist(nn, 0);
        std::vector<std::pair<std::size_t, std::size_t>> pred(nn, {nn, 0});
        reached[s] = true;
        for (std::size_t round = 0; round + 1 < nn; ++round) {
            bool changed = false;
            for (std::size_t u = 0; u < nn; ++u) {
                if (!reached[u])
                    continue;
                for (std::size_t ai = 0; ai < adj_[u].size(); ++ai) {
                    const FlowArc& arc = adj_[u][ai];
                    if (arc.cap <= 0)
                        continue;
                    Int nd = dist[u] + arc.cost;
                    if (!reached[arc.to] || nd < dist[arc.to]) {
                        reached[arc.to] = true;
                        dist[arc.to] = std::move(nd);
                        pred[arc.to] = {u, ai};
                        changed = true;
                    }
                }
            }
            if (!changed)
                break;
        }
        if (!reached[t])
            return false;
        std::size_t v = t;
        while (v != s) {
            auto [u, ai] = pred[v];
            FlowArc& fwd = adj_[u][ai];
            --fwd.cap;
            ++adj_[fwd.to][fwd.rev].cap;
            v = u;
        }
        return true;
    }

    const std::vector<FlowArc>& arcs(std::size_t u) const { return adj_[u]; }

private:
    std::vector<std::vector<FlowArc>> adj_;
};

} // namespace

Partition partition_linear_opt(const ShapedPartitionInstance& inst,
                               const ScalarWeighting& b) {
    if (b.n != inst.ground_size())
        throw std::invalid_argument("partition_linear_opt: weighting over np expected");

    if (inst.unrestricted) {
        std::vector<std::size_t> assignment(inst.n);
        for (std::size_t i = 1; i <= inst.n; ++i) {
            std::size_t best = 1;
            for (std::size_t j = 2; j <= inst.p; ++j)
                if (b.of(inst.flat(i, j)) > b.of(inst.flat(i, best)))
                    best = j;
            assignment[i - 1] = best;
        }
        return Partition(inst.p, std::move(assignment));
    }

    RatVector bvec(std::vector<Rational>(b.values));
    IntVector a = clear_denominators(bvec).first;
    Int maxabs = 0;
    for (const auto& x : a) {
        Int ax = abs(x);
        if (ax > maxabs)
            maxabs = ax;
    }
    // Lower bounds via a reward large enough to dominate any reassignment.
    const Int big = Int(inst.n) * (maxabs + 1) + 1;

    const std::size_t source = 0;
    const std::size_t item0 = 1;                  // items at 1..n
    const std::size_t part0 = inst.n + 1;         // parts at n+1..n+p
    const std::size_t sink = inst.n + inst.p + 1;
    FlowGraph g(inst.n + inst.p + 2);
    for (std::size_t i = 1; i <= inst.n; ++i)
        g.add(source, item0 + (i - 1), 1, 0);
    for (std::size_t i = 1; i <= inst.n; ++i)
        for (std::size_t j = 1; j <= inst.p; ++j)
            g.add(item0 + (i - 1), part0 + (j - 1), 1, -a[inst.flat(i, j) - 1]);
    for (std::size_t j = 1; j <= inst.p; ++j) {
        if (inst.lower[j - 1] > 0)
            g.add(part0 + (j - 1), sink, static_cast<long>(inst.lower[j - 1]), -big);
        if (inst.upper[j - 1] > inst.lower[j - 1])
            g.add(part0 + (j - 1), sink,
                  static_cast<long>(inst.upper[j - 1] - inst.lower[j - 1]), 0);
    }
    for (std::size_t unit = 0; unit < inst.n; ++unit)
        if (!g.push_unit(source, sink))
            throw std::logic_error("transportation flow infeasible despite valid bounds");

    // Forward item->part arcs have capacity 1: used iff residual 0.
    std::vector<std::size_t> assignment(inst.n, 0);
    for (std::size_t i = 1; i <= inst.n; ++i)
        for (const FlowArc& arc : g.arcs(item0 + (i - 1)))
            if (arc.to >= part0 && arc.to < part0 + inst.p && arc.cap == 0)
                assignment[i - 1] = arc.to - part0 + 1;
#ifndef NDEBUG
    {
        Partition check(inst.p, assignment);
        const std::vector<std::size_t> shape = check.shape(inst.p);
        for (std::size_t j = 0; j < inst.p; ++j)
            assert(shape[j] >= inst.lower[j] && shape[j] <= inst.upper[j]);
    }
#endif
    return Partition(inst.p, std::move(assignment));
}

VectorWeighting partition_weighting(const ShapedPartitionInstance& inst) {
    const std::size_t dp = inst.d * inst.p;
    std::vector<RatVector> rows;
    rows.reserve(inst.ground_size());
    for (std::size_t i = 1; i <= inst.n; ++i) {
        for (std::size_t j = 1; j <= inst.p; ++j) {
            RatVector row(dp);
            for (std::size_t t = 1; t <= inst.d; ++t)
                row[(t - 1) * inst.p + (j - 1)] = inst.points[i - 1][t - 1];
            rows.push_back(std::move(row));
        }
    }
    return VectorWeighting(std::move(rows));
}

EdgeGuaranteedFamily make_partition_family(const ShapedPartitionInstance& inst) {
    FamilyPresentation pres;
    pres.n = inst.ground_size();
    pres.stateless = true;
    pres.membership = [inst](const Subset& f) {
        std::optional<Partition> part = partition_from_subset(inst, f);
        if (!part)
            return false;
        const std::vector<std::size_t> shape = part->shape(inst.p);
        for (std::size_t j = 0; j < inst.p; ++j)
            if (shape[j] < inst.lower[j] || shape[j] > inst.upper[j])
                return false;
        return true;
    };
    pres.linear = [inst](const ScalarWeighting& b) {
        return partition_to_subset(inst, partition_linear_opt(inst, b));
    };

    // F0: meet lower bounds, then fill leftovers left to right within upper
    // bounds; items assigned in index order.
    std::vector<std::size_t> shape = inst.lower;
    std::size_t rem = inst.n;
    for (std::size_t j = 0; j < inst.p; ++j)
        rem -= shape[j];
    for (std::size_t j = 0; j < inst.p && rem > 0; ++j) {
        const std::size_t room = inst.upper[j] - shape[j];
        const std::size_t take = std::min(room, rem);
        shape[j] += take;
        rem -= take;
    }
    std::vector<std::size_t> assignment;
    assignment.reserve(inst.n);
    for (std::size_t j = 1; j <= inst.p; ++j)
        assignment.insert(assignment.end(), shape[j - 1], j);
    const Partition f0(inst.p, assignment);

    return EdgeGuaranteedFamily(inst.ground_size(), std::move(pres),
                                partition_to_subset(inst, f0),
                                partition_edge_directions(inst));
}

} // namespace ccopt
