#include "ccopt/zonotope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "ccopt/lp.hpp"

namespace ccopt {

namespace {

// A generator class: all generators proportional to one primitive integer
// direction, folded into a single representative rep = (sum of |lambda_i|) * dir.
// Folding is sound because proportional generators share their hyperplane:
// within any open cell all of them take determined signs, and the vertex sum
// over the class equals (class sign) * rep.
struct DirectionClass {
    IntVector dir;                                   // primitive, first nonzero entry > 0
    RatVector rep;                                   // aligned sum of member generators
    std::vector<std::pair<std::size_t, int>> members; // (generator index, sign rel. to dir)
};

std::vector<DirectionClass> fold_directions(const GeneratorSet& gens) {
    std::vector<DirectionClass> classes;
    std::map<IntVector, std::size_t> index_of;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens.zero[i])
            continue;
        const RatVector& e = gens.generators[i];
        IntVector dir = primitive_direction(e);
        int rel = 1;
        for (const auto& x : dir) {
            if (x == 0)
                continue;
            if (x < 0) {
                rel = -1;
                for (auto& y : dir)
                    y = -y;
            }
            break;
        }
        auto [it, fresh] = index_of.try_emplace(dir, classes.size());
        if (fresh) {
            DirectionClass c;
            c.dir = dir;
            c.rep = RatVector(gens.dim);
            classes.push_back(std::move(c));
        }
        DirectionClass& c = classes[it->second];
        // |lambda| with e = lambda * dir, read off any nonzero coordinate.
        std::size_t j0 = 0;
        while (c.dir[j0] == 0)
            ++j0;
        Rational lam_abs = abs(e[j0] / Rational(c.dir[j0]));
        for (std::size_t j = 0; j < gens.dim; ++j)
            c.rep[j] += lam_abs * Rational(c.dir[j]);
        c.members.emplace_back(i, rel);
    }
    return classes;
}

struct TightSet {
    std::vector<std::uint64_t> w;

    explicit TightSet(std::size_t nbits) : w((nbits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    TightSet intersect(const TightSet& o) const {
        TightSet r = *this;
        for (std::size_t k = 0; k < w.size(); ++k)
            r.w[k] &= o.w[k];
        return r;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto word : w)
            c += static_cast<std::size_t>(__builtin_popcountll(word));
        return c;
    }
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < w.size(); ++k) {
            std::uint64_t word = w[k];
            while (word) {
                unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
                fn(k * 64 + bit);
                word &= word - 1;
            }
        }
    }
};

// One (partial) chamber of the central arrangement, in coordinates with
// respect to a row basis of the generator span.  The cone is
// span(lines) + cone(rays); tight[i] records which inserted hyperplanes
// contain rays[i].
struct Cell {
    std::vector<std::int8_t> signs;
    std::vector<IntVector> lines;
    std::vector<IntVector> rays;
    std::vector<TightSet> tight;
};

// Two extreme rays span a 2-face of the chamber iff the hyperplanes tight at
// both have rank exactly (pointed dimension - 2).  Exact regardless of
// coinciding or redundant hyperplanes.
bool rays_adjacent(const Cell& cell, std::size_t i, std::size_t j,
                   const std::vector<IntVector>& normals, std::size_t rank_dim) {
    const std::size_t q = rank_dim - cell.lines.size();
    TightSet common = cell.tight[i].intersect(cell.tight[j]);
    if (common.count() + 2 < q)
        return false;
    std::vector<IntVector> rows;
    common.for_each([&](std::size_t idx) { rows.push_back(normals[idx]); });
    return rank_int_rows(rows) + 2 == q;
}

TightSet recompute_tight(const IntVector& ray, const std::vector<IntVector>& normals,
                         std::size_t upto) {
    TightSet t(normals.size());
    for (std::size_t s = 0; s < upto; ++s)
        if (dot(normals[s], ray) == 0)
            t.set(s);
    return t;
}

// Reduced row echelon form over Q; returns pivot columns, truncates `rows`
// to the nonzero echelon rows.
std::vector<std::size_t> rref(std::vector<RatVector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col].is_zero())
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        Rational inv = Rational(1) / rows[r][col];
        rows[r] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero())
                continue;
            Rational f = rows[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Inverse of a nonsingular rational matrix by Gauss-Jordan.
std::vector<RatVector> invert(std::vector<RatVector> m) {
    const std::size_t n = m.size();
    std::vector<RatVector> inv(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m[p][col].is_zero())
            ++p;
        if (p == n)
            throw std::logic_error("singular matrix in witness back-map");
        std::swap(m[col], m[p]);
        std::swap(inv[col], inv[p]);
        Rational f = Rational(1) / m[col][col];
        m[col] *= f;
        inv[col] *= f;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col].is_zero())
                continue;
            Rational g = m[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= g * m[col][j];
                inv[i][j] -= g * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

std::size_t GeneratorSet::nonproportional_count() const {
    std::map<IntVector, bool> seen;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (zero[i])
            continue;
        IntVector dir = primitive_direction(generators[i]);
        for (const auto& x : dir) {
            if (x == 0)
                continue;
            if (x < 0)
                for (auto& y : dir)
                    y = -y;
            break;
        }
        seen.emplace(std::move(dir), true);
    }
    return seen.size();
}

Int vertex_count_bound(std::size_t m, std::size_t d) {
    if (m < 1 || d < 1)
        throw std::invalid_argument("vertex_count_bound requires m >= 1 and d >= 1");
    Int total = 0;
    Int binom;
    for (std::size_t i = 0; i < d && i <= m - 1; ++i) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m - 1),
                     static_cast<unsigned long>(i));
        total += binom;
    }
    return 2 * total;
}

std::optional<RatVector> cell_witness(const GeneratorSet& gens, const SignVector& signs) {
    if (signs.size() != gens.size())
        throw std::invalid_argument("cell_witness: sign vector length mismatch");
    const std::size_t d = gens.dim;

    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!gens.zero[i])
            active.push_back(i);
    if (active.empty())
        return RatVector(d); // vacuous: no strict constraints

    // Variables: a+ (d), a- (d), t.  Maximize t subject to
    //   t - signs[i] * ((a+ - a-) . e^i) <= 0   for each nonzero generator,
    //   a+_j, a-_j, t <= 1, all variables >= 0.
    const std::size_t nvars = 2 * d + 1;
    RatMatrix a(active.size() + nvars, nvars);
    std::vector<Rational> b(active.size() + nvars);
    std::vector<Rational> c(nvars);
    for (std::size_t row = 0; row < active.size(); ++row) {
        const RatVector& e = gens.generators[active[row]];
        const Rational s(signs[active[row]]);
        for (std::size_t j = 0; j < d; ++j) {
            a.at(row, j) = -s * e[j];
            a.at(row, d + j) = s * e[j];
        }
        a.at(row, 2 * d) = 1;
        b[row] = 0;
    }
    for (std::size_t v = 0; v < nvars; ++v) {
        a.at(active.size() + v, v) = 1;
        b[active.size() + v] = 1;
    }
    c[2 * d] = 1;

    LpSolution sol = simplex_maximize(a, b, c);
    assert(sol.status == LpStatus::Optimal); // box-bounded by construction
    if (sol.value.sign() <= 0)
        return std::nullopt;
    RatVector witness(d);
    for (std::size_t j = 0; j < d; ++j)
        witness[j] = sol.x[j] - sol.x[d + j];
    return witness;
}

ZonotopeVertexList enumerate_vertices(const GeneratorSet& gens) {
    if (gens.size() < 1)
        throw std::invalid_argument("enumerate_vertices: no generators");
    std::vector<DirectionClass> classes = fold_directions(gens);
    if (classes.empty())
        throw std::invalid_argument(
            "enumerate_vertices: all generators are zero (zonotope is a point)");

    const std::size_t d = gens.dim;
    const std::size_t mc = classes.size();

    // Row basis of the generator span and coordinates of each class rep.
    std::vector<RatVector> basis;
    basis.reserve(mc);
    for (const auto& c : classes)
        basis.push_back(c.rep);
    const std::vector<std::size_t> pivots = rref(basis, d);
    const std::size_t r = basis.size();

    // In reduced echelon form the pivot columns carry identity structure, so
    // any vector in the row span has coordinates = its pivot-column entries.
    std::vector<IntVector> normals; // primitive integer coordinate rows
    normals.reserve(mc);
    for (const auto& c : classes) {
        RatVector coord(r);
        for (std::size_t t = 0; t < r; ++t)
            coord[t] = c.rep[pivots[t]];
        IntVector h = clear_denominators(coord).first;
        make_primitive(h);
        normals.push_back(std::move(h));
    }

    // Back-map P = B^T (B B^T)^{-1}: for x in coordinate space, a = P x is an
    // ambient functional with a . rep_c = coord_c . x for every class.
    std::vector<RatVector> gram(r, RatVector(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            gram[i][j] = inner_product(basis[i], basis[j]);
    const std::vector<RatVector> gram_inv = invert(std::move(gram));

    // Exact incremental chamber enumeration (double description): cells are
    // chambers of the arrangement of the already-inserted hyperplanes.
    std::vector<Cell> cells(1);
    {
        Cell& root = cells[0];
        root.lines.reserve(r);
        for (std::size_t i = 0; i < r; ++i) {
            IntVector axis(r, 0);
            axis[i] = 1;
            root.lines.push_back(std::move(axis));
        }
    }

    for (std::size_t t = 0; t < mc; ++t) {
        const IntVector& h = normals[t];
        std::vector<Cell> next;
        next.reserve(cells.size() + cells.size() / 2);
        for (Cell& cell : cells) {
            // Line phase: if the hyperplane cuts the lineality space, both
            // sides are nonempty and the lineality drops by one.
            std::size_t crossing = cell.lines.size();
            Int alpha;
            for (std::size_t li = 0; li < cell.lines.size(); ++li) {
                alpha = dot(h, cell.lines[li]);
                if (alpha != 0) {
                    crossing = li;
                    break;
                }
            }
            if (crossing < cell.lines.size()) {
                IntVector l0 = cell.lines[crossing];
                if (alpha < 0) {
                    for (auto& x : l0)
                        x = -x;
                    alpha = -alpha;
                }
                std::vector<IntVector> new_lines;
                new_lines.reserve(cell.lines.size() - 1);
                for (std::size_t li = 0; li < cell.lines.size(); ++li) {
                    if (li == crossing)
                        continue;
                    Int beta = dot(h, cell.lines[li]);
                    IntVector l(r);
                    for (std::size_t j = 0; j < r; ++j)
                        l[j] = alpha * cell.lines[li][j] - beta * l0[j];
                    make_primitive(l);
                    new_lines.push_back(std::move(l));
                }
                std::vector<IntVector> shifted;
                shifted.reserve(cell.rays.size() + 1);
                for (const auto& ray : cell.rays) {
                    Int beta = dot(h, ray);
                    IntVector v(r);
                    for (std::size_t j = 0; j < r; ++j)
                        v[j] = alpha * ray[j] - beta * l0[j];
                    make_primitive(v);
                    shifted.push_back(std::move(v));
                }
                for (int side = 0; side < 2; ++side) {
                    Cell child;
                    child.signs = cell.signs;
                    child.signs.push_back(side == 0 ? 1 : -1);
                    child.lines = new_lines;
                    child.rays = shifted;
                    IntVector axis = l0;
                    if (side == 1)
                        for (auto& x : axis)
                            x = -x;
                    child.rays.push_back(std::move(axis));
                    child.tight.reserve(child.rays.size());
                    for (const auto& ray : child.rays)
                        child.tight.push_back(recompute_tight(ray, normals, t + 1));
                    next.push_back(std::move(child));
                }
                continue;
            }

            // Ray phase: the hyperplane contains all lines of this cell.
            std::vector<Int> side(cell.rays.size());
            std::vector<std::size_t> pos, neg, zero;
            for (std::size_t k = 0; k < cell.rays.size(); ++k) {
                side[k] = dot(h, cell.rays[k]);
                if (side[k] > 0)
                    pos.push_back(k);
                else if (side[k] < 0)
                    neg.push_back(k);
                else
                    zero.push_back(k);
            }
            if (pos.empty() && neg.empty())
                throw std::logic_error("chamber degenerated to a hyperplane");

            if (neg.empty() || pos.empty()) {
                const int sign = neg.empty() ? 1 : -1;
                Cell child;
                child.signs = cell.signs;
                child.signs.push_back(sign);
                child.lines = std::move(cell.lines);
                child.rays = std::move(cell.rays);
                child.tight = std::move(cell.tight);
                for (std::size_t k : zero)
                    child.tight[k].set(t);
                next.push_back(std::move(child));
                continue;
            }

            // Genuine split: each adjacent (pos, neg) pair contributes the
            // unique new extreme ray on the hyperplane.
            std::vector<IntVector> fresh;
            std::vector<TightSet> fresh_tight;
            for (std::size_t i : pos) {
                for (std::size_t j : neg) {
                    if (!rays_adjacent(cell, i, j, normals, r))
                        continue;
                    IntVector z(r);
                    for (std::size_t x = 0; x < r; ++x)
                        z[x] = side[i] * cell.rays[j][x] - side[j] * cell.rays[i][x];
                    make_primitive(z);
                    TightSet ts = cell.tight[i].intersect(cell.tight[j]);
                    ts.set(t);
                    fresh.push_back(std::move(z));
                    fresh_tight.push_back(std::move(ts));
                }
            }
            for (int s = 0; s < 2; ++s) {
                const std::vector<std::size_t>& keep = s == 0 ? pos : neg;
                Cell child;
                child.signs = cell.signs;
                child.signs.push_back(s == 0 ? 1 : -1);
                child.lines = cell.lines;
                for (std::size_t k : keep) {
                    child.rays.push_back(cell.rays[k]);
                    child.tight.push_back(cell.tight[k]);
                }
                for (std::size_t k : zero) {
                    child.rays.push_back(cell.rays[k]);
                    TightSet ts = cell.tight[k];
                    ts.set(t);
                    child.tight.push_back(std::move(ts));
                }
                for (std::size_t k = 0; k < fresh.size(); ++k) {
                    child.rays.push_back(fresh[k]);
                    child.tight.push_back(fresh_tight[k]);
                }
                next.push_back(std::move(child));
            }
        }
        cells = std::move(next);
    }

    // Assemble vertices: interior witness = sum of extreme rays, mapped back
    // to ambient space and scaled primitive-integer.
    ZonotopeVertexList out;
    out.generator_set = gens;
    out.vertices.reserve(cells.size());
    for (const Cell& cell : cells) {
        assert(cell.lines.empty());
        IntVector interior(r, 0);
        for (const auto& ray : cell.rays)
            for (std::size_t j = 0; j < r; ++j)
                interior[j] += ray[j];

        RatVector coord(r);
        for (std::size_t j = 0; j < r; ++j)
            coord[j] = Rational(interior[j]);
        // a = B^T (gram_inv coord)
        RatVector y(r);
        for (std::size_t i = 0; i < r; ++i)
            y[i] = inner_product(gram_inv[i], coord);
        RatVector witness(d);
        for (std::size_t j = 0; j < d; ++j) {
            Rational acc;
            for (std::size_t i = 0; i < r; ++i)
                acc += basis[i][j] * y[i];
            witness[j] = acc;
        }
        IntVector wint = primitive_direction(witness);
        for (std::size_t j = 0; j < d; ++j)
            witness[j] = Rational(wint[j]);

        std::vector<int> signs(gens.size(), 1);
        RatVector point(d);
        for (std::size_t c = 0; c < mc; ++c) {
            const int s = cell.signs[c];
            for (const auto& [gi, rel] : classes[c].members)
                signs[gi] = s * rel;
            if (s > 0)
                point += classes[c].rep;
            else
                point -= classes[c].rep;
        }
#ifndef NDEBUG
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (!gens.zero[i])
                assert(inner_product(witness, gens.generators[i]).sign() == signs[i]);
#endif
        out.vertices.push_back(
            ZonotopeVertex{std::move(point), std::move(witness), SignVector(signs)});
    }

    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const ZonotopeVertex& a, const ZonotopeVertex& b) {
                  return a.signs < b.signs;
              });
    return out;
}

GeneratorSet project_generators(const GeneratorSet& edges, const VectorWeighting& w) {
    if (edges.dim != w.n)
        throw std::invalid_argument("project_generators: edge dimension " +
                                    std::to_string(edges.dim) + " does not match weighting rows " +
                                    std::to_string(w.n));
    std::vector<RatVector> projected;
    projected.reserve(edges.size());
    for (const auto& e : edges.generators) {
        RatVector img(w.d);
        for (std::size_t j = 0; j < w.n; ++j) {
            if (e[j].is_zero())
                continue;
            for (std::size_t t = 0; t < w.d; ++t)
                img[t] += e[j] * w.rows[j][t];
        }
        projected.push_back(std::move(img));
    }
    return GeneratorSet(w.d, std::move(projected));
}

} // namespace ccopt
