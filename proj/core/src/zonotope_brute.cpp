#include "ccopt/zonotope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

namespace ccopt {

namespace {

// Row-echelon basis of integer rows (fraction-free), for span inspection.
std::vector<IntVector> int_row_basis(std::vector<IntVector> rows) {
    std::vector<IntVector> basis;
    if (rows.empty())
        return basis;
    const std::size_t cols = rows[0].size();
    std::size_t top = 0;
    for (std::size_t col = 0; col < cols && top < rows.size(); ++col) {
        std::size_t p = top;
        while (p < rows.size() && rows[p][col] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[top], rows[p]);
        for (std::size_t i = top + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0)
                continue;
            Int f = rows[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                rows[i][j] = rows[top][col] * rows[i][j] - f * rows[top][j];
            make_primitive(rows[i]);
        }
        ++top;
    }
    rows.resize(top);
    return rows;
}

Int cross2(const IntVector& o, const IntVector& a, const IntVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain with strict turns; input sorted and deduplicated.
std::vector<std::size_t> hull2(const std::vector<IntVector>& pts) {
    const std::size_t n = pts.size();
    if (n <= 2) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i)
            all[i] = i;
        return all;
    }
    std::vector<std::size_t> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0)
            --k;
        h[k++] = i;
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0)
            --k;
        h[k++] = i;
    }
    h.resize(k - 1); // last point equals the first
    return h;
}

IntVector cross3(const IntVector& u, const IntVector& v) {
    return IntVector{u[1] * v[2] - u[2] * v[1],
                     u[2] * v[0] - u[0] * v[2],
                     u[0] * v[1] - u[1] * v[0]};
}

IntVector diff(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

struct Tri {
    std::size_t a, b, c;
    IntVector n; // outward: n.x <= off for all hull points
    Int off;
};

std::vector<std::size_t> hull3(const std::vector<IntVector>& pts) {
    const std::size_t n = pts.size();

    // Four affinely independent seed points (caller guarantees rank 3).
    std::size_t i1 = 1;
    while (pts[i1] == pts[0])
        ++i1;
    std::size_t i2 = i1 + 1;
    while (true) {
        IntVector nrm = cross3(diff(pts[i1], pts[0]), diff(pts[i2], pts[0]));
        if (nrm[0] != 0 || nrm[1] != 0 || nrm[2] != 0)
            break;
        ++i2;
    }
    IntVector plane = cross3(diff(pts[i1], pts[0]), diff(pts[i2], pts[0]));
    std::size_t i3 = 0;
    while (dot(plane, diff(pts[i3], pts[0])) == 0)
        ++i3;

    // Interior reference: 4 * centroid of the seed tetrahedron.
    IntVector ref(3, 0);
    for (std::size_t s : {std::size_t(0), i1, i2, i3})
        for (int j = 0; j < 3; ++j)
            ref[j] += pts[s][j];

    auto make_face = [&](std::size_t a, std::size_t b, std::size_t c) {
        Tri f;
        f.a = a;
        f.b = b;
        f.c = c;
        f.n = cross3(diff(pts[b], pts[a]), diff(pts[c], pts[a]));
        f.off = dot(f.n, pts[a]);
        // Orient outward: the interior reference must be strictly below.
        Int lhs = dot(f.n, ref);
        Int rhs = 4 * f.off;
        if (lhs > rhs) {
            std::swap(f.b, f.c);
            for (auto& x : f.n)
                x = -x;
            f.off = -f.off;
        }
        return f;
    };

    std::vector<Tri> faces;
    faces.push_back(make_face(0, i1, i2));
    faces.push_back(make_face(0, i1, i3));
    faces.push_back(make_face(0, i2, i3));
    faces.push_back(make_face(i1, i2, i3));

    for (std::size_t p = 0; p < n; ++p) {
        std::vector<bool> visible(faces.size(), false);
        bool any = false;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (dot(faces[f].n, pts[p]) > faces[f].off) {
                visible[f] = true;
                any = true;
            }
        }
        if (!any)
            continue;

        std::map<std::pair<std::size_t, std::size_t>, std::size_t> owner;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            owner[{faces[f].a, faces[f].b}] = f;
            owner[{faces[f].b, faces[f].c}] = f;
            owner[{faces[f].c, faces[f].a}] = f;
        }

        std::vector<Tri> next;
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (!visible[f])
                next.push_back(faces[f]);
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!visible[f])
                continue;
            const std::size_t vs[3] = {faces[f].a, faces[f].b, faces[f].c};
            for (int e = 0; e < 3; ++e) {
                std::size_t u = vs[e], v = vs[(e + 1) % 3];
                if (visible[owner.at({v, u})])
                    continue;
                // Keeping the horizon edge direction keeps the closed surface
                // consistently oriented, so (u, v, p) is already outward.
                Tri t;
                t.a = u;
                t.b = v;
                t.c = p;
                t.n = cross3(diff(pts[v], pts[u]), diff(pts[p], pts[u]));
                t.off = dot(t.n, pts[u]);
                assert(dot(t.n, ref) < 4 * t.off);
                next.push_back(std::move(t));
            }
        }
        faces = std::move(next);
    }

    // A corner index is a real vertex iff its incident face planes have
    // full normal rank; edge- and face-interior corners are filtered out.
    std::map<std::size_t, std::vector<IntVector>> incident;
    for (const auto& f : faces) {
        incident[f.a].push_back(f.n);
        incident[f.b].push_back(f.n);
        incident[f.c].push_back(f.n);
    }
    std::vector<std::size_t> out;
    for (auto& [idx, normals] : incident)
        if (rank_int_rows(normals) == 3)
            out.push_back(idx);
    return out;
}

} // namespace

std::vector<RatVector> brute_force_vertices(const GeneratorSet& gens) {
    if (gens.size() > 16)
        throw std::invalid_argument("brute_force_vertices: more than 16 generators");
    if (gens.dim > 3)
        throw std::invalid_argument("brute_force_vertices: dimension above 3");

    const std::size_t m = gens.size();
    const std::size_t d = gens.dim;

    Int scale = 1;
    for (const auto& g : gens.generators)
        for (const auto& x : g)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.den().get_mpz_t());
    std::vector<IntVector> gi(m, IntVector(d));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < d; ++j)
            gi[i][j] = gens.generators[i][j].num() * (scale / gens.generators[i][j].den());

    // All 2^m sign points by Gray-code walking.
    IntVector cur(d, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < d; ++j)
            cur[j] -= gi[i][j];
    std::vector<IntVector> pts;
    pts.reserve(std::size_t(1) << m);
    pts.push_back(cur);
    std::size_t gray = 0;
    for (std::size_t step = 1; step < (std::size_t(1) << m); ++step) {
        const std::size_t next_gray = step ^ (step >> 1);
        const std::size_t bit = gray ^ next_gray;
        std::size_t i = 0;
        while ((std::size_t(1) << i) != bit)
            ++i;
        const int dirn = (next_gray & bit) ? 2 : -2;
        for (std::size_t j = 0; j < d; ++j)
            cur[j] += dirn * gi[i][j];
        gray = next_gray;
        pts.push_back(cur);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<IntVector> chosen;
    if (pts.size() == 1) {
        chosen = pts;
    } else {
        const std::vector<IntVector> basis = int_row_basis(gi);
        const std::size_t r = basis.size();
        if (r == 1) {
            chosen = {pts.front(), pts.back()};
        } else if (r == 2) {
            // Project the span bijectively onto a coordinate pair.
            std::size_t j1 = 0, j2 = 1;
            bool found = false;
            for (std::size_t x = 0; x < d && !found; ++x)
                for (std::size_t y = x + 1; y < d && !found; ++y)
                    if (basis[0][x] * basis[1][y] - basis[0][y] * basis[1][x] != 0) {
                        j1 = x;
                        j2 = y;
                        found = true;
                    }
            std::vector<IntVector> flat(pts.size(), IntVector(2));
            for (std::size_t i = 0; i < pts.size(); ++i) {
                flat[i][0] = pts[i][j1];
                flat[i][1] = pts[i][j2];
            }
            // pts is lex-sorted; flat preserves that order on the span only
            // if (j1, j2) are the leading coordinates, so sort explicitly.
            std::vector<std::size_t> order(pts.size());
            for (std::size_t i = 0; i < order.size(); ++i)
                order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return flat[a] < flat[b];
            });
            std::vector<IntVector> sorted_flat(pts.size());
            for (std::size_t i = 0; i < order.size(); ++i)
                sorted_flat[i] = flat[order[i]];
            for (std::size_t idx : hull2(sorted_flat))
                chosen.push_back(pts[order[idx]]);
        } else {
            for (std::size_t idx : hull3(pts))
                chosen.push_back(pts[idx]);
        }
    }

    std::vector<RatVector> out;
    out.reserve(chosen.size());
    for (const auto& p : chosen) {
        RatVector v(d);
        for (std::size_t j = 0; j < d; ++j)
            v[j] = Rational(p[j], scale);
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ccopt
