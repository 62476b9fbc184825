/**
 * Directed cube complexes: one or more n-cubes with facet identifications
 * that glue a plus face {x_i = 1} of one cube to a minus face {x_j = 0} of a
 * (not necessarily distinct) cube by a permutation of the remaining
 * coordinates.  Such complexes carry a natural CW structure; we build the
 * quotient cells, compute H_1 from the integral cellular chain complex, check
 * vertex links in dimension 3, and lift the torus multisection cube-by-cube
 * (Kindred, "Efficient multisections of odd-dimensional tori", section 8).
 *
 * Cells of a single cube are encoded per axis: an even code 2v is the point
 * {v} and an odd code 2v+1 is the open interval (v, v+1).  The coarse CW
 * structure of the complex uses the grid with one cell per axis (codes 0..2);
 * the multisection lift uses the unit grid of [0,k]^n (codes 0..2k).
 */
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "multisection.hpp"

namespace multisect {

/**
 * One facet identification.  Coordinate t of cube_a corresponds to
 * coordinate perm[t] of cube_b; consequently the glued faces are
 * {x_{axis_a} = 1} of cube_a and {x_{perm[axis_a]} = 0} of cube_b, and a
 * valid gluing has perm[axis_a] == axis_b.  side_a/side_b record which side
 * each half of the identification lives on (+1 for {x = 1}, -1 for {x = 0});
 * directed complexes require side_a = +1 and side_b = -1, but the parser
 * accepts other combinations so that validation can reject them explicitly.
 *
 * Because the correspondence is a permutation of coordinates (never a
 * reflection), every edge keeps its standard orientation under the gluing.
 */
struct Gluing {
    int cube_a = 0;
    int axis_a = 0;
    int side_a = +1;
    int cube_b = 0;
    int axis_b = 0;
    int side_b = -1;
    std::vector<int> perm;
};

struct DirectedCubeComplex {
    int n = 0;
    int cubes = 0;
    std::vector<Gluing> glues;
};

inline bool is_permutation(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= (int)p.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline bool permutation_even(const std::vector<int>& p) {
    int inv = 0;
    for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) ++inv;
    return inv % 2 == 0;
}

/**
 * The one-cube complex of the twist construction: identify {x_i = 1} with
 * {x_{sigma(i)} = 0} so that coordinate t of the source face becomes
 * coordinate sigma(t) of the target face.  sigma = identity yields the usual
 * directed cubulation of T^n.  Evenness of sigma is not enforced here; the
 * caller may check permutation_even separately.
 */
inline DirectedCubeComplex from_permutation(int n, const std::vector<int>& sigma) {
    if ((int)sigma.size() != n || !is_permutation(sigma))
        throw std::invalid_argument("from_permutation: sigma is not a permutation of 0..n-1");
    DirectedCubeComplex c;
    c.n = n;
    c.cubes = 1;
    for (int i = 0; i < n; ++i) {
        Gluing g;
        g.cube_a = 0;
        g.axis_a = i;
        g.cube_b = 0;
        g.axis_b = sigma[i];
        g.perm = sigma;
        c.glues.push_back(std::move(g));
    }
    return c;
}

// ---------------------------------------------------------------------------
// Quotient cells.
// ---------------------------------------------------------------------------

namespace cube_detail {

/// Union-find tracking a relative orientation sign (+1/-1) along each link.
struct SignedUF {
    std::vector<int> parent;
    std::vector<std::int8_t> sign;  // orientation of node relative to parent
    int conflicts = 0;

    explicit SignedUF(size_t n) : parent(n), sign(n, 1) {
        for (size_t i = 0; i < n; ++i) parent[i] = (int)i;
    }
    std::pair<int, int> find(int x) {
        int s = 1;
        while (parent[x] != x) {
            s *= sign[x];
            x = parent[x];
        }
        return {x, s};
    }
    /// Declare orient(x) = s * orient(y).
    void unite(int x, int y, int s) {
        auto [rx, sx] = find(x);
        auto [ry, sy] = find(y);
        if (rx == ry) {
            if (sx != s * sy) ++conflicts;
            return;
        }
        // orient(rx) = sx^-1 * s * sy * orient(ry); signs are involutive.
        parent[rx] = ry;
        sign[rx] = (std::int8_t)(sx * s * sy);
    }
};

inline int cell_dim(const std::vector<int>& codes) {
    int d = 0;
    for (int c : codes) d += c & 1;
    return d;
}

/**
 * Image of a cell lying on the source face of a gluing: coordinate t becomes
 * coordinate perm[t], and the face coordinate snaps to the target face value.
 * m = 2k is the maximal axis code of the grid in use.
 */
inline std::vector<int> map_cell(const Gluing& g, const std::vector<int>& codes, int m) {
    std::vector<int> out(codes.size(), -1);
    for (size_t t = 0; t < codes.size(); ++t) out[g.perm[t]] = codes[t];
    out[g.perm[g.axis_a]] = g.side_b > 0 ? m : 0;
    return out;
}

/**
 * Sign of the induced map on an oriented cell: the parity of the permutation
 * that the coordinate correspondence induces on the interval axes (ordered
 * increasingly on both sides).  Face maps never reflect an axis, so this is
 * the only source of orientation change.
 */
inline int map_sign(const Gluing& g, const std::vector<int>& codes) {
    std::vector<int> img;
    for (size_t t = 0; t < codes.size(); ++t)
        if (codes[t] & 1) img.push_back(g.perm[t]);
    int inv = 0;
    for (size_t a = 0; a < img.size(); ++a)
        for (size_t b = a + 1; b < img.size(); ++b)
            if (img[a] > img[b]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace cube_detail

/**
 * The quotient CW structure of a complex at grid resolution k: the cells of
 * each cube are the cells of the unit grid on [0,k]^n, and facet gluings
 * identify boundary cells (with orientation tracking).  k = 1 gives the
 * coarse cell structure of the complex itself.
 */
struct QuotientCells {
    int n = 0;
    int k = 0;
    int cubes = 0;
    long long raw_total = 0;
    std::vector<int> cls;           // raw cell index -> class id
    std::vector<int> sgn;           // orientation of raw cell relative to class rep
    std::vector<int> rep;           // class id -> raw index of representative
    std::vector<long long> cells_by_dim;
    int sign_conflicts = 0;

    int codes_per_axis() const { return 2 * k + 1; }
    long long raw_index(int cube, const std::vector<int>& codes) const {
        long long v = cube;
        for (int c : codes) v = v * codes_per_axis() + c;
        return v;
    }
    std::vector<int> raw_codes(long long idx, int* cube = nullptr) const {
        std::vector<int> codes(n);
        for (int t = n - 1; t >= 0; --t) {
            codes[t] = (int)(idx % codes_per_axis());
            idx /= codes_per_axis();
        }
        if (cube) *cube = (int)idx;
        return codes;
    }
};

inline QuotientCells quotient_cells(const DirectedCubeComplex& c, int k) {
    QuotientCells q;
    q.n = c.n;
    q.k = k;
    q.cubes = c.cubes;
    const int m = 2 * k;  // maximal axis code
    long long per_cube = 1;
    for (int t = 0; t < c.n; ++t) per_cube *= (m + 1);
    q.raw_total = per_cube * c.cubes;

    cube_detail::SignedUF uf((size_t)q.raw_total);
    std::vector<int> codes(c.n);
    for (const auto& g : c.glues) {
        const int face_code = g.side_a > 0 ? m : 0;
        // Enumerate all cells of cube_a lying on the glued face.
        std::function<void(int)> rec = [&](int pos) {
            if (pos == c.n) {
                const auto img = cube_detail::map_cell(g, codes, m);
                uf.unite((int)q.raw_index(g.cube_a, codes), (int)q.raw_index(g.cube_b, img),
                         cube_detail::map_sign(g, codes));
                return;
            }
            if (pos == g.axis_a) {
                codes[pos] = face_code;
                rec(pos + 1);
                return;
            }
            for (int v = 0; v <= m; ++v) {
                codes[pos] = v;
                rec(pos + 1);
            }
        };
        rec(0);
    }

    q.cls.assign((size_t)q.raw_total, -1);
    q.sgn.assign((size_t)q.raw_total, 1);
    q.cells_by_dim.assign(c.n + 1, 0);
    std::map<int, int> root_to_class;
    for (long long i = 0; i < q.raw_total; ++i) {
        auto [root, s] = uf.find((int)i);
        auto it = root_to_class.find(root);
        if (it == root_to_class.end()) {
            it = root_to_class.emplace(root, (int)q.rep.size()).first;
            q.rep.push_back((int)i);
            ++q.cells_by_dim[cube_detail::cell_dim(q.raw_codes(i))];
        }
        q.cls[i] = it->second;
        // Both i and rep carry signs relative to the root.
        auto [root2, srep] = uf.find(q.rep[it->second]);
        (void)root2;
        q.sgn[i] = s * srep;
    }
    q.sign_conflicts = uf.conflicts;
    return q;
}

// ---------------------------------------------------------------------------
// Validation.
// ---------------------------------------------------------------------------

struct ValidationReport {
    bool ok = false;
    std::vector<std::string> violations;
    std::vector<long long> cells_by_dim;  // quotient cells of the coarse structure
};

/**
 * Checks the directedness conditions: every gluing pairs a plus face with a
 * minus face via a coordinate permutation (which automatically respects the
 * standard edge orientations), and every facet of every cube is glued exactly
 * once.  Also reports the quotient cell counts of the coarse structure.
 */
inline ValidationReport validate_directed(const DirectedCubeComplex& c) {
    ValidationReport r;
    auto fail = [&](const std::string& msg) { r.violations.push_back(msg); };
    if (c.n < 1 || c.cubes < 1) fail("empty complex");
    // facet key: (cube * n + axis) * 2 + (side > 0)
    std::map<long long, int> facet_uses;
    for (size_t gi = 0; gi < c.glues.size(); ++gi) {
        const auto& g = c.glues[gi];
        const std::string at = "gluing " + std::to_string(gi) + ": ";
        if (g.cube_a < 0 || g.cube_a >= c.cubes || g.cube_b < 0 || g.cube_b >= c.cubes) {
            fail(at + "cube index out of range");
            continue;
        }
        if (g.axis_a < 0 || g.axis_a >= c.n || g.axis_b < 0 || g.axis_b >= c.n) {
            fail(at + "face axis out of range");
            continue;
        }
        if ((int)g.perm.size() != c.n || !is_permutation(g.perm)) {
            fail(at + "coordinate correspondence is not a permutation");
            continue;
        }
        if (g.perm[g.axis_a] != g.axis_b)
            fail(at + "correspondence does not carry the glued axis to the glued axis");
        if (g.side_a != +1 || g.side_b != -1)
            fail(at + "does not glue a plus face {x=1} to a minus face {x=0}");
        ++facet_uses[((long long)g.cube_a * c.n + g.axis_a) * 2 + (g.side_a > 0)];
        ++facet_uses[((long long)g.cube_b * c.n + g.axis_b) * 2 + (g.side_b > 0)];
    }
    if (r.violations.empty()) {
        for (int cube = 0; cube < c.cubes; ++cube)
            for (int axis = 0; axis < c.n; ++axis)
                for (int side = 0; side < 2; ++side) {
                    const int uses = facet_uses[((long long)cube * c.n + axis) * 2 + side];
                    if (uses != 1)
                        fail("facet (cube " + std::to_string(cube) + ", x_" +
                             std::to_string(axis) + (side ? " = 1)" : " = 0)") + " glued " +
                             std::to_string(uses) + " times");
                }
    }
    if (r.violations.empty()) {
        const auto q = quotient_cells(c, 1);
        r.cells_by_dim = q.cells_by_dim;
    }
    r.ok = r.violations.empty();
    return r;
}

// ---------------------------------------------------------------------------
// Cellular homology.
// ---------------------------------------------------------------------------

namespace cube_detail {

using Matrix = std::vector<std::vector<long long>>;  // row-major

inline long long matrix_rank_and_divisors(Matrix a, std::vector<long long>* divisors) {
    // Smith normal form by repeated pivoting; entries stay tiny here.
    if (divisors) divisors->clear();
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    size_t r = 0, c = 0;
    long long rank = 0;
    while (r < rows && c < cols) {
        // Pick the nonzero pivot of least magnitude in the remaining block.
        size_t pr = r, pc = c;
        long long best = 0;
        for (size_t i = r; i < rows; ++i)
            for (size_t j = c; j < cols; ++j)
                if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < best)) {
                    best = std::abs(a[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(a[r], a[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][c], a[i][pc]);
        bool reduced = true;
        for (size_t i = r + 1; i < rows; ++i)
            if (a[i][c] != 0) {
                const long long f = a[i][c] / a[r][c];
                for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
                if (a[i][c] != 0) reduced = false;
            }
        for (size_t j = c + 1; j < cols; ++j)
            if (a[r][j] != 0) {
                const long long f = a[r][j] / a[r][c];
                for (size_t i = r; i < rows; ++i) a[i][j] -= f * a[i][c];
                if (a[r][j] != 0) reduced = false;
            }
        if (!reduced) continue;  // smaller remainders appeared; re-pivot
        // Ensure the pivot divides the rest of the block (Smith condition).
        bool divides = true;
        for (size_t i = r + 1; i < rows && divides; ++i)
            for (size_t j = c + 1; j < cols && divides; ++j)
                if (a[i][j] % a[r][c] != 0) {
                    for (size_t jj = c; jj < cols; ++jj) a[r][jj] += a[i][jj];
                    divides = false;
                }
        if (!divides) continue;
        if (divisors) divisors->push_back(std::abs(a[r][c]));
        ++rank;
        ++r;
        ++c;
    }
    return rank;
}

}  // namespace cube_detail

struct H1Report {
    bool valid = false;                 // no orientation conflicts in the quotient
    bool boundary_squares_zero = false; // d∘d = 0 for the whole chain complex
    long long rank = 0;
    std::vector<long long> torsion;    // elementary divisors > 1
    std::vector<long long> cells_by_dim;
};

/**
 * H_1 of the quotient CW complex via integer Smith normal form of the
 * cellular boundary maps.  Cell orientations are the product orientations of
 * the cube cells, made coherent across gluings by the sign tracking in
 * quotient_cells.
 */
inline H1Report homology_h1(const DirectedCubeComplex& c) {
    H1Report r;
    const auto q = quotient_cells(c, 1);
    r.cells_by_dim = q.cells_by_dim;
    r.valid = q.sign_conflicts == 0;
    if (!r.valid) return r;

    // Class ids per dimension, densely renumbered.
    std::vector<int> dim_of(q.rep.size()), num_in_dim(q.rep.size());
    std::vector<long long> seen(c.n + 1, 0);
    for (size_t z = 0; z < q.rep.size(); ++z) {
        dim_of[z] = cube_detail::cell_dim(q.raw_codes(q.rep[z]));
        num_in_dim[z] = (int)seen[dim_of[z]]++;
    }

    // boundary[d]: matrix of d_d : C_d -> C_{d-1}, rows indexed by C_{d-1}.
    std::vector<cube_detail::Matrix> boundary(c.n + 1);
    for (int d = 1; d <= c.n; ++d)
        boundary[d].assign((size_t)q.cells_by_dim[d - 1],
                           std::vector<long long>((size_t)q.cells_by_dim[d], 0));
    for (size_t z = 0; z < q.rep.size(); ++z) {
        const int d = dim_of[z];
        if (d == 0) continue;
        int cube = 0;
        const auto codes = q.raw_codes(q.rep[z], &cube);
        int p = 0;  // position among interval axes
        for (int t = 0; t < c.n; ++t) {
            if (!(codes[t] & 1)) continue;
            auto face = codes;
            for (int hi = 0; hi < 2; ++hi) {
                face[t] = codes[t] - 1 + 2 * hi;
                const long long raw = q.raw_index(cube, face);
                const long long coef = (p % 2 == 0 ? 1 : -1) * (hi ? 1 : -1) * q.sgn[raw];
                boundary[d][num_in_dim[q.cls[raw]]][num_in_dim[z]] += coef;
            }
            ++p;
        }
    }

    r.boundary_squares_zero = true;
    for (int d = 1; d + 1 <= c.n; ++d) {
        const auto &a = boundary[d], &b = boundary[d + 1];
        for (size_t i = 0; i < a.size() && r.boundary_squares_zero; ++i)
            for (size_t j = 0; j < (b.empty() ? 0 : b[0].size()); ++j) {
                long long s = 0;
                for (size_t t = 0; t < b.size(); ++t) s += a[i][t] * b[t][j];
                if (s != 0) {
                    r.boundary_squares_zero = false;
                    break;
                }
            }
    }

    const long long n1 = q.cells_by_dim[1];
    const long long rank_d1 = cube_detail::matrix_rank_and_divisors(boundary[1], nullptr);
    std::vector<long long> div2;
    const long long rank_d2 =
        c.n >= 2 ? cube_detail::matrix_rank_and_divisors(boundary[2], &div2) : 0;
    r.rank = n1 - rank_d1 - rank_d2;
    for (long long d : div2)
        if (d > 1) r.torsion.push_back(d);
    std::sort(r.torsion.begin(), r.torsion.end());
    return r;
}

// ---------------------------------------------------------------------------
// Vertex links (n = 3).
// ---------------------------------------------------------------------------

struct VertexLinkReport {
    struct Link {
        long long vertices = 0, edges = 0, triangles = 0;
        long long chi = 0;
        bool closed = false;
    };
    bool ok = false;
    long long vertex_classes = 0;  // 0-cells of the quotient
    std::vector<Link> links;       // one per connected link component
    std::vector<std::string> violations;
};

/**
 * Builds the link of every quotient vertex of a 3-dimensional complex as a
 * triangulated surface: one triangle per cube corner, with triangle edges
 * glued according to the facet identifications.  The complex is locally a
 * 3-manifold at its vertices iff every link is a closed connected surface
 * with chi = 2 (a 2-sphere) and there is one link per quotient vertex.
 */
inline VertexLinkReport vertex_link_check(const DirectedCubeComplex& c) {
    if (c.n != 3) throw std::invalid_argument("vertex_link_check: only n = 3 supported");
    VertexLinkReport r;
    const auto val = validate_directed(c);
    if (!val.ok) {
        r.violations = val.violations;
        return r;
    }
    r.vertex_classes = val.cells_by_dim[0];

    // Facet lookup: (cube, axis, side) -> gluing and direction of traversal.
    struct Half {
        const Gluing* g;
        bool forward;  // true if this facet is the source (plus) side
    };
    std::map<std::tuple<int, int, int>, Half> facet;
    for (const auto& g : c.glues) {
        facet[{g.cube_a, g.axis_a, +1}] = {&g, true};
        facet[{g.cube_b, g.axis_b, -1}] = {&g, false};
    }
    // Map a corner through the gluing of the facet normal to axis m.
    auto corner_image = [&](int cube, int corner, int m) {
        const int side = (corner >> m) & 1 ? +1 : -1;
        const Half h = facet.at({cube, m, side});
        int out = 0;
        if (h.forward) {
            for (int t = 0; t < 3; ++t)
                if ((corner >> t) & 1) out |= 1 << h.g->perm[t];
            out &= ~(1 << h.g->perm[m]);  // x = 1 becomes x = 0
            return std::tuple<int, int, int>(h.g->cube_b, out, h.g->perm[m]);
        }
        for (int t = 0; t < 3; ++t)
            if ((corner >> h.g->perm[t]) & 1) out |= 1 << t;
        out |= 1 << h.g->axis_a;  // x = 0 becomes x = 1
        int pre_m = 0;
        while (h.g->perm[pre_m] != m) ++pre_m;
        return std::tuple<int, int, int>(h.g->cube_a, out, pre_m);
    };

    // Link cells: triangles (cube, corner), triangle edges (cube, corner,
    // facet normal m), triangle vertices = edge germs (cube, corner, axis e).
    auto flag_id = [&](int cube, int corner, int axis) { return (cube * 8 + corner) * 3 + axis; };
    const int flags = c.cubes * 8 * 3;
    std::vector<int> edge_uf(flags), germ_uf(flags), tri_uf(c.cubes * 8);
    auto init = [](std::vector<int>& v) {
        for (size_t i = 0; i < v.size(); ++i) v[i] = (int)i;
    };
    init(edge_uf);
    init(germ_uf);
    init(tri_uf);
    std::function<int(std::vector<int>&, int)> find = [&](std::vector<int>& v, int x) {
        while (v[x] != x) x = v[x] = v[v[x]];
        return x;
    };
    auto unite = [&](std::vector<int>& v, int x, int y) { v[find(v, x)] = find(v, y); };

    for (int cube = 0; cube < c.cubes; ++cube)
        for (int corner = 0; corner < 8; ++corner)
            for (int m = 0; m < 3; ++m) {
                const auto [cube2, corner2, m2] = corner_image(cube, corner, m);
                // The facet normal to m carries the triangle edge opposite
                // germ m, and identifies the germs of the other two axes.
                unite(edge_uf, flag_id(cube, corner, m), flag_id(cube2, corner2, m2));
                for (int e = 0; e < 3; ++e) {
                    if (e == m) continue;
                    const Half h = facet.at({cube, m, (corner >> m) & 1 ? +1 : -1});
                    int e2;
                    if (h.forward) {
                        e2 = h.g->perm[e];
                    } else {
                        e2 = 0;
                        while (h.g->perm[e2] != e) ++e2;
                    }
                    unite(germ_uf, flag_id(cube, corner, e), flag_id(cube2, corner2, e2));
                }
            }

    // Triangles sharing a quotient edge of the link are adjacent.
    std::map<int, std::vector<int>> edge_members;
    for (int cube = 0; cube < c.cubes; ++cube)
        for (int corner = 0; corner < 8; ++corner)
            for (int m = 0; m < 3; ++m)
                edge_members[find(edge_uf, flag_id(cube, corner, m))].push_back(cube * 8 + corner);
    for (const auto& [root, tris] : edge_members) {
        (void)root;
        for (size_t i = 1; i < tris.size(); ++i) unite(tri_uf, tris[0], tris[i]);
    }

    std::map<int, int> comp_index;
    for (int t = 0; t < c.cubes * 8; ++t) {
        const int root = find(tri_uf, t);
        if (!comp_index.count(root)) {
            comp_index[root] = (int)r.links.size();
            r.links.emplace_back();
        }
        ++r.links[comp_index[root]].triangles;
    }
    std::set<int> counted_edges, counted_germs;
    bool attribution_ok = true;
    auto comp_of_tri = [&](int tri) { return comp_index.at(find(tri_uf, tri)); };
    for (int cube = 0; cube < c.cubes; ++cube)
        for (int corner = 0; corner < 8; ++corner) {
            const int comp = comp_of_tri(cube * 8 + corner);
            for (int m = 0; m < 3; ++m) {
                if (counted_edges.insert(find(edge_uf, flag_id(cube, corner, m))).second)
                    ++r.links[comp].edges;
                if (counted_germs.insert(find(germ_uf, flag_id(cube, corner, m))).second)
                    ++r.links[comp].vertices;
            }
        }
    for (auto& [root, tris] : edge_members) {
        (void)root;
        for (int t : tris)
            if (comp_of_tri(t) != comp_of_tri(tris[0])) attribution_ok = false;
        // Closed surface: every link edge lies in exactly two triangle corners.
        if (tris.size() != 2) attribution_ok = attribution_ok && false;
    }
    for (auto& l : r.links) {
        l.chi = l.vertices - l.edges + l.triangles;
        l.closed = true;
    }
    for (auto& [root, tris] : edge_members)
        if (tris.size() != 2) r.links[comp_of_tri(tris[0])].closed = false;

    r.ok = attribution_ok && (long long)r.links.size() == r.vertex_classes;
    for (const auto& l : r.links)
        if (!l.closed || l.chi != 2) r.ok = false;
    if (!r.ok && r.violations.empty())
        r.violations.push_back("some vertex link is not a 2-sphere");
    return r;
}

// ---------------------------------------------------------------------------
// Lifting the multisection.
// ---------------------------------------------------------------------------

struct LiftReport {
    struct Piece {
        long long cells = 0;       // quotient cells of the closed piece
        int components = 0;
        long long chi = 0;
        std::optional<long long> genus;  // 1 - chi when connected
    };
    bool boundary_match = false;  // piece membership agrees across every gluing
    int k = 0;
    long long claimed_genus = 0;  // the n * (number of n-cubes) of the source article
    std::vector<Piece> pieces;
    std::vector<std::vector<SubcubeWord>> words_per_cube;  // pieces[i] words, per cube
};

namespace cube_detail {

/// Does the closed cell with the given unit-grid codes lie in the pullback
/// g^{-1}(closed piece) under g : [0,k]^n -> T^n?  A grid point at value v
/// lies in the closed piece iff some adjacent torus subcube does, and on the
/// torus the neighbors of v wrap mod k (the faces x = 0 and x = k of the cube
/// map to the same torus hyperplane).
inline bool cell_in_piece(const std::vector<int>& codes, const std::vector<char>& bitmap,
                          int k) {
    const int n = (int)codes.size();
    SubcubeWord w(n, 0);
    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == n) return bitmap[word_index(w, k)] != 0;
        const int c = codes[pos];
        if (c & 1) {
            w[pos] = (std::uint8_t)mod(c / 2, k);
            return rec(pos + 1);
        }
        for (int cand : {mod(c / 2 - 1, k), mod(c / 2, k)}) {
            w[pos] = (std::uint8_t)cand;
            if (rec(pos + 1)) return true;
            if (mod(c / 2 - 1, k) == mod(c / 2, k)) break;
        }
        return false;
    };
    return rec(0);
}

}  // namespace cube_detail

/**
 * The lifted multisection M = X'_0 ∪ ... ∪ X'_{k-1}: each cube carries the
 * pullback of the torus piece X_i through [0,k]^n -> T^n, and the facet
 * gluings assemble the per-cube pieces.  Verifies that piece membership of
 * every boundary cell agrees when computed from either adjacent cube (the
 * executable form of the claim that the multisection is fixed by the
 * permutation action on coordinates), then reports chi, connectivity, and
 * genus of each closed lifted piece from the quotient cell structure.
 */
inline LiftReport lift_multisection(const DirectedCubeComplex& c, int k) {
    if (c.n != 2 * k - 1)
        throw std::invalid_argument("lift_multisection: need n = 2k-1");
    LiftReport r;
    r.k = k;
    r.claimed_genus = (long long)c.n * c.cubes;

    std::vector<std::vector<char>> bitmaps;
    for (int i = 0; i < k; ++i) {
        auto words = build_piece(k, i);
        bitmaps.push_back(piece_bitmap(k, words));
        r.words_per_cube.push_back(std::move(words));
    }

    const auto q = quotient_cells(c, k);
    auto membership = [&](const std::vector<int>& codes) {
        int msk = 0;
        for (int i = 0; i < k; ++i)
            if (cube_detail::cell_in_piece(codes, bitmaps[i], k)) msk |= 1 << i;
        return msk;
    };

    // Boundary matching across each gluing.
    r.boundary_match = true;
    const int m = 2 * k;
    for (const auto& g : c.glues) {
        std::vector<int> codes(c.n);
        std::function<void(int)> rec = [&](int pos) {
            if (!r.boundary_match) return;
            if (pos == c.n) {
                if (membership(codes) != membership(cube_detail::map_cell(g, codes, m)))
                    r.boundary_match = false;
                return;
            }
            if (pos == g.axis_a) {
                codes[pos] = g.side_a > 0 ? m : 0;
                rec(pos + 1);
                return;
            }
            for (int v = 0; v <= m; ++v) {
                codes[pos] = v;
                rec(pos + 1);
            }
        };
        rec(0);
    }

    // Per-piece chi and connectivity over quotient cell classes.
    std::vector<int> class_mask(q.rep.size(), 0);
    for (size_t z = 0; z < q.rep.size(); ++z)
        class_mask[z] = membership(q.raw_codes(q.rep[z]));
    for (int i = 0; i < k; ++i) {
        LiftReport::Piece p;
        std::vector<int> uf(q.rep.size());
        for (size_t z = 0; z < uf.size(); ++z) uf[z] = (int)z;
        std::function<int(int)> find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (size_t z = 0; z < q.rep.size(); ++z) {
            if (!(class_mask[z] >> i & 1)) continue;
            const int d = cube_detail::cell_dim(q.raw_codes(q.rep[z]));
            ++p.cells;
            p.chi += d % 2 == 0 ? 1 : -1;
            // Join each cell to its codimension-1 faces (also in the piece).
            int cube = 0;
            const auto codes = q.raw_codes(q.rep[z], &cube);
            for (int t = 0; t < c.n; ++t) {
                if (!(codes[t] & 1)) continue;
                auto face = codes;
                for (int hi = 0; hi < 2; ++hi) {
                    face[t] = codes[t] - 1 + 2 * hi;
                    const int fz = q.cls[q.raw_index(cube, face)];
                    if (find((int)z) != find(fz)) uf[find((int)z)] = find(fz);
                }
            }
        }
        std::set<int> roots;
        for (size_t z = 0; z < q.rep.size(); ++z)
            if (class_mask[z] >> i & 1) roots.insert(find((int)z));
        p.components = (int)roots.size();
        if (p.components == 1) p.genus = 1 - p.chi;
        r.pieces.push_back(std::move(p));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Text format.
// ---------------------------------------------------------------------------

/**
 * Format:
 *   n 3 cubes 1
 *   0 face+0 -> 0 face-1 perm 1 2 0
 * One line per identification; `face+i` is {x_i = 1}, `face-j` is {x_j = 0};
 * perm lists the target coordinate of each source coordinate.
 */
inline DirectedCubeComplex parse_complex(std::istream& in) {
    DirectedCubeComplex c;
    std::string tok;
    auto expect = [&](const std::string& want) {
        if (!(in >> tok) || tok != want)
            throw std::runtime_error("cube complex parse: expected '" + want + "', got '" +
                                     tok + "'");
    };
    expect("n");
    if (!(in >> c.n)) throw std::runtime_error("cube complex parse: missing dimension");
    expect("cubes");
    if (!(in >> c.cubes)) throw std::runtime_error("cube complex parse: missing cube count");
    auto parse_face = [&](const std::string& s, int& axis, int& side) {
        const auto pos = s.find("face");
        if (pos != 0 || s.size() < 6 || (s[4] != '+' && s[4] != '-'))
            throw std::runtime_error("cube complex parse: bad face token '" + s + "'");
        side = s[4] == '+' ? +1 : -1;
        axis = std::stoi(s.substr(5));
    };
    Gluing g;
    while (in >> g.cube_a) {
        if (!(in >> tok)) throw std::runtime_error("cube complex parse: truncated gluing");
        parse_face(tok, g.axis_a, g.side_a);
        expect("->");
        if (!(in >> g.cube_b >> tok)) throw std::runtime_error("cube complex parse: truncated gluing");
        parse_face(tok, g.axis_b, g.side_b);
        expect("perm");
        g.perm.assign(c.n, 0);
        for (int t = 0; t < c.n; ++t)
            if (!(in >> g.perm[t]))
                throw std::runtime_error("cube complex parse: truncated permutation");
        c.glues.push_back(g);
    }
    return c;
}

inline DirectedCubeComplex parse_complex(const std::string& text) {
    std::istringstream in(text);
    return parse_complex(in);
}

inline std::string serialize_complex(const DirectedCubeComplex& c) {
    std::ostringstream out;
    out << "n " << c.n << " cubes " << c.cubes << "\n";
    for (const auto& g : c.glues) {
        out << g.cube_a << " face" << (g.side_a > 0 ? '+' : '-') << g.axis_a << " -> "
            << g.cube_b << " face" << (g.side_b > 0 ? '+' : '-') << g.axis_b << " perm";
        for (int v : g.perm) out << ' ' << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace multisect
