#pragma once
// Certified attaching-region checks for handle decompositions.
//
// The handle records produced by decompose() claim, for each piece Y_z*,
// that the region it shares with earlier pieces equals the union of
// boundary terms prod_{r != a} xi_r x (bd xi_a) over the class-(A) groups
// a of the record.  This header verifies that claim cell by cell: the
// torus is cut along every factor endpoint appearing in the table, both
// sides of the equation become unions of product cells, and the two cell
// sets are compared exactly.  The glue column is re-derived from the same
// cell model as an independent check on the orbit-intersection solver.
//
// The computation enumerates every cell of Y_z*, so it is intended for
// the low-dimensional suite (n <= 7); higher dimensions are covered by
// the symbolic layer only.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "multisect/handles.hpp"

namespace multisect {

namespace attach_detail {

/// One cell of the common refinement of a circle factor: either a
/// breakpoint or an open arc between consecutive breakpoints.  `hull` is
/// the closure, normalized so hull.lo lies in [0, L).
struct AxisCell {
    Factor hull;
    bool interval = false;
};

/// Cut the circle of circumference L along every endpoint of the given
/// factors.  Returns the cells in cyclic order: point 0, arc 0, point 1,
/// arc 1, ...  (cell 2*i is breakpoint i, cell 2*i+1 the open arc from
/// breakpoint i to breakpoint i+1, wrapping at the end).
inline std::vector<AxisCell> axis_cells(const std::vector<Factor>& factors, int L) {
    std::set<int> br;
    for (const auto& f : factors) {
        br.insert(mod(f.lo, L));
        br.insert(mod(f.hi, L));
    }
    std::vector<int> b(br.begin(), br.end());
    std::vector<AxisCell> cells;
    const int m = (int)b.size();
    for (int i = 0; i < m; ++i) {
        cells.push_back({Factor::point(b[i]), false});
        const int next = (i + 1 < m) ? b[i + 1] : b[0] + L;
        if (next > b[i]) cells.push_back({Factor::arc(b[i], next), true});
    }
    return cells;
}

/// Closure containment: is the closure of cell `c` inside the closed
/// factor `f`?  All factor endpoints are breakpoints of the axis, so
/// comparing closures decides containment of the open cell as well.
inline bool cell_in_factor(const AxisCell& c, const Factor& f, int L) {
    if (f.is_point() && c.interval) return false;
    return factor_contains(f, c.hull, L);
}

/// Bipartite perfect matching between cells and closed factors
/// (Kuhn's augmenting-path algorithm; both sides have size n <= 9).
inline bool match_cells_to_factors(const std::vector<int>& cells,
                                   const std::vector<Factor>& factors,
                                   const std::vector<AxisCell>& axis, int L) {
    const int n = (int)cells.size();
    if ((int)factors.size() != n) return false;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cell_in_factor(axis[cells[i]], factors[j], L)) adj[i].push_back(j);
    std::vector<int> match_of(n, -1);
    std::vector<char> used;
    std::function<bool(int)> aug = [&](int u) {
        for (int v : adj[u]) {
            if (used[v]) continue;
            used[v] = 1;
            if (match_of[v] < 0 || aug(match_of[v])) {
                match_of[v] = u;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < n; ++u) {
        used.assign(n, 0);
        if (!aug(u)) return false;
    }
    return true;
}

inline int cells_dim(const std::vector<int>& cells, const std::vector<AxisCell>& axis) {
    int d = 0;
    for (int c : cells) d += axis[c].interval ? 1 : 0;
    return d;
}

/// All distinct multisets of axis cells that fit the factor list under
/// some assignment (i.e. the cells of the symmetrized box with these
/// factors).  Cells are returned as sorted id vectors.
inline std::vector<std::vector<int>> box_cells(const std::vector<Factor>& factors,
                                               const std::vector<AxisCell>& axis, int L) {
    const int n = (int)factors.size();
    std::vector<std::vector<int>> per(n);
    for (int j = 0; j < n; ++j)
        for (int c = 0; c < (int)axis.size(); ++c)
            if (cell_in_factor(axis[c], factors[j], L)) per[j].push_back(c);
    std::set<std::vector<int>> seen;
    std::vector<int> cur(n);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            std::vector<int> key = cur;
            std::sort(key.begin(), key.end());
            seen.insert(std::move(key));
            return;
        }
        for (int c : per[j]) {
            cur[j] = c;
            rec(j + 1);
        }
    };
    rec(0);
    return {seen.begin(), seen.end()};
}

/// Boundary of a symmetrized box: the union of permuted products of the
/// given factors is pure of dimension d (one interval per arc factor).
/// A codimension-one cell lies on the boundary exactly when it is a free
/// face, i.e. incident to exactly one top-dimensional cell.  Returns the
/// boundary cells as sorted multisets of axis-cell ids (their closures).
inline std::vector<std::vector<int>> boundary_cells(const std::vector<Factor>& factors,
                                                    const std::vector<AxisCell>& axis,
                                                    int L) {
    const int g = (int)factors.size();
    const int m = (int)axis.size();
    // Ordered top cells: every permutation of the factors, arc factors
    // taking interval cells and point factors their breakpoint.
    std::vector<int> order(g);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Factor &fa = factors[a], &fb = factors[b];
        return std::tie(fa.lo, fa.hi) < std::tie(fb.lo, fb.hi);
    });
    std::set<std::vector<int>> tops;  // ordered tuples of cell ids
    auto emit_perm = [&](const std::vector<int>& p) {
        std::vector<std::vector<int>> per(g);
        for (int pos = 0; pos < g; ++pos) {
            const Factor& f = factors[p[pos]];
            for (int c = 0; c < m; ++c)
                if (axis[c].interval == !f.is_point() && cell_in_factor(axis[c], f, L))
                    per[pos].push_back(c);
        }
        std::vector<int> cur(g);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == g) {
                tops.insert(cur);
                return;
            }
            for (int c : per[pos]) {
                cur[pos] = c;
                rec(pos + 1);
            }
        };
        rec(0);
    };
    std::vector<int> p = order;
    do {
        emit_perm(p);
    } while (std::next_permutation(p.begin(), p.end(), [&](int a, int b) {
        const Factor &fa = factors[a], &fb = factors[b];
        return std::tie(fa.lo, fa.hi) < std::tie(fb.lo, fb.hi);
    }));
    // Candidate faces: drop one interval coordinate to either endpoint.
    std::set<std::vector<int>> faces;
    for (const auto& t : tops) {
        for (int j = 0; j < g; ++j) {
            if (!axis[t[j]].interval) continue;
            for (int side = 0; side < 2; ++side) {
                std::vector<int> f = t;
                // interval cell 2i+1 has endpoints 2i and 2i+2 (mod 2m').
                f[j] = side == 0 ? t[j] - 1 : (t[j] + 1) % m;
                faces.insert(std::move(f));
            }
        }
    }
    // A face is free when exactly one way of re-expanding a breakpoint
    // coordinate into a neighboring interval lands back in the top cells.
    std::set<std::vector<int>> bd;
    for (const auto& f : faces) {
        int parents = 0;
        for (int j = 0; j < g && parents < 2; ++j) {
            if (axis[f[j]].interval) continue;
            const int left = (f[j] + m - 1) % m, right = (f[j] + 1) % m;
            for (int up : {left, right}) {
                if (!axis[up].interval) continue;
                std::vector<int> t = f;
                t[j] = up;
                if (tops.count(t)) ++parents;
            }
        }
        if (parents == 1) {
            std::vector<int> key = f;
            std::sort(key.begin(), key.end());
            bd.insert(std::move(key));
        }
    }
    return {bd.begin(), bd.end()};
}

/// Does the cell multiset lie in the closed boundary region?  True when
/// it matches into the closure of some free face.
inline bool in_boundary(const std::vector<int>& cells,
                        const std::vector<std::vector<int>>& bd,
                        const std::vector<AxisCell>& axis, int L) {
    for (const auto& b : bd) {
        std::vector<Factor> closed;
        closed.reserve(b.size());
        for (int c : b) closed.push_back(axis[c].hull);
        if (match_cells_to_factors(cells, closed, axis, L)) return true;
    }
    return false;
}

/// Enumerate the sub-multisets of `cells` of the given size (as sorted
/// id vectors, each distinct multiset once) together with the complement.
inline void split_multisets(const std::vector<int>& cells, int size,
                            std::vector<std::pair<std::vector<int>, std::vector<int>>>& out) {
    const int n = (int)cells.size();
    std::set<std::vector<int>> seen;
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int from) {
        if ((int)idx.size() == size) {
            std::vector<int> a, b;
            size_t t = 0;
            for (int i = 0; i < n; ++i) {
                if (t < idx.size() && idx[t] == i) {
                    a.push_back(cells[i]);
                    ++t;
                } else {
                    b.push_back(cells[i]);
                }
            }
            if (seen.insert(a).second) out.emplace_back(std::move(a), std::move(b));
            return;
        }
        for (int i = from; i < n; ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
}

inline std::vector<Factor> rep_factor_list(const HandleRecord& rec) {
    std::vector<Factor> out;
    for (const auto& g : rec.groups)
        for (const auto& f : g.factors) out.push_back(f.f);
    return out;
}

}  // namespace attach_detail

/// Result of the cell-level attachment check for one index set.
struct AttachmentReport {
    bool ok = true;
    int records_checked = 0;
    long cells_checked = 0;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        ok = false;
        if (failures.size() < 20) failures.push_back(std::move(msg));
    }
};

/**
 * Verify, cell by cell, that for every record z >= 2 of the handle
 * decomposition of X_I the region shared with earlier pieces equals the
 * union of class-(A) boundary terms, and re-derive the glue column from
 * the cell model.  Intended for n <= 7.
 */
inline AttachmentReport verify_attachment(const IndexSet& I,
                                          OrderPolicy policy = OrderPolicy::ValueAsc) {
    using namespace attach_detail;
    AttachmentReport rep;
    const int k = I.k, n = 2 * k - 1, L = SCALE * k;
    const int target = n - I.ell();
    const auto records = decompose(I, policy);

    // Common refinement: cut along every endpoint used anywhere in the table.
    std::vector<Factor> all;
    std::vector<std::vector<Factor>> pieces;  // each Y_w, fully symmetrized
    pieces.reserve(records.size());
    for (const auto& r : records) {
        pieces.push_back(rep_factor_list(r));
        for (const auto& f : pieces.back()) all.push_back(f);
    }
    const auto axis = axis_cells(all, L);

    for (size_t zi = 0; zi < records.size(); ++zi) {
        const auto& r = records[zi];
        // Precompute boundary regions of the class-(A) groups.
        struct Term {
            int size;
            std::vector<std::vector<int>> bd;  // boundary cells of xi_a
            std::vector<Factor> others;        // factors of the other groups
        };
        std::vector<Term> terms;
        for (size_t a = 0; a < r.groups.size(); ++a) {
            const auto& g = r.groups[a];
            if (!g.class_a || g.dim == 0) continue;
            Term t;
            t.size = (int)g.factors.size();
            std::vector<Factor> fs;
            for (const auto& f : g.factors) fs.push_back(f.f);
            t.bd = boundary_cells(fs, axis, L);
            for (size_t b = 0; b < r.groups.size(); ++b)
                if (b != a)
                    for (const auto& f : r.groups[b].factors) t.others.push_back(f.f);
            terms.push_back(std::move(t));
        }

        std::vector<int> glue_derived;
        std::vector<char> glue_hit(zi, 0);
        int max_shared_dim = -1;

        if (zi == 0) {
            // First piece: nothing earlier to meet, so no term may exist.
            if (!terms.empty())
                rep.fail("record 1 has a positive-dimensional class-(A) group");
            ++rep.records_checked;
            continue;
        }

        for (const auto& X : box_cells(rep_factor_list(r), axis, L)) {
            ++rep.cells_checked;
            const int d = cells_dim(X, axis);
            bool lhs = false;
            for (size_t w = 0; w < zi; ++w) {
                if (match_cells_to_factors(X, pieces[w], axis, L)) {
                    lhs = true;
                    if (d > max_shared_dim) max_shared_dim = d;
                    if (d == target) glue_hit[w] = 1;
                }
            }
            bool rhs = false;
            for (const auto& t : terms) {
                std::vector<std::pair<std::vector<int>, std::vector<int>>> splits;
                split_multisets(X, t.size, splits);
                for (const auto& [xa, rest] : splits) {
                    if (!in_boundary(xa, t.bd, axis, L)) continue;
                    if (match_cells_to_factors(rest, t.others, axis, L)) {
                        rhs = true;
                        break;
                    }
                }
                if (rhs) break;
            }
            if (lhs != rhs) {
                std::ostringstream os;
                os << "record " << r.z << ": cell {";
                for (size_t i = 0; i < X.size(); ++i)
                    os << (i ? " " : "") << handle_detail::factor_str(axis[X[i]].hull);
                os << "} shared=" << (lhs ? "yes" : "no")
                   << " boundary-term=" << (rhs ? "yes" : "no");
                rep.fail(os.str());
            }
        }

        if (max_shared_dim > target) {
            std::ostringstream os;
            os << "record " << r.z << ": shared region has dimension " << max_shared_dim
               << " > " << target;
            rep.fail(os.str());
        }
        for (size_t w = 0; w < zi; ++w)
            if (glue_hit[w]) glue_derived.push_back((int)w + 1);
        if (glue_derived != r.glue) {
            std::ostringstream os;
            os << "record " << r.z << ": glue mismatch, derived "
               << handle_detail::int_list_str(glue_derived, ';') << " vs "
               << handle_detail::int_list_str(r.glue, ';');
            rep.fail(os.str());
        }
        ++rep.records_checked;
    }
    return rep;
}

}  // namespace multisect
