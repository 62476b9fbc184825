/**
 * The symmetric multisection of T^n = (R/kZ)^n, n = 2k-1, into k pieces
 * X_0..X_{k-1}, together with the closed-form description of the
 * intersections X_I = ∩_{i∈I} X_i and independent brute-force oracles.
 *
 * Unit subcubes of the k^n grid are recorded as words w ∈ (Z_k)^n (minimal
 * corners); faces of the grid use the GridFace encoding from core.hpp.
 */
#pragma once

#include <bit>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "core.hpp"

namespace multisect {

struct GridFaceHash {
    size_t operator()(const GridFace& f) const {
        size_t h = 1469598103934665603ull;
        for (auto c : f) h = (h ^ c) * 1099511628211ull;
        return h;
    }
};
using FaceSet = std::unordered_set<GridFace, GridFaceHash>;

/// A subset of Z_k indexing pieces whose intersection is studied.
struct IndexSet {
    int k;
    std::vector<int> elems;  // sorted, distinct, in [0, k)

    IndexSet(int k_, std::vector<int> e) : k(k_), elems(std::move(e)) {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        if (elems.empty() || elems.front() < 0 || elems.back() >= k)
            throw std::invalid_argument("IndexSet: elements must lie in [0,k)");
    }
    int ell() const { return (int)elems.size(); }
    bool proper() const { return ell() < k; }
    bool full() const { return ell() == k; }

    /// Translate I by t (mod k).
    IndexSet shifted(int t) const {
        std::vector<int> e;
        for (int i : elems) e.push_back(mod(i + t, k));
        return IndexSet(k, std::move(e));
    }

    /// Lexicographically least translate, i.e. the simple representative.
    bool is_simple() const {
        for (int t = 1; t < k; ++t)
            if (shifted(-t).elems < elems) return false;
        return true;
    }

    /**
     * Canonical form: the simple index set I' and shift t with I = I' + t.
     * X_I = X_{I'} + (t,...,t), so all structure transfers by translation.
     */
    std::pair<IndexSet, int> canonicalize() const {
        IndexSet best = *this;
        int shift = 0;
        for (int t = 1; t < k; ++t) {
            IndexSet cand = shifted(-t);
            if (cand.elems < best.elems) {
                best = cand;
                shift = t;
            }
        }
        return {best, shift};
    }

    /**
     * Blocks I_0, ..., I_{m-1}: maximal runs of consecutive elements.  For a
     * simple proper index set, 0 ∈ I and k-1 ∉ I, so no block wraps.
     */
    std::vector<std::vector<int>> blocks() const {
        if (full()) return {elems};
        std::vector<std::vector<int>> out;
        for (int i : elems) {
            if (!out.empty() && out.back().back() + 1 == i)
                out.back().push_back(i);
            else
                out.push_back({i});
        }
        return out;
    }

    /// All simple proper index sets of Z_k (each contains 0).
    static std::vector<IndexSet> all_simple_proper(int k) {
        std::vector<IndexSet> out;
        const int n_sub = 1 << k;
        for (int mask = 1; mask < n_sub - 1; ++mask) {
            if (!(mask & 1)) continue;  // simple sets contain 0
            std::vector<int> e;
            for (int i = 0; i < k; ++i)
                if (mask & (1 << i)) e.push_back(i);
            IndexSet I(k, e);
            if (I.is_simple()) out.push_back(std::move(I));
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Pieces at subcube level.
// ---------------------------------------------------------------------------

inline int word_index(const SubcubeWord& w, int k) {
    int v = 0;
    for (auto c : w) v = v * k + c;
    return v;
}

/**
 * All unit subcubes of X_i: words w with, for every s in [0, k-2],
 * #{r : (w_r - i mod k) <= s} >= 2s + 2.
 */
inline std::vector<SubcubeWord> build_piece(int k, int i) {
    const TorusParams p(k);
    const int n = p.n();
    std::vector<SubcubeWord> out;
    SubcubeWord w(n, 0);
    std::vector<int> cnt(k, 0);  // cnt[v] = #coords with offset v
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            int run = 0;
            for (int s = 0; s <= k - 2; ++s) {
                run += cnt[s];
                if (run < 2 * s + 2) return;
            }
            out.push_back(w);
            return;
        }
        for (int v = 0; v < k; ++v) {
            w[pos] = (std::uint8_t)mod(v + i, k);
            ++cnt[v];
            rec(pos + 1);
            --cnt[v];
        }
    };
    rec(0);
    return out;
}

struct CoverReport {
    bool covers = false;          // every subcube lies in some piece
    bool partitions = false;      // ... in exactly one piece
    std::vector<long long> sizes; // |X_i| for each i
};

/// Check that the k pieces cover the k^n subcubes exactly once each.
inline CoverReport verify_cover(int k) {
    const TorusParams p(k);
    long long total = 1;
    for (int i = 0; i < p.n(); ++i) total *= k;
    std::vector<int> hits((size_t)total, 0);
    CoverReport rep;
    for (int i = 0; i < k; ++i) {
        const auto piece = build_piece(k, i);
        rep.sizes.push_back((long long)piece.size());
        for (const auto& w : piece) ++hits[word_index(w, k)];
    }
    rep.covers = std::all_of(hits.begin(), hits.end(), [](int h) { return h >= 1; });
    rep.partitions = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    return rep;
}

// ---------------------------------------------------------------------------
// Faces of intersections: oracle and closed formula.
// ---------------------------------------------------------------------------

/// Bitset of subcube membership for one piece.
inline std::vector<char> piece_bitmap(int k, const std::vector<SubcubeWord>& piece) {
    const int n = piece.empty() ? 0 : (int)piece.front().size();
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= k;
    std::vector<char> bm((size_t)total, 0);
    for (const auto& w : piece) bm[word_index(w, k)] = 1;
    return bm;
}

/// Is the grid face contained in the piece (i.e. a face of one of its cubes)?
inline bool face_in_piece(const GridFace& f, const std::vector<char>& bitmap, int k) {
    const int n = (int)f.size();
    std::vector<int> fixed;
    SubcubeWord w(n, 0);
    for (int i = 0; i < n; ++i) {
        if (f[i] & 1)
            w[i] = (std::uint8_t)(f[i] >> 1);
        else
            fixed.push_back(i);
    }
    const int m = (int)fixed.size();
    for (int mask = 0; mask < (1 << m); ++mask) {
        for (int t = 0; t < m; ++t) {
            const int i = fixed[t];
            const int v = f[i] >> 1;
            w[i] = (std::uint8_t)(((mask >> t) & 1) ? mod(v - 1, k) : v);
        }
        if (bitmap[word_index(w, k)]) return true;
    }
    return false;
}

/**
 * Brute-force oracle for X_I: all d-faces of the unit grid contained in
 * every X_i, i in I, where d = n + 1 - |I| (the claimed dimension).
 * Piece subcube sets are supplied so the same sweep serves the hardcoded
 * 4-dimensional example.
 */
inline FaceSet faces_in_all_pieces(int k, int n, int d,
                                   const std::vector<std::vector<char>>& bitmaps) {
    FaceSet out;
    GridFace f(n);
    std::function<void(int, int)> rec = [&](int pos, int intervals) {
        if (n - pos < d - intervals) return;
        if (pos == n) {
            if (intervals != d) return;
            for (const auto& bm : bitmaps)
                if (!face_in_piece(f, bm, k)) return;
            out.insert(f);
            return;
        }
        for (int code = 0; code < 2 * k; ++code) {
            if ((code & 1) && intervals == d) continue;
            f[pos] = (std::uint8_t)code;
            rec(pos + 1, intervals + (code & 1));
        }
    };
    rec(0, 0);
    return out;
}

inline FaceSet oracle_XI(int k, const IndexSet& I) {
    const TorusParams p(k);
    std::vector<std::vector<char>> bitmaps;
    for (int i : I.elems) bitmaps.push_back(piece_bitmap(k, build_piece(k, i)));
    return faces_in_all_pieces(k, p.n(), p.n() + 1 - I.ell(), bitmaps);
}

/// Certify dim X_I: no (d+1)-face lies in all pieces.
inline bool oracle_XI_dim_sharp(int k, const IndexSet& I) {
    const TorusParams p(k);
    const int d = p.n() + 1 - I.ell();
    if (d + 1 > p.n()) return true;
    std::vector<std::vector<char>> bitmaps;
    for (int i : I.elems) bitmaps.push_back(piece_bitmap(k, build_piece(k, i)));
    return faces_in_all_pieces(k, p.n(), d + 1, bitmaps).empty();
}

// --- closed formula -------------------------------------------------------

/// Symbolic factor with integer endpoints (unreduced), used by the formula.
struct IntFactor {
    bool point;
    int lo, hi;  // point: value lo; interval: [lo, hi], hi > lo
};

/**
 * Materialize the S_n-orbit of the product of `factors` as unit grid faces:
 * split every interval factor into unit intervals, distribute the factors
 * over coordinates in all ways, reduce mod k.
 */
inline void materialize_orbit(const std::vector<IntFactor>& factors, int k, FaceSet& out) {
    const int n = (int)factors.size();
    // Unit choices per factor.
    std::vector<std::vector<std::uint8_t>> choice(n);
    for (int i = 0; i < n; ++i) {
        if (factors[i].point)
            choice[i].push_back((std::uint8_t)(2 * mod(factors[i].lo, k)));
        else
            for (int j = factors[i].lo; j < factors[i].hi; ++j)
                choice[i].push_back((std::uint8_t)(2 * mod(j, k) + 1));
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    GridFace f(n);
    do {
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n) {
                out.insert(f);
                return;
            }
            for (auto c : choice[perm[pos]]) {
                f[pos] = c;
                rec(pos + 1);
            }
        };
        rec(0);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

/**
 * Closed-form face set of X_I for a simple index set I: the union over
 * s in Z_ell of the orbit of
 *
 *   C_{I,s} = (prod_{t<s} {i_t} [i_t,i_t+1]^2 ... [i_t,i_{t+1}-1]^2 [i_t,i_{t+1}])
 *             x ([i_s,i_s+1]^2 ... [i_s,i_{s+1}-1]^2 [i_s,i_{s+1}])
 *             x (prod_{t>s} {i_t} [i_t,i_t+1]^2 ... [i_t,i_{t+1}-1]^2 [i_t,i_{t+1}]),
 *
 * indices read cyclically with i_{t+ell} = i_t + k.  For I = Z_k the
 * intersection of all pieces is the union over i_* of the orbit of
 * (0,...,i_*-hat,...,k-1) x prod_i [i,i+1].
 */
inline FaceSet formula_XI(int k, const IndexSet& I) {
    if (!I.is_simple()) throw std::invalid_argument("formula_XI: index set must be simple");
    FaceSet out;
    const auto& e = I.elems;
    const int ell = I.ell();
    if (I.full()) {
        for (int istar = 0; istar < k; ++istar) {
            std::vector<IntFactor> fs;
            for (int i = 0; i < k; ++i) {
                if (i != istar) fs.push_back(IntFactor{true, i, i});
                fs.push_back(IntFactor{false, i, i + 1});
            }
            materialize_orbit(fs, k, out);
        }
        return out;
    }
    auto elem = [&](int t) {  // i_t with cyclic unreduced extension
        const int m = floor_div(t, ell);
        return e[t - m * ell] + m * k;
    };
    for (int s = 0; s < ell; ++s) {
        std::vector<IntFactor> fs;
        for (int t = s; t < s + ell; ++t) {
            const int it = elem(t), next = elem(t + 1);
            if (t != s) fs.push_back(IntFactor{true, it, it});
            for (int j = it + 1; j <= next - 1; ++j) {
                fs.push_back(IntFactor{false, it, j});
                fs.push_back(IntFactor{false, it, j});
            }
            fs.push_back(IntFactor{false, it, next});
        }
        materialize_orbit(fs, k, out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Euler characteristic / connectivity of a face complex.
// ---------------------------------------------------------------------------

struct ComplexSummary {
    long long cells_by_dim[16] = {0};
    long long chi = 0;
    int components = 0;
    int top_dim = 0;
};

/**
 * Treat `faces` as the maximal cells of a subcomplex of the unit grid on
 * T^n, close under taking faces, and count cells.  chi = sum (-1)^d c_d.
 */
inline ComplexSummary complex_summary(const FaceSet& faces, int k) {
    FaceSet closure;
    std::vector<GridFace> stack(faces.begin(), faces.end());
    while (!stack.empty()) {
        GridFace f = std::move(stack.back());
        stack.pop_back();
        if (!closure.insert(f).second) continue;
        for (size_t i = 0; i < f.size(); ++i) {
            if (!(f[i] & 1)) continue;
            const int j = f[i] >> 1;
            for (int endpoint : {j, mod(j + 1, k)}) {
                GridFace g = f;
                g[i] = (std::uint8_t)(2 * endpoint);
                if (!closure.count(g)) stack.push_back(g);
            }
        }
    }
    ComplexSummary s;
    // Union-find over closure cells for connectivity.
    std::vector<GridFace> cells(closure.begin(), closure.end());
    std::unordered_map<GridFace, int, GridFaceHash> id;
    for (int i = 0; i < (int)cells.size(); ++i) id[cells[i]] = i;
    std::vector<int> parent(cells.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int i = 0; i < (int)cells.size(); ++i) {
        const GridFace& f = cells[i];
        const int d = face_dim(f);
        s.cells_by_dim[d]++;
        s.chi += (d % 2 == 0) ? 1 : -1;
        s.top_dim = std::max(s.top_dim, d);
        for (size_t c = 0; c < f.size(); ++c) {
            if (!(f[c] & 1)) continue;
            const int j = f[c] >> 1;
            for (int endpoint : {j, mod(j + 1, k)}) {
                GridFace g = f;
                g[c] = (std::uint8_t)(2 * endpoint);
                const int b = find(id.at(g));
                parent[b] = find(i);
            }
        }
    }
    std::set<int> roots;
    for (int i = 0; i < (int)cells.size(); ++i) roots.insert(find(i));
    s.components = (int)roots.size();
    return s;
}

// ---------------------------------------------------------------------------
// Hardcoded 4-dimensional example (T^4, k = 3, four coordinates).
// ---------------------------------------------------------------------------

/**
 * The 4-dimensional analogue on T^4 = (R/3Z)^4: X_0 is the orbit of
 * [0,1]^2 [0,2] [0,3]; at subcube level, words whose sorted offsets are
 * bounded by (0,0,1,2).
 */
inline std::vector<SubcubeWord> build_piece_t4(int i) {
    const int k = 3, n = 4;
    std::vector<SubcubeWord> out;
    for (int v = 0; v < k * k * k * k; ++v) {
        SubcubeWord w(n);
        int x = v;
        for (int p = n - 1; p >= 0; --p) {
            w[p] = (std::uint8_t)(x % k);
            x /= k;
        }
        std::vector<int> off;
        for (auto c : w) off.push_back(mod(c - i, k));
        std::sort(off.begin(), off.end());
        static const int caps[4] = {0, 0, 1, 2};
        bool ok = true;
        for (int t = 0; t < n; ++t) ok = ok && off[t] <= caps[t];
        if (ok) out.push_back(w);
    }
    return out;
}

inline FaceSet t4_intersection_faces(const std::vector<int>& I) {
    const int k = 3, n = 4;
    std::vector<std::vector<char>> bitmaps;
    for (int i : I) bitmaps.push_back(piece_bitmap(k, build_piece_t4(i)));
    return faces_in_all_pieces(k, n, n + 1 - (int)I.size(), bitmaps);
}

// ---------------------------------------------------------------------------
// Failed constructions (negative controls).
// ---------------------------------------------------------------------------

struct NegativeHandleReport {
    int dim_X0_Xlast = 0;   // dim(X_0 ∩ X_{k'-1}); equals 2 for every odd n
    bool union_form_ok = false;  // X_0 ∩ X_{k'-1} matches the stated orbit union
    bool heegaard_at_3 = false;  // for n = 3 the construction is a valid splitting
};

/**
 * The handle-partition X_i = <<a^{n-i} b^i>> ∪ <<a^{n+1-i} b^{i-1}>> of
 * (R/2Z)^n into (n+1)/2 pieces: X_0 and X_{k'-1} meet in dimension 2 for
 * every odd n, so the construction fails to be a multisection for n >= 5.
 */
inline NegativeHandleReport negative_handle_partition(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("negative_handle_partition: odd n >= 3");
    const int k = 2;  // side length of the torus
    const int kp = (n + 1) / 2;
    auto piece = [&](int i) {
        std::vector<SubcubeWord> out;
        for (int mask = 0; mask < (1 << n); ++mask) {
            const int ones = std::popcount((unsigned)mask);
            if (ones == 2 * i || ones == 2 * i + 1) {
                SubcubeWord w(n);
                for (int t = 0; t < n; ++t) w[t] = (std::uint8_t)((mask >> t) & 1);
                out.push_back(w);
            }
        }
        return out;
    };
    std::vector<std::vector<char>> bitmaps = {piece_bitmap(k, piece(0)),
                                              piece_bitmap(k, piece(kp - 1))};
    NegativeHandleReport rep;
    for (int d = n; d >= 0; --d) {
        if (!faces_in_all_pieces(k, n, d, bitmaps).empty()) {
            rep.dim_X0_Xlast = d;
            break;
        }
    }
    // Stated form: ∪_r << a b 0^r 1^{n-2-r} >>, r = 0..n-2.
    FaceSet expected;
    for (int r = 0; r <= n - 2; ++r) {
        std::vector<IntFactor> fs = {IntFactor{false, 0, 1}, IntFactor{false, 1, 2}};
        for (int t = 0; t < r; ++t) fs.push_back(IntFactor{true, 0, 0});
        for (int t = 0; t < n - 2 - r; ++t) fs.push_back(IntFactor{true, 1, 1});
        materialize_orbit(fs, k, expected);
    }
    rep.union_form_ok =
        expected == faces_in_all_pieces(k, n, rep.dim_X0_Xlast, bitmaps);
    rep.heegaard_at_3 = (n == 3) ? (rep.dim_X0_Xlast == n - 1) : false;
    return rep;
}

struct NegativeSumReport {
    bool covers = false;   // the three slabs cover T^5
    int dim_X0_X2 = 0;     // must be 3 (too big: a trisection needs 2)
    int dim_X0_X1 = 0;     // 4, as expected of adjacent pieces
};

/**
 * The coordinate-sum trisection attempt on T^5 = (R/3Z)^5 with
 * X_i = {5i <= x_1+...+x_5 <= 5(i+1)}, sums taken over representatives
 * with each coordinate in [0,3] (so a coordinate equal to 0 may be read
 * as 3).  Spine intersections are too large: dim(X_0 ∩ X_2) = 3.
 */
inline NegativeSumReport negative_sum_decomposition() {
    const int n = 5;
    NegativeSumReport rep;
    // Membership of a scaled lattice point (coords in [0,18)) in X_i: some
    // subset of zero coordinates lifted to 3 puts the sum in [5i, 5i+5].
    auto in_slab = [&](const std::vector<int>& c, int i) {
        int sum = 0, zeros = 0;
        for (int v : c) {
            sum += v;
            zeros += (v == 0);
        }
        for (int m = 0; m <= zeros; ++m) {
            const int s = sum + 18 * m;  // lifting m zeros adds 3 (scaled 18) each
            if (SCALE * 5 * i <= s && s <= SCALE * 5 * (i + 1)) return true;
        }
        return false;
    };
    // Cover check over the full 1/6 lattice of T^5.
    rep.covers = true;
    std::vector<int> c(n, 0);
    std::function<void(int)> sweep = [&](int pos) {
        if (!rep.covers) return;
        if (pos == n) {
            if (!in_slab(c, 0) && !in_slab(c, 1) && !in_slab(c, 2)) rep.covers = false;
            return;
        }
        for (int v = 0; v < 18; ++v) {
            c[pos] = v;
            sweep(pos + 1);
        }
    };
    sweep(0);
    // dim(X_a ∩ X_b), exactly: stratify by the number z of coordinates pinned
    // to 0 (each liftable to 3); on the remaining n-z coordinates in (0,3)
    // the constraints are slabs in the coordinate sum.  Scaled by 6.
    auto dim_meet = [&](int a, int b) {
        int best = -1;
        for (int z = 0; z <= n; ++z) {
            const int free = n - z;
            for (int ma = 0; ma <= z; ++ma)
                for (int mb = 0; mb <= z; ++mb) {
                    const int lo = std::max({0, 30 * a - 18 * ma, 30 * b - 18 * mb});
                    const int hi = std::min({18 * free, 30 * a + 30 - 18 * ma,
                                             30 * b + 30 - 18 * mb});
                    if (lo > hi) continue;
                    if (free == 0) {
                        best = std::max(best, 0);
                        continue;
                    }
                    // Full-dimensional iff the sum can vary in an open
                    // interval with all coordinates strictly inside (0,3).
                    if (lo < hi && lo < 18 * free && hi > 0)
                        best = std::max(best, free);
                    else
                        best = std::max(best, free - 1);
                }
        }
        return best;
    };
    rep.dim_X0_X2 = dim_meet(0, 2);
    rep.dim_X0_X1 = dim_meet(0, 1);
    return rep;
}

}  // namespace multisect
