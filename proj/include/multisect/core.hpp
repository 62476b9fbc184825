/**
 * Core types for combinatorial multisections of odd-dimensional tori.
 *
 * All geometry lives on the torus T^n = (R/kZ)^n with n = 2k-1.  Every
 * breakpoint used by the constructions (integers, halves, thirds, sixths)
 * is a multiple of 1/6, so coordinates are stored as exact integers in
 * units of 1/6 ("scaled" coordinates).  No floating point is used anywhere.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multisect {

/// Scale factor: one unit of torus length equals SCALE scaled units.
inline constexpr int SCALE = 6;

/// Parameters of the ambient torus T^n = (R/kZ)^n, n = 2k-1.
struct TorusParams {
    int k = 2;

    explicit TorusParams(int k_) : k(k_) {
        if (k < 2) throw std::invalid_argument("TorusParams: k must be >= 2");
    }
    int n() const { return 2 * k - 1; }
    /// Circumference of one coordinate circle in scaled (1/6) units.
    int L() const { return SCALE * k; }
};

inline int floor_div(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline int mod(int a, int b) { return a - floor_div(a, b) * b; }

/// A point of T^n with coordinates in scaled units, each in [0, L).
struct ScaledPoint {
    int k;
    std::vector<int> c;  // size n = 2k-1, values in [0, 6k)

    ScaledPoint(int k_, std::vector<int> coords) : k(k_), c(std::move(coords)) {
        const TorusParams p(k);
        if ((int)c.size() != p.n())
            throw std::invalid_argument("ScaledPoint: expected n = 2k-1 coordinates");
        for (int& v : c) v = mod(v, p.L());
    }
    bool is_diagonal() const {
        for (int v : c)
            if (v != c[0]) return false;
        return true;
    }
};

/**
 * One factor of a product region: either a single point {v} or a closed
 * arc [lo, hi] of the circle R/kZ, endpoints in scaled units.  Endpoints
 * are kept unreduced (hi - lo = true length, 0 <= hi - lo <= L); the arc
 * is the image of [lo, hi] under reduction mod L.
 */
struct Factor {
    int lo = 0;
    int hi = 0;  // lo == hi <=> singleton {lo}

    static Factor point(int v) { return Factor{v, v}; }
    static Factor arc(int lo, int hi) {
        if (hi < lo) throw std::invalid_argument("Factor: hi < lo");
        return Factor{lo, hi};
    }
    bool is_point() const { return lo == hi; }
    int length() const { return hi - lo; }
    bool operator==(const Factor&) const = default;
    auto operator<=>(const Factor&) const = default;
};

/// Does the arc/point `inner` lie inside the arc `outer`, mod L?
inline bool factor_contains(const Factor& outer, const Factor& inner, int L) {
    if (outer.length() >= L) return true;
    if (inner.length() > outer.length()) return false;
    // Slide inner.lo into [outer.lo, outer.lo + L).
    const int d = mod(inner.lo - outer.lo, L);
    return d + inner.length() <= outer.length();
}

/// Intersection summary of two factors on the circle of circumference L.
struct FactorMeet {
    bool nonempty = false;
    bool has_segment = false;  // some component of positive length
};

inline FactorMeet factor_meet(const Factor& a, const Factor& b, int L) {
    if (a.length() >= L) return FactorMeet{true, b.length() > 0 || a.length() > 0};
    if (b.length() >= L) return FactorMeet{true, a.length() > 0 || b.length() > 0};
    // Components of a∩b: shift b by multiples of L so the intervals overlap.
    FactorMeet m;
    const int base = b.lo + floor_div(a.lo - b.lo, L) * L;
    for (int s = base; s <= a.hi; s += L) {
        const int lo = std::max(a.lo, s), hi = std::min(a.hi, s + b.length());
        if (lo <= hi) {
            m.nonempty = true;
            if (lo < hi) m.has_segment = true;
        }
    }
    return m;
}

/// Does scaled value v (reduced mod L) lie on factor f?
inline bool factor_covers_value(const Factor& f, int v, int L) {
    return factor_contains(f, Factor::point(mod(v, L)), L);
}

/**
 * Monotonic representative of a point: coordinates sorted ascending within
 * [0, L).  Sorting is stable on (value, original index); among cyclic
 * rotations of the sorted tuple, the ascending one is the lexicographically
 * least monotonic lift x_1 <= ... <= x_n <= x_1 + k.
 */
inline std::vector<int> monotonic_sort(const ScaledPoint& x) {
    std::vector<int> s = x.c;
    std::stable_sort(s.begin(), s.end());
    return s;
}

/**
 * Periodic extension of a monotonic tuple: x_{r + m n} = x_r + m k for all
 * integers m (scaled: + m L).  Index j is 1-based and ranges over all of Z.
 */
inline int periodic_extend(const std::vector<int>& sorted, int j, int L) {
    const int n = (int)sorted.size();
    const int m = floor_div(j - 1, n);
    return sorted[(j - 1) - m * n] + m * L;
}

/// Cutoff indices a_r, b_r of a monotonic tuple (thresholds in scaled units).
struct Cutoffs {
    int a = 0;  // min{ a : x_{a+1} >= r }
    int b = 0;  // min{ b : x_{b+1} >  r }
};

/**
 * Compute a_r and b_r for threshold value r (scaled units, i.e. r = 6*piece
 * index for integer thresholds).  Requires the tuple to be monotonic and
 * not constant (off-diagonal), so the periodic extension is unbounded.
 */
inline Cutoffs cutoff_indices(const std::vector<int>& sorted, int r_scaled, int L) {
    const int n = (int)sorted.size();
    if (sorted.empty() || sorted.front() == sorted.back() || sorted.front() + L == sorted.back()) {
        // Constant tuples have no well-defined cutoffs except on the diagonal,
        // which callers must special-case.
        if (!sorted.empty() && sorted.front() != sorted.back())
            throw std::invalid_argument("cutoff_indices: tuple spans a full period");
        if (!sorted.empty() && sorted.front() == sorted.back() && n > 1)
            throw std::invalid_argument("cutoff_indices: diagonal point");
    }
    // x_j is nondecreasing and unbounded in both directions; binary-search a
    // window of periods around the threshold.
    auto x = [&](int j) { return periodic_extend(sorted, j, L); };
    // Find some j0 with x_{j0} >= r and x_{j0 - 2n} < r, then scan.
    int m = floor_div(r_scaled - sorted[0], L) + 2;  // x_{1+mn} = x_1 + mL >= r + ...
    int hi = 1 + m * n;
    while (x(hi) < r_scaled) hi += n;
    Cutoffs out;
    int j = hi;
    while (x(j - 1) >= r_scaled) --j;
    out.a = j - 1;  // min a with x_{a+1} >= r  => a = j-1
    int jb = j;
    while (x(jb) <= r_scaled) ++jb;
    out.b = jb - 1;  // min b with x_{b+1} > r
    return out;
}

/**
 * Membership x in X_r (piece r of the symmetric multisection): via cutoff
 * indices, b_{r+s} >= a_r + 2s for s = 0..k-1 off the diagonal, and the
 * diagonal rule X_r ∩ Δ = {(x,...,x) : x in [r, r+1]}.
 */
inline bool in_piece(const ScaledPoint& x, int r) {
    const TorusParams p(x.k);
    const int L = p.L();
    if (x.is_diagonal()) {
        const int d = mod(x.c[0] - SCALE * r, L);
        return d <= SCALE;
    }
    const std::vector<int> s = monotonic_sort(x);
    const int a0 = cutoff_indices(s, SCALE * r, L).a;
    for (int t = 0; t < x.k; ++t) {
        const int bt = cutoff_indices(s, SCALE * (r + t), L).b;
        if (bt < a0 + 2 * t) return false;
    }
    return true;
}

/**
 * Independent membership oracle: x in X_r iff the multiset of offsets
 * (x_j - r mod k) fits into the box [0,1]^2 [0,2]^2 ... [0,k-1]^2 [0,k]
 * in some order; with nested intervals this reduces to the sorted
 * comparison offsets_(j) <= caps_j.
 */
inline bool in_piece_box(const ScaledPoint& x, int r) {
    const TorusParams p(x.k);
    const int L = p.L();
    std::vector<int> d(x.c.size());
    for (size_t j = 0; j < x.c.size(); ++j) d[j] = mod(x.c[j] - SCALE * r, L);
    std::sort(d.begin(), d.end());
    // caps: 1,1,2,2,...,k-1,k-1,k (scaled).
    int idx = 0;
    for (int c = 1; c < p.k; ++c)
        for (int rep = 0; rep < 2; ++rep)
            if (d[idx++] > SCALE * c) return false;
    return d[idx] <= SCALE * p.k;
}

/// A unit subcube of the k^n grid, recorded by its minimal corner word.
using SubcubeWord = std::vector<std::uint8_t>;

/**
 * A face of the unit grid on T^n at integer resolution.  Per coordinate:
 * code 2j   = singleton {j},  j in Z_k
 * code 2j+1 = unit interval [j, j+1].
 */
using GridFace = std::vector<std::uint8_t>;

inline int face_dim(const GridFace& f) {
    int d = 0;
    for (auto c : f) d += (c & 1);
    return d;
}

/// All d-dimensional faces of the unit cube with minimal corner `w`.
inline std::vector<GridFace> cube_faces(const SubcubeWord& w, int d, int k) {
    const int n = (int)w.size();
    std::vector<GridFace> out;
    std::vector<int> sel(n, 0);
    // Choose which d coordinates stay as intervals; endpoints for the rest.
    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    auto emit_with_axes = [&](const std::vector<int>& axes) {
        std::vector<int> isAxis(n, 0);
        for (int a : axes) isAxis[a] = 1;
        std::vector<int> fixed;  // coordinates pinned to an endpoint
        for (int i = 0; i < n; ++i)
            if (!isAxis[i]) fixed.push_back(i);
        const int m = (int)fixed.size();
        for (int mask = 0; mask < (1 << m); ++mask) {
            GridFace f(n);
            for (int i = 0; i < n; ++i)
                if (isAxis[i]) f[i] = (std::uint8_t)(2 * w[i] + 1);
            for (int t = 0; t < m; ++t) {
                const int i = fixed[t];
                const int v = ((mask >> t) & 1) ? mod(w[i] + 1, k) : w[i];
                f[i] = (std::uint8_t)(2 * v);
            }
            out.push_back(std::move(f));
        }
    };
    if (d > n || d < 0) return out;
    // Iterate over all d-subsets of axes.
    std::vector<int> axes(d);
    std::function<void(int, int)> rec = [&](int start, int got) {
        if (got == d) {
            emit_with_axes(axes);
            return;
        }
        for (int i = start; i <= n - (d - got); ++i) {
            axes[got] = i;
            rec(i + 1, got + 1);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace multisect
