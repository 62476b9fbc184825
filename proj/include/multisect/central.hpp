#pragma once
// Alternative handle decomposition of the central manifold X_{Z_k}
// (section 7.3 of the source article) and a cell-level Euler oracle
// for it at one-sixth resolution.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "multisect/handles.hpp"

namespace multisect {

/// One piece X_{Z_k, i*, U°, U-, U*}.  Factors are scaled by 6 so the
/// sixth-integer cuts land on the integer lattice of [0, L), L = 6k.
struct CentralPiece {
    int i_star = 0;
    std::vector<int> Ucirc, Uminus, Ustar;
    std::vector<Factor> factors;  // k arcs rho_i plus k-1 points {i}
    int h = 0;                    // printed handle index k - |U°| - |U*|
};

namespace central_detail {

inline Factor central_rho(int k, int i_star, const std::vector<int>& Uc,
                          const std::vector<int>& Um, const std::vector<int>& Us, int i) {
    using handle_detail::has;
    using handle_detail::norm_arc;
    const int L = SCALE * k, s = SCALE * i;
    const bool succ = mod(i - i_star - 1, k) == 0;  // i = i* + 1
    if (has(Uc, i)) return norm_arc(s - 4, s - 2, L);
    if (has(Um, i)) {
        if (!succ) return norm_arc(s - 6, s - 4, L);
        return has(Us, i) ? norm_arc(s - 6, s - 5, L) : norm_arc(s - 5, s - 4, L);
    }
    if (i != i_star) return norm_arc(s - 2, s, L);
    return has(Us, i) ? norm_arc(s - 1, s, L) : norm_arc(s - 2, s - 1, L);
}

inline std::vector<std::vector<int>> subsets_of(const std::vector<int>& ground,
                                                bool superset_first) {
    std::vector<std::vector<int>> out;
    const int m = (int)ground.size();
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> s;
        for (int t = 0; t < m; ++t)
            if (mask & (1 << t)) s.push_back(ground[t]);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        if (a.size() != b.size()) return superset_first ? a.size() > b.size()
                                                        : a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace central_detail

/**
 * All pieces of the section-7.3 decomposition of X_{Z_k}, ordered so the
 * inclusion partial orders on U° and U* run superset-first (the printed
 * subset-first reading would not start with the stated 0-handle union).
 * Remaining ties are broken by size then sorted-element order.
 */
inline std::vector<CentralPiece> central_decomposition(int k) {
    using central_detail::central_rho;
    using central_detail::subsets_of;
    using handle_detail::has;
    std::vector<int> zk(k);
    std::iota(zk.begin(), zk.end(), 0);
    std::vector<CentralPiece> out;
    for (int i_star = 0; i_star < k; ++i_star) {
        for (const auto& Uc : subsets_of(zk, true)) {
            std::vector<int> rest;
            for (int i : zk)
                if (!has(Uc, i)) rest.push_back(i);
            for (const auto& Um : subsets_of(rest, false)) {
                std::vector<int> star_ground;
                const int succ = mod(i_star + 1, k);
                if (has(Um, succ)) star_ground.push_back(succ);
                if (!has(Uc, i_star) && !has(Um, i_star)) star_ground.push_back(i_star);
                std::sort(star_ground.begin(), star_ground.end());
                for (const auto& Us : subsets_of(star_ground, true)) {
                    CentralPiece p;
                    p.i_star = i_star;
                    p.Ucirc = Uc;
                    p.Uminus = Um;
                    p.Ustar = Us;
                    p.h = k - (int)Uc.size() - (int)Us.size();
                    for (int i : zk) {
                        p.factors.push_back(central_rho(k, i_star, Uc, Um, Us, i));
                        if (i != i_star) p.factors.push_back(Factor::point(SCALE * i));
                    }
                    out.push_back(std::move(p));
                }
            }
        }
    }
    return out;
}

namespace central_detail {

/// Closed cells of a product box on the sixth-integer grid, appended as
/// packed codes (per axis 2v for vertex v, 2v+1 for segment [v, v+1]).
inline void box_cells(const std::vector<Factor>& factors, int L,
                      std::unordered_set<std::uint64_t>& out) {
    const int n = (int)factors.size();
    std::vector<std::vector<int>> per(n);
    for (int j = 0; j < n; ++j) {
        const Factor& f = factors[j];
        for (int v = f.lo; v <= f.hi; ++v) {
            per[j].push_back(2 * mod(v, L));
            if (v < f.hi) per[j].push_back(2 * mod(v, L) + 1);
        }
    }
    std::uint64_t code = 0;
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            out.insert(code);
            return;
        }
        for (int c : per[j]) {
            const std::uint64_t saved = code;
            code = code * (2 * (std::uint64_t)L) + (std::uint64_t)c;
            rec(j + 1);
            code = saved;
        }
    };
    rec(0);
}

}  // namespace central_detail

/// Per-piece Euler increment of the growing union, computed on the
/// sixth-integer grid.  delta_chi[z] = chi(Y_1 u ... u Y_z) - chi(... Y_{z-1}).
struct CentralChiReport {
    std::vector<long long> delta_chi;   // one entry per piece
    std::vector<long long> piece_cells; // orbit size in boxes (handle count)
    long long chi_total = 0;
    bool tiles_exactly = false;         // union cell count matches X_{Z_k} oracle
};

inline CentralChiReport central_chi_oracle(int k) {
    const int n = 2 * k - 1, L = SCALE * k;
    const auto pieces = central_decomposition(k);
    CentralChiReport rep;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& p : pieces) {
        // Orbit of the product box under coordinate permutations.
        std::vector<Factor> fs = p.factors;
        std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) {
            return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
        });
        std::unordered_set<std::uint64_t> mine;
        long long boxes = 0;
        do {
            central_detail::box_cells(fs, L, mine);
            ++boxes;
        } while (std::next_permutation(fs.begin(), fs.end(),
                                       [](const Factor& a, const Factor& b) {
                                           return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
                                       }));
        long long delta = 0;
        for (std::uint64_t code : mine) {
            if (seen.count(code)) continue;
            seen.insert(code);
            int d = 0;
            std::uint64_t c = code;
            for (int j = 0; j < n; ++j) {
                d += (int)(c % 2ULL);
                c /= 2 * (std::uint64_t)L;
            }
            delta += (d % 2 == 0) ? 1 : -1;
        }
        rep.delta_chi.push_back(delta);
        rep.piece_cells.push_back(boxes);
        rep.chi_total += delta;
    }
    // The union of all pieces must be exactly X_{Z_k}, refined to sixths.
    std::vector<int> zk(k);
    std::iota(zk.begin(), zk.end(), 0);
    std::unordered_set<std::uint64_t> expected;
    for (const auto& f : formula_XI(k, IndexSet(k, zk))) {
        std::vector<Factor> fs;
        for (auto code : f) {
            const int j = code >> 1;
            fs.push_back((code & 1) ? Factor::arc(SCALE * j, SCALE * (j + 1))
                                    : Factor::point(SCALE * j));
        }
        central_detail::box_cells(fs, L, expected);
    }
    rep.tiles_exactly = (seen == expected);
    return rep;
}

/**
 * Pseudomanifold check for X_{Z_k} on the unit grid: every (k-1)-face of
 * the k-dimensional cell complex lies in exactly two k-cells.
 */
struct PseudomanifoldReport {
    bool ok = true;
    std::vector<GridFace> odd_faces;  // faces with incidence != 2
};

inline PseudomanifoldReport pseudomanifold_check(int k) {
    std::vector<int> zk(k);
    std::iota(zk.begin(), zk.end(), 0);
    const FaceSet top = formula_XI(k, IndexSet(k, zk));
    PseudomanifoldReport rep;
    std::unordered_map<GridFace, int, GridFaceHash> incidence;
    for (const auto& f : top) {
        for (size_t i = 0; i < f.size(); ++i) {
            if (!(f[i] & 1)) continue;
            const int j = f[i] >> 1;
            for (int endpoint : {j, mod(j + 1, k)}) {
                GridFace g = f;
                g[i] = (std::uint8_t)(2 * endpoint);
                incidence[g]++;
            }
        }
    }
    for (const auto& [g, c] : incidence)
        if (c != 2) {
            rep.ok = false;
            if (rep.odd_faces.size() < 10) rep.odd_faces.push_back(g);
        }
    return rep;
}

}  // namespace multisect
