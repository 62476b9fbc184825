/**
 * Handle decompositions of the intersections X_I.
 *
 * For a simple proper index set I, X_I decomposes into pieces Y_z indexed by
 * a tuple (J, i*, V-, U-state): J is a subset of the block minima, i* an
 * element of I, V- a subset of the derived set V, and each element of the
 * derived set U carries one of three states (circ / minus / plus).  Each
 * piece has a representative Y_z^* that is a product of orbit groups; the
 * full piece is the union of the images of Y_z^* under coordinate
 * permutations, and those images are the handles contributed by the piece.
 *
 * This header enumerates the pieces in order, builds their representatives,
 * splits each representative into groups, classifies every group as (A) or
 * (B), computes the handle index h(z) (the total dimension of the class-(A)
 * groups), determines which earlier pieces each piece glues to, and provides
 * machine checks: attachment certificates, Euler characteristic / genus
 * reports, the central-intersection decomposition, a pseudomanifold check,
 * and the subset-order law used to order the V- data.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "identities.hpp"
#include "multisection.hpp"
#include "orbit.hpp"

namespace multisect {

/**
 * Order used for the i* sequence and for comparing elements inside J.
 *
 * ValueAsc orders elements of I by value.  OffsetMajor orders them by their
 * offset from the minimum of their block, breaking ties in favour of later
 * blocks.  Both orders occur: tables for index sets whose blocks all start
 * at small values use ValueAsc, while tables for index sets with a late
 * short block use OffsetMajor.
 */
enum class OrderPolicy {
    ValueAsc,
    OffsetMajor,
};

/// Roles a factor of a representative can play.
enum class RhoKind {
    Point,   // {i}
    Full,    // [i-1, i]
    UMinus,  // [i-1, i-2/3]
    UCirc,   // [i-2/3, i-1/3]
    UPlus,   // [i-1/3, i]
    VMinus,  // [i-1, i-1/2]
    VPlus,   // [i-1/2, i]
    Tail,    // [b, j], integer endpoints, anchored at a block maximum b
};

struct RepFactor {
    Factor f;  // scaled by SCALE, lo normalized into [0, L)
    RhoKind kind = RhoKind::Point;
    int i = 0;  // defining index: {i} or rho_i; for Tail, the anchor b
    bool operator==(const RepFactor&) const = default;
};

/// The combinatorial data selecting one piece Y_z.
struct PieceDescriptor {
    std::vector<int> J;       // subset of the block minima, sorted by value
    int i_star = 0;           // element of I
    std::vector<int> U, V;    // derived from (I, J, i*), sorted
    std::vector<int> Ucirc, Uminus;  // disjoint subsets of U (rest is U+)
    std::vector<int> Vminus;         // subset of V (rest is V+)
};

namespace handle_detail {

inline bool has(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

inline std::vector<int> intersect_sorted(const std::vector<int>& v, const std::vector<int>& w) {
    std::vector<int> out;
    std::set_intersection(v.begin(), v.end(), w.begin(), w.end(), std::back_inserter(out));
    return out;
}

}  // namespace handle_detail

/**
 * The derived sets (U, V) of a piece, from I, J and i*.  Per block with
 * minimum a and maximum b:
 *   - the block avoids i* and a is not in J:  U empty, V = block minus {a};
 *   - the block avoids i* and a is in J:      U = block minus {a, b}, V = {b}
 *     (so a one-element block {a} with a in J has U empty and V = {a});
 *   - i* is in the block and i* <= b-2:       U = block minus {a, i*, i*+1, b},
 *                                             V = {i*+1, b};
 *   - i* is in the block and i* >= b-1:       U = block minus {a, i*, b}, V empty.
 */
inline std::pair<std::vector<int>, std::vector<int>> uv_sets(const IndexSet& I,
                                                             const std::vector<int>& J,
                                                             int i_star) {
    using handle_detail::has;
    std::vector<int> U, V;
    for (const auto& blk : I.blocks()) {
        const int a = blk.front(), b = blk.back();
        const bool star = (i_star >= a && i_star <= b);
        if (!star) {
            if (!has(J, a)) {
                for (int i : blk)
                    if (i != a) V.push_back(i);
            } else {
                for (int i : blk)
                    if (i != a && i != b) U.push_back(i);
                V.push_back(b);
            }
        } else if (i_star <= b - 2) {
            for (int i : blk)
                if (i != a && i != i_star && i != i_star + 1 && i != b) U.push_back(i);
            V.push_back(i_star + 1);
            V.push_back(b);
        } else {
            for (int i : blk)
                if (i != a && i != i_star && i != b) U.push_back(i);
        }
    }
    std::sort(U.begin(), U.end());
    std::sort(V.begin(), V.end());
    return {U, V};
}

/**
 * Recursive order on subsets of a linearly ordered finite set: X precedes Y
 * iff max X < max Y (with max of the empty set = -infinity), or the maxima
 * agree and the remainder of Y precedes the remainder of X.  Subsets are
 * passed sorted ascending.
 */
inline bool eorder_less(std::vector<int> A, std::vector<int> B) {
    while (true) {
        if (A == B) return false;
        if (A.empty()) return true;
        if (B.empty()) return false;
        if (A.back() != B.back()) return A.back() < B.back();
        A.pop_back();
        B.pop_back();
        std::swap(A, B);  // reversed comparison of the remainders
    }
}

namespace handle_detail {

/// Rank of a subset of {i*+1, b} in the order used for the i*-block.
inline int star_block_rank(const std::vector<int>& sub, int i_star, int b) {
    const bool p = has(sub, i_star + 1), q = has(sub, b);
    if (p && !q) return 0;
    if (!p && !q) return 1;
    if (p && q) return 2;
    return 3;
}

}  // namespace handle_detail

/**
 * Strict order on the possible V- sets of a fixed (I, i*): blockwise, with
 * earlier blocks more significant.  A block containing i* with i* <= b-2
 * contributes the four-element order {i*+1} < {} < {i*+1, b} < {b}; every
 * other block contributes the recursive subset order above.
 */
inline bool vminus_less(const IndexSet& I, int i_star, const std::vector<int>& X,
                        const std::vector<int>& Y) {
    using namespace handle_detail;
    for (const auto& blk : I.blocks()) {
        const int a = blk.front(), b = blk.back();
        const auto Xr = intersect_sorted(X, blk), Yr = intersect_sorted(Y, blk);
        if (Xr == Yr) continue;
        if (i_star >= a && i_star <= b && i_star <= b - 2)
            return star_block_rank(Xr, i_star, b) < star_block_rank(Yr, i_star, b);
        return eorder_less(Xr, Yr);
    }
    return false;
}

/// One group of a piece representative.
struct HandleGroup {
    std::vector<RepFactor> factors;
    int dim = 0;        // number of interval factors
    bool class_a = false;
};

struct HandleRecord {
    int z = 0;  // 1-based position in the piece order
    PieceDescriptor desc;
    std::vector<HandleGroup> groups;
    int h = 0;          // handle index: total dimension of class-(A) groups
    BigCount count;     // number of handles: n! / prod |group|!
    std::vector<int> glue;  // earlier pieces met in dimension n - |I| (1-based)
};

namespace handle_detail {

inline Factor norm_arc(int lo, int hi, int L) {
    const int len = hi - lo;
    const int nlo = mod(lo, L);
    return Factor::arc(nlo, nlo + len);
}

/// The interval rho_i of a piece, with its role.
inline RepFactor rho_factor(const PieceDescriptor& d, int i, int L) {
    const int s = SCALE * i;
    if (has(d.Uminus, i)) return {norm_arc(s - 6, s - 4, L), RhoKind::UMinus, i};
    if (has(d.Ucirc, i)) return {norm_arc(s - 4, s - 2, L), RhoKind::UCirc, i};
    if (has(d.U, i)) return {norm_arc(s - 2, s, L), RhoKind::UPlus, i};
    if (has(d.Vminus, i)) return {norm_arc(s - 6, s - 3, L), RhoKind::VMinus, i};
    if (has(d.V, i)) return {norm_arc(s - 3, s, L), RhoKind::VPlus, i};
    return {norm_arc(s - 6, s, L), RhoKind::Full, i};
}

}  // namespace handle_detail

/**
 * The n factors of the representative of a piece.  Per block with minimum a,
 * maximum b and successor minimum c (the next block's minimum, or k for the
 * last block):
 *   - head: rho_a if a is in J, plus the point {a} unless i* = a is not in J
 *     (when nothing is contributed) or i* = a is in J (when only rho_a is);
 *   - middle i = a+1..b: rho_i, plus the point {i} unless i = i*;
 *   - tail: [b, j] twice for j = b+1..c-1, then [b, c-1] unless c mod k
 *     lies in J.
 */
inline std::vector<RepFactor> rep_factors(const IndexSet& I, const PieceDescriptor& d) {
    using namespace handle_detail;
    const int L = SCALE * I.k;
    std::vector<RepFactor> out;
    const auto blocks = I.blocks();
    for (size_t r = 0; r < blocks.size(); ++r) {
        const auto& blk = blocks[r];
        const int a = blk.front(), b = blk.back();
        const int c = (r + 1 < blocks.size()) ? blocks[r + 1].front() : I.k;
        if (has(d.J, a)) {
            out.push_back(rho_factor(d, a, L));
            if (d.i_star != a) out.push_back({Factor::point(mod(SCALE * a, L)), RhoKind::Point, a});
        } else if (d.i_star != a) {
            out.push_back({Factor::point(mod(SCALE * a, L)), RhoKind::Point, a});
        }
        for (int i = a + 1; i <= b; ++i) {
            out.push_back(rho_factor(d, i, L));
            if (i != d.i_star) out.push_back({Factor::point(mod(SCALE * i, L)), RhoKind::Point, i});
        }
        for (int j = b + 1; j <= c - 1; ++j) {
            const RepFactor t{norm_arc(SCALE * b, SCALE * j, L), RhoKind::Tail, b};
            out.push_back(t);
            out.push_back(t);
        }
        if (!has(d.J, mod(c, I.k)))
            out.push_back({norm_arc(SCALE * b, SCALE * (c - 1), L), RhoKind::Tail, b});
    }
    return out;
}

namespace handle_detail {

/// Partition factors into groups: two factors share a group whenever one
/// contains the other (as subsets of the circle).  Transitive closure.
inline std::vector<std::vector<RepFactor>> group_factors(const std::vector<RepFactor>& fs, int L) {
    const int n = (int)fs.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (factor_contains(fs[i].f, fs[j].f, L) || factor_contains(fs[j].f, fs[i].f, L))
                parent[find(i)] = find(j);
    std::map<int, std::vector<RepFactor>> buckets;
    for (int i = 0; i < n; ++i) buckets[find(i)].push_back(fs[i]);
    std::vector<std::vector<RepFactor>> out;
    for (auto& [root, v] : buckets) out.push_back(std::move(v));
    return out;
}

inline std::vector<int> without(const std::vector<int>& v, int x) {
    std::vector<int> out;
    for (int y : v)
        if (y != x) out.push_back(y);
    return out;
}

inline BigCount factorial_big(int n) {
    BigCount out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

}  // namespace handle_detail

/**
 * Classify one group.  A group is class (A) when some single change of the
 * piece data moves the group's carrier strictly earlier in the piece order;
 * otherwise it is class (B).  Concretely:
 *   - a group containing a tail factor is (B);
 *   - a group that is a single circ interval [i-2/3, i-1/3] is (B);
 *   - a group of dimension zero (a bare point) is (A), harmlessly: its
 *     boundary is empty so it contributes nothing downstream;
 *   - otherwise the group is (A) iff one of its factors admits a move:
 *       [i-1, i] with i in J, or with i = i*          -> move (drop i from J /
 *                                                        absorb across i*),
 *       [i-1, i-2/3] or [i-1/3, i]                    -> move (i joins Ucirc),
 *       [i-1, i-1/2] with i in J                      -> move (drop i from J),
 *       [i-1, i-1/2] with V- minus {i} earlier        -> move,
 *       [i-1/2, i]   with V- plus  {i} earlier        -> move.
 */
inline bool group_class_a(const std::vector<RepFactor>& g, const IndexSet& I,
                          const PieceDescriptor& d) {
    using namespace handle_detail;
    int dim = 0;
    for (const auto& f : g) {
        if (f.kind == RhoKind::Tail) return false;
        if (!f.f.is_point()) ++dim;
    }
    if (g.size() == 1 && g.front().kind == RhoKind::UCirc) return false;
    if (dim == 0) return true;
    for (const auto& f : g) {
        switch (f.kind) {
            case RhoKind::Full:
                if (has(d.J, f.i) || f.i == d.i_star) return true;
                break;
            case RhoKind::UMinus:
            case RhoKind::UPlus:
                return true;
            case RhoKind::VMinus:
                if (has(d.J, f.i)) return true;
                if (vminus_less(I, d.i_star, without(d.Vminus, f.i), d.Vminus)) return true;
                break;
            case RhoKind::VPlus: {
                std::vector<int> alt = d.Vminus;
                alt.push_back(f.i);
                std::sort(alt.begin(), alt.end());
                if (vminus_less(I, d.i_star, alt, d.Vminus)) return true;
                break;
            }
            default:
                break;
        }
    }
    return false;
}

/// Build the groups, classes and handle index of a piece.
inline HandleRecord build_record(const IndexSet& I, const PieceDescriptor& d) {
    HandleRecord rec;
    rec.desc = d;
    const int L = SCALE * I.k;
    const auto fs = rep_factors(I, d);
    for (auto& g : handle_detail::group_factors(fs, L)) {
        HandleGroup hg;
        hg.factors = g;
        for (const auto& f : g)
            if (!f.f.is_point()) ++hg.dim;
        hg.class_a = group_class_a(g, I, d);
        rec.groups.push_back(std::move(hg));
    }
    rec.h = 0;
    for (const auto& g : rec.groups)
        if (g.class_a) rec.h += g.dim;
    const int n = 2 * I.k - 1;
    BigCount cnt = handle_detail::factorial_big(n);
    for (const auto& g : rec.groups) cnt /= handle_detail::factorial_big((int)g.factors.size());
    rec.count = cnt;
    return rec;
}

/// Orbit box of the grouped representative Y_z^*.
inline OrbitBox rep_box(const IndexSet& I, const HandleRecord& rec) {
    OrbitBox box;
    box.k = I.k;
    int pos = 0;
    for (const auto& g : rec.groups) {
        OrbitGroup og;
        for (const auto& f : g.factors) {
            og.positions.push_back(pos++);
            og.factors.push_back(f.f);
        }
        box.groups.push_back(std::move(og));
    }
    return box;
}

/// Orbit box of the full piece Y_z (a single orbit of all n factors).
inline OrbitBox full_box(const IndexSet& I, const HandleRecord& rec) {
    OrbitBox box;
    box.k = I.k;
    OrbitGroup og;
    int pos = 0;
    for (const auto& g : rec.groups)
        for (const auto& f : g.factors) {
            og.positions.push_back(pos++);
            og.factors.push_back(f.f);
        }
    box.groups.push_back(std::move(og));
    return box;
}

namespace handle_detail {

/// Rank of each element of I under the chosen policy; smaller rank = earlier.
inline std::vector<int> ordered_elements(const IndexSet& I, OrderPolicy policy) {
    std::vector<std::pair<std::pair<int, int>, int>> keyed;
    const auto blocks = I.blocks();
    for (size_t r = 0; r < blocks.size(); ++r)
        for (int i : blocks[r]) {
            if (policy == OrderPolicy::ValueAsc)
                keyed.push_back({{i, 0}, i});
            else
                keyed.push_back({{i - blocks[r].front(), -(int)r}, i});
        }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    for (auto& [key, i] : keyed) out.push_back(i);
    return out;
}

/// All subsets of the block minima, ordered by size then lexicographically
/// in the policy's element order.
inline std::vector<std::vector<int>> ordered_j_sets(const IndexSet& I, OrderPolicy policy) {
    std::vector<int> mins;
    for (const auto& blk : I.blocks()) mins.push_back(blk.front());
    std::map<int, int> rank;
    {
        int r = 0;
        for (int i : ordered_elements(I, policy)) rank[i] = r++;
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> keyed;  // (rank key, J)
    const int m = (int)mins.size();
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> J, key;
        for (int t = 0; t < m; ++t)
            if (mask & (1 << t)) J.push_back(mins[t]);
        for (int j : J) key.push_back(rank[j]);
        std::sort(key.begin(), key.end());
        key.insert(key.begin(), (int)J.size());
        std::sort(J.begin(), J.end());
        keyed.push_back({key, J});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::vector<int>> out;
    for (auto& [key, J] : keyed) out.push_back(std::move(J));
    return out;
}

}  // namespace handle_detail

/**
 * All piece descriptors in order.  The tuple (J, i*, V-, U-state) is ordered
 * lexicographically: J by (size, policy-lex); i* in the policy's element
 * order; V- by vminus_less; the U-state by the state vector over the
 * elements of U taken in descending order, with circ < minus < plus.
 */
inline std::vector<PieceDescriptor> enumerate_pieces(const IndexSet& I, OrderPolicy policy,
                                                     int limit = -1) {
    std::vector<PieceDescriptor> out;
    const auto istars = handle_detail::ordered_elements(I, policy);
    for (const auto& J : handle_detail::ordered_j_sets(I, policy)) {
        for (int istar : istars) {
            auto [U, V] = uv_sets(I, J, istar);
            // All V- subsets, in order.
            std::vector<std::vector<int>> vsubs;
            const int nv = (int)V.size();
            for (int mask = 0; mask < (1 << nv); ++mask) {
                std::vector<int> s;
                for (int t = 0; t < nv; ++t)
                    if (mask & (1 << t)) s.push_back(V[t]);
                vsubs.push_back(std::move(s));
            }
            std::sort(vsubs.begin(), vsubs.end(),
                      [&](const auto& a, const auto& b) { return vminus_less(I, istar, a, b); });
            const int nu = (int)U.size();
            long long nstates = 1;
            for (int t = 0; t < nu; ++t) nstates *= 3;
            // State cycle per element: circ, minus, plus when the element's
            // block carries i*, but circ, plus, minus in i*-free blocks
            // (compare the i*=4 sections of the T^11 tables with the
            // single-block tables).
            std::vector<bool> starred(nu, false);
            for (const auto& blk : I.blocks()) {
                const bool has_star =
                    std::find(blk.begin(), blk.end(), istar) != blk.end();
                for (int t = 0; t < nu; ++t)
                    if (std::find(blk.begin(), blk.end(), U[t]) != blk.end())
                        starred[t] = has_star;
            }
            for (const auto& vm : vsubs) {
                for (long long c = 0; c < nstates; ++c) {
                    PieceDescriptor d;
                    d.J = J;
                    d.i_star = istar;
                    d.U = U;
                    d.V = V;
                    d.Vminus = vm;
                    long long rem = c;
                    for (int t = 0; t < nu; ++t) {  // digit t drives element U[t]
                        int st = (int)(rem % 3);
                        rem /= 3;
                        if (!starred[t] && st != 0) st = 3 - st;
                        if (st == 1) d.Uminus.push_back(U[t]);
                        else if (st == 0) d.Ucirc.push_back(U[t]);
                    }
                    out.push_back(std::move(d));
                    if (limit >= 0 && (int)out.size() >= limit) return out;
                }
            }
        }
    }
    return out;
}

/**
 * Full decomposition: the ordered pieces with groups, classes, handle index,
 * handle count and gluing data.  Piece z glues to piece w < z when their
 * orbit boxes meet in dimension exactly n - |I| (one less than the pieces'
 * own dimension).  With limit >= 0, only the first `limit` pieces are built
 * (their gluing never references later pieces).
 */
inline std::vector<HandleRecord> decompose(const IndexSet& I,
                                           OrderPolicy policy = OrderPolicy::ValueAsc,
                                           int limit = -1) {
    if (!I.is_simple() || !I.proper())
        throw std::invalid_argument("decompose: index set must be simple and proper");
    const int n = 2 * I.k - 1;
    const int target = n - I.ell();
    std::vector<HandleRecord> records;
    std::vector<OrbitBox> rep_boxes, piece_boxes;
    for (const auto& d : enumerate_pieces(I, policy, limit)) {
        HandleRecord rec = build_record(I, d);
        rec.z = (int)records.size() + 1;
        const OrbitBox rb = rep_box(I, rec);
        const OrbitBox fb = full_box(I, rec);
        for (size_t w = 0; w < records.size(); ++w) {
            const auto dim = orbit_intersection(rb, piece_boxes[w]);
            if (dim && *dim == target) rec.glue.push_back((int)w + 1);
        }
        records.push_back(std::move(rec));
        rep_boxes.push_back(rb);
        piece_boxes.push_back(fb);
    }
    return records;
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

namespace handle_detail {

/// A scaled coordinate as a reduced fraction of units.
inline std::string frac_str(int scaled) {
    const int g = std::gcd(scaled == 0 ? SCALE : std::abs(scaled), SCALE);
    const int num = scaled / g, den = SCALE / g;
    std::ostringstream os;
    if (den == 1)
        os << num;
    else
        os << num << '/' << den;
    return os.str();
}

inline std::string factor_str(const Factor& f) {
    std::ostringstream os;
    if (f.is_point())
        os << '{' << frac_str(f.lo) << '}';
    else
        os << '[' << frac_str(f.lo) << ',' << frac_str(f.hi) << ']';
    return os.str();
}

inline std::string int_list_str(const std::vector<int>& v, char sep) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

}  // namespace handle_detail

inline std::string group_str(const HandleGroup& g) {
    std::ostringstream os;
    if (g.factors.size() > 1) os << "<<";
    for (size_t i = 0; i < g.factors.size(); ++i) {
        if (i) os << ' ';
        os << handle_detail::factor_str(g.factors[i].f);
    }
    if (g.factors.size() > 1) os << ">>";
    return os.str();
}

inline std::string rep_str(const HandleRecord& rec) {
    std::ostringstream os;
    for (size_t i = 0; i < rec.groups.size(); ++i) {
        if (i) os << " x ";
        os << group_str(rec.groups[i]);
    }
    return os.str();
}

/// Minimal table: one line "z,h,glue" per piece, glue semicolon-joined.
inline std::string golden_csv(const std::vector<HandleRecord>& records) {
    std::ostringstream os;
    os << "z,h,glue\n";
    for (const auto& r : records)
        os << r.z << ',' << r.h << ',' << handle_detail::int_list_str(r.glue, ';') << '\n';
    return os.str();
}

/// Full table with the piece data and representative.
inline std::string records_csv(const std::vector<HandleRecord>& records) {
    using handle_detail::int_list_str;
    std::ostringstream os;
    os << "z,J,i_star,U,V,Vminus,rep,h,glue_to\n";
    for (const auto& r : records) {
        os << r.z << ',' << int_list_str(r.desc.J, ' ') << ',' << r.desc.i_star << ','
           << int_list_str(r.desc.U, ' ') << ',' << int_list_str(r.desc.V, ' ') << ','
           << int_list_str(r.desc.Vminus, ' ') << ',' << rep_str(r) << ',' << r.h << ','
           << int_list_str(r.glue, ';') << '\n';
    }
    return os.str();
}

inline std::string records_json(const std::vector<HandleRecord>& records) {
    using handle_detail::int_list_str;
    std::ostringstream os;
    auto arr = [](const std::vector<int>& v) {
        std::ostringstream a;
        a << '[';
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) a << ',';
            a << v[i];
        }
        a << ']';
        return a.str();
    };
    os << "[\n";
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        os << "  {\"z\":" << r.z << ",\"J\":" << arr(r.desc.J) << ",\"i_star\":" << r.desc.i_star
           << ",\"U\":" << arr(r.desc.U) << ",\"V\":" << arr(r.desc.V)
           << ",\"Vminus\":" << arr(r.desc.Vminus) << ",\"rep\":\"" << rep_str(r) << "\""
           << ",\"h\":" << r.h << ",\"glue_to\":" << arr(r.glue) << '}'
           << (i + 1 < records.size() ? "," : "") << '\n';
    }
    os << "]\n";
    return os.str();
}

}  // namespace multisect
