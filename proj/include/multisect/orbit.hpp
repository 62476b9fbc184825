/**
 * Orbit boxes: products of coordinate-permutation orbits of boxes.
 *
 * An orbit box partitions the n coordinate positions into groups; each group
 * carries a multiset of factors (points/arcs of the circle R/kZ) and denotes
 * the union, over all ways to assign its factors bijectively to its
 * positions, of the corresponding product boxes.  The whole orbit box is the
 * product of its groups.  A one-group orbit box is a plain S_n-orbit.
 */
#pragma once

#include <map>
#include <optional>

#include "core.hpp"

namespace multisect {

struct OrbitGroup {
    std::vector<int> positions;   // subset of {0..n-1}
    std::vector<Factor> factors;  // same size as positions (multiset)
};

struct OrbitBox {
    int k = 2;
    std::vector<OrbitGroup> groups;  // positions partition {0..n-1}

    int n() const {
        int t = 0;
        for (const auto& g : groups) t += (int)g.positions.size();
        return t;
    }
    int L() const { return SCALE * k; }
};

namespace detail {

/// Multiset of factors with multiplicities, for backtracking pools.
struct Pool {
    std::vector<Factor> types;
    std::vector<int> count;

    static Pool from(const std::vector<Factor>& fs) {
        Pool p;
        std::map<Factor, int> m;
        for (const auto& f : fs) ++m[f];
        for (auto& [f, c] : m) {
            p.types.push_back(f);
            p.count.push_back(c);
        }
        return p;
    }
    int total() const {
        int t = 0;
        for (int c : count) t += c;
        return t;
    }
};

struct Cell {
    int ag = 0, bg = 0, quota = 0;
};

struct MeetTable {
    // meets[i][j] for (A type i of group ag, B type j of group bg): -1
    // disjoint, 0 point contact, 1 segment.
    std::vector<std::vector<int>> meets;
};

class IntersectSearch {
  public:
    IntersectSearch(const OrbitBox& A, const OrbitBox& B) : A_(A), B_(B), L_(A.L()) {
        apools_.reserve(A.groups.size());
        for (const auto& g : A.groups) apools_.push_back(Pool::from(g.factors));
        bpools_.reserve(B.groups.size());
        for (const auto& g : B.groups) bpools_.push_back(Pool::from(g.factors));
        for (size_t i = 0; i < A.groups.size(); ++i) {
            std::vector<char> inA(A.n(), 0);
            for (int p : A.groups[i].positions) inA[p] = 1;
            for (size_t j = 0; j < B.groups.size(); ++j) {
                int q = 0;
                for (int p : B.groups[j].positions) q += inA[p];
                if (q > 0) cells_.push_back(Cell{(int)i, (int)j, q});
            }
        }
        for (const auto& c : cells_) {
            MeetTable t;
            const auto& ap = apools_[c.ag];
            const auto& bp = bpools_[c.bg];
            t.meets.assign(ap.types.size(), std::vector<int>(bp.types.size(), -1));
            for (size_t i = 0; i < ap.types.size(); ++i)
                for (size_t j = 0; j < bp.types.size(); ++j) {
                    const FactorMeet m = factor_meet(ap.types[i], bp.types[j], L_);
                    t.meets[i][j] = !m.nonempty ? -1 : (m.has_segment ? 1 : 0);
                }
            tables_.push_back(std::move(t));
        }
    }

    std::optional<int> run() {
        best_.reset();
        cell(0, 0);
        return best_;
    }

  private:
    void cell(size_t ci, int acc) {
        if (ci == cells_.size()) {
            if (!best_ || acc > *best_) best_ = acc;
            return;
        }
        pairSlots(ci, cells_[ci].quota, 0, acc);
    }

    // Assign `left` pairs in cell ci; scan A types from index `ai` upward so
    // each sub-multiset of A factors is enumerated once.
    void pairSlots(size_t ci, int left, int ai, int acc) {
        if (left == 0) {
            cell(ci + 1, acc);
            return;
        }
        Pool& ap = apools_[cells_[ci].ag];
        Pool& bp = bpools_[cells_[ci].bg];
        // If remaining A factors of this group beyond ai cannot fill the
        // quota, fail early.
        int avail = 0;
        for (size_t i = ai; i < ap.types.size(); ++i) avail += ap.count[i];
        if (avail < left) return;
        for (size_t i = ai; i < ap.types.size(); ++i) {
            if (ap.count[i] == 0) continue;
            for (size_t j = 0; j < bp.types.size(); ++j) {
                if (bp.count[j] == 0) continue;
                const int m = tables_[ci].meets[i][j];
                if (m < 0) continue;
                --ap.count[i];
                --bp.count[j];
                pairSlots(ci, left - 1, (int)i, acc + m);
                ++ap.count[i];
                ++bp.count[j];
            }
        }
    }

    const OrbitBox& A_;
    const OrbitBox& B_;
    int L_;
    std::vector<Pool> apools_, bpools_;
    std::vector<Cell> cells_;
    std::vector<MeetTable> tables_;
    std::optional<int> best_;
};

}  // namespace detail

/**
 * Maximum dimension of the intersection of two orbit boxes: the largest,
 * over pairs of concrete boxes (one from each orbit box), of the number of
 * coordinates whose factor intersection contains a segment -- or nullopt if
 * every pair of concrete boxes is disjoint.
 *
 * Solved as an exact pairing search: a valid pair of concrete boxes pairs
 * each factor instance of A with one of B such that, for each A-group g and
 * B-group h, exactly |positions(g) ∩ positions(h)| pairs join g to h, and
 * every paired couple of factors meets.
 */
inline std::optional<int> orbit_intersection(const OrbitBox& A, const OrbitBox& B) {
    if (A.n() != B.n() || A.k != B.k)
        throw std::invalid_argument("orbit_intersection: mismatched ambient tori");
    detail::IntersectSearch s(A, B);
    return s.run();
}

/**
 * Reference implementation by brute force over concrete boxes (all distinct
 * factor-to-position assignments on both sides).  Exponential; used by tests
 * on small n to validate orbit_intersection.
 */
inline std::optional<int> orbit_intersection_bruteforce(const OrbitBox& A, const OrbitBox& B) {
    const int n = A.n(), L = A.L();
    auto concretize = [n](const OrbitBox& box) {
        std::vector<std::vector<Factor>> out;
        // Per group, all distinct permutations of the factor multiset.
        std::vector<std::vector<std::vector<Factor>>> per;
        for (const auto& g : box.groups) {
            std::vector<Factor> fs = g.factors;
            std::sort(fs.begin(), fs.end());
            std::vector<std::vector<Factor>> perms;
            do perms.push_back(fs);
            while (std::next_permutation(fs.begin(), fs.end()));
            per.push_back(std::move(perms));
        }
        std::vector<size_t> pick(box.groups.size(), 0);
        while (true) {
            std::vector<Factor> assign(n, Factor::point(0));
            for (size_t gi = 0; gi < box.groups.size(); ++gi)
                for (size_t t = 0; t < box.groups[gi].positions.size(); ++t)
                    assign[box.groups[gi].positions[t]] = per[gi][pick[gi]][t];
            out.push_back(std::move(assign));
            size_t gi = 0;
            for (; gi < pick.size(); ++gi) {
                if (++pick[gi] < per[gi].size()) break;
                pick[gi] = 0;
            }
            if (gi == pick.size()) break;
        }
        return out;
    };
    const auto as = concretize(A), bs = concretize(B);
    std::optional<int> best;
    for (const auto& a : as)
        for (const auto& b : bs) {
            int d = 0;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                const FactorMeet m = factor_meet(a[i], b[i], L);
                if (!m.nonempty)
                    ok = false;
                else
                    d += m.has_segment;
            }
            if (ok && (!best || d > *best)) best = d;
        }
    return best;
}

}  // namespace multisect
