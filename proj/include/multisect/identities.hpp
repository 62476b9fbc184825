/**
 * Combinatorial identities extracted from the multisection construction:
 * counting the subcubes of one piece and the cube types it contains.
 * Exact arbitrary-precision arithmetic throughout.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "core.hpp"

namespace multisect {

using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_binom(long long n, long long r) {
    if (r < 0 || n < 0 || r > n) return 0;  // empty-choice convention
    BigCount out = 1;
    for (long long i = 0; i < r; ++i) {
        out *= (n - i);
        out /= (i + 1);
    }
    return out;
}

inline BigCount big_pow(long long base, long long e) {
    BigCount out = 1;
    for (long long i = 0; i < e; ++i) out *= base;
    return out;
}

struct Combo1Report {
    BigCount nested_sum;      // #subcubes of X_0 via the nested binomial sum
    BigCount k_pow_n_minus1;  // k^{n-1}
    BigCount spanning_trees;  // #spanning trees of K_{k,k} = k^{2k-2}
    bool holds() const { return nested_sum == k_pow_n_minus1 && nested_sum == spanning_trees; }
};

/**
 * First identity: the number of words w in (Z_k)^n, n = 2k-1, with
 * #{r : w_r <= s} >= 2s+2 for all s in [0,k-2], computed as a nested sum of
 * multinomials over the value-counts (i_0,...,i_{k-2}), equals k^{n-1},
 * which also counts the spanning trees of the complete bipartite K_{k,k}.
 */
inline Combo1Report combo1(int k) {
    const int n = 2 * k - 1;
    Combo1Report rep;
    rep.nested_sum = 0;
    std::vector<int> cnt(std::max(0, k - 1), 0);
    std::function<void(int, int, BigCount)> rec = [&](int s, int used, BigCount ways) {
        if (s == k - 1) {
            rep.nested_sum += ways;  // remaining coords all take value k-1
            return;
        }
        for (int c = 0; used + c <= n; ++c) {
            // prefix constraint: sum_{t<=s} cnt_t >= 2s+2
            const int prefix = used + c;
            if (prefix < 2 * s + 2) continue;
            rec(s + 1, prefix, ways * big_binom(n - used, c));
        }
    };
    rec(0, 0, 1);
    rep.k_pow_n_minus1 = big_pow(k, n - 1);
    rep.spanning_trees = big_pow(k, 2 * k - 2);
    return rep;
}

struct Combo2Report {
    BigCount lhs;        // k * #constrained value-count tuples
    BigCount mid;        // #multisets of size n over k symbols
    BigCount rhs;        // binom(3k-2, k-1)
    BigCount cube_types; // optional cross-check: distinct cube types in X_0
    bool holds() const { return lhs == mid && mid == rhs; }
};

/**
 * Second identity: k times the number of tuples (i_0,...,i_{k-2}) of
 * nonnegative integers with partial sums sum_{t<=s} i_t >= 2s+2 and total
 * <= n equals the number of multisets of size n from k symbols, which is
 * binom(3k-2, k-1).  The constrained count itself is the number of distinct
 * cube types (coordinate multisets) occurring in X_0.
 */
inline Combo2Report combo2(int k, bool with_cube_type_check = false) {
    const int n = 2 * k - 1;
    Combo2Report rep;
    BigCount constrained = 0;
    std::function<void(int, int)> rec = [&](int s, int used) {
        if (s == k - 1) {
            constrained += 1;
            return;
        }
        for (int c = 0; used + c <= n; ++c) {
            if (used + c < 2 * s + 2) continue;
            rec(s + 1, used + c);
        }
    };
    rec(0, 0);
    rep.lhs = constrained * k;
    // Stars and bars, enumerated directly rather than via the formula.
    std::function<BigCount(int, int)> multisets = [&](int symbols, int size) -> BigCount {
        if (symbols == 1) return 1;
        BigCount tot = 0;
        for (int c = 0; c <= size; ++c) tot += multisets(symbols - 1, size - c);
        return tot;
    };
    rep.mid = multisets(k, n);
    rep.rhs = big_binom(3 * k - 2, k - 1);
    rep.cube_types = constrained;
    if (with_cube_type_check) {
        // Cube types of X_0 = multisets over Z_k meeting the prefix bound;
        // identical to `constrained` by construction, so enumerate types
        // independently as multisets and test the membership predicate.
        BigCount types = 0;
        std::vector<int> m(k, 0);
        std::function<void(int, int)> msrec = [&](int sym, int left) {
            if (sym == k - 1) {
                m[sym] = left;
                int run = 0;
                bool ok = true;
                for (int s = 0; s <= k - 2; ++s) {
                    run += m[s];
                    if (run < 2 * s + 2) ok = false;
                }
                if (ok) types += 1;
                return;
            }
            for (int c = 0; c <= left; ++c) {
                m[sym] = c;
                msrec(sym + 1, left - c);
            }
        };
        msrec(0, n);
        rep.cube_types = types;
    }
    return rep;
}

}  // namespace multisect
