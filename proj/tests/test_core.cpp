#include <catch2/catch_amalgamated.hpp>

#include "multisect/core.hpp"
#include "multisect/orbit.hpp"

using namespace multisect;

namespace {

ScaledPoint pt(int k, std::initializer_list<int> sixths) {
    return ScaledPoint(k, std::vector<int>(sixths));
}

}  // namespace

TEST_CASE("monotonic_sort produces the least monotone lift") {
    // (1.5, 0.5, 1.0) on T^3, k=2 -> sorted (0.5, 1.0, 1.5), scaled by 6.
    const ScaledPoint x = pt(2, {9, 3, 6});
    REQUIRE(monotonic_sort(x) == std::vector<int>{3, 6, 9});
}

TEST_CASE("periodic extension shifts by one circumference per period") {
    const std::vector<int> s = {3, 6, 9};
    const int L = 12;
    REQUIRE(periodic_extend(s, 1, L) == 3);
    REQUIRE(periodic_extend(s, 4, L) == 3 + 12);
    REQUIRE(periodic_extend(s, 0, L) == 9 - 12);
    REQUIRE(periodic_extend(s, -2, L) == 3 - 12);
}

TEST_CASE("cutoff indices straddle thresholds correctly") {
    // k=2, x = (1/6, 5/6, 3/2): a_0 = 0 (x_0 = -1/2 < 0 <= x_1), b_0 = 0,
    // a_1 = b_1 = 2 (x_2 = 5/6 < 1 <= x_3).
    const std::vector<int> s = {1, 5, 9};
    const int L = 12;
    auto c0 = cutoff_indices(s, 0, L);
    REQUIRE(c0.a == 0);
    REQUIRE(c0.b == 0);
    auto c1 = cutoff_indices(s, 6, L);
    REQUIRE(c1.a == 2);
    REQUIRE(c1.b == 2);
}

TEST_CASE("cutoff periodicity: a_{r+k} = n + a_r and b likewise") {
    const std::vector<int> s = {0, 2, 7, 9, 11};  // k=3 example, n=5, L=18
    const int L = 18;
    for (int r6 = -18; r6 <= 36; r6 += 3) {
        auto c = cutoff_indices(s, r6, L);
        auto ck = cutoff_indices(s, r6 + L, L);
        REQUIRE(ck.a == c.a + 5);
        REQUIRE(ck.b == c.b + 5);
        REQUIRE(c.a <= c.b);
    }
}

TEST_CASE("a_r = b_r exactly off the integer lattice") {
    const std::vector<int> s = {0, 2, 7, 9, 11};
    const int L = 18;
    for (int r6 = 0; r6 < 18; r6 += 6) {
        auto c = cutoff_indices(s, r6, L);
        // a_r < b_r iff some coordinate equals the threshold.
        const bool hits = std::count(s.begin(), s.end(), r6) > 0;
        REQUIRE((c.a < c.b) == hits);
    }
}

TEST_CASE("in_piece agrees with the direct box-membership oracle") {
    for (int k : {2, 3}) {
        const TorusParams p(k);
        // Exhaustive over a coarse sublattice (halves) to keep runtime low.
        std::vector<int> c(p.n(), 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == p.n()) {
                const ScaledPoint x(k, c);
                for (int r = 0; r < k; ++r)
                    REQUIRE(in_piece(x, r) == in_piece_box(x, r));
                return;
            }
            for (int v = 0; v < p.L(); v += 3) {
                c[pos] = v;
                rec(pos + 1);
            }
        };
        rec(0);
    }
}

TEST_CASE("diagonal points lie exactly in the expected pieces") {
    const int k = 3;
    for (int v = 0; v < 18; ++v) {
        const ScaledPoint x(k, {v, v, v, v, v});
        for (int r = 0; r < k; ++r) {
            const bool expect = mod(v - 6 * r, 18) <= 6;
            REQUIRE(in_piece(x, r) == expect);
        }
    }
}

TEST_CASE("factor containment and meets on the circle") {
    const int L = 12;
    REQUIRE(!factor_contains(Factor::arc(-6, 0), Factor::point(3), L));  // [6,12] ∌ 3
    REQUIRE(factor_contains(Factor::arc(-6, 0), Factor::point(8), L));   // [6,12] ∋ 8
    REQUIRE(factor_contains(Factor::arc(0, 6), Factor::arc(2, 5), L));
    REQUIRE(!factor_contains(Factor::arc(0, 6), Factor::arc(5, 8), L));
    auto m = factor_meet(Factor::arc(0, 6), Factor::arc(6, 9), L);
    REQUIRE(m.nonempty);
    REQUIRE(!m.has_segment);
    m = factor_meet(Factor::arc(0, 6), Factor::arc(4, 9), L);
    REQUIRE(m.has_segment);
    m = factor_meet(Factor::arc(0, 3), Factor::arc(6, 9), L);
    REQUIRE(!m.nonempty);
    // Wrap-around: [10, 14] ≡ [10,12]∪[0,2] meets [0,3] in a segment.
    m = factor_meet(Factor::arc(10, 14), Factor::arc(0, 3), L);
    REQUIRE(m.has_segment);
}

TEST_CASE("orbit_intersection matches brute force on small boxes") {
    const int k = 2, L = 12;
    auto B = [&](std::vector<OrbitGroup> gs) { return OrbitBox{k, std::move(gs)}; };
    // <<0 a>> b^... on T^3: Y* = [0]x<<a>>... build a few grouped boxes.
    const Factor a = Factor::arc(0, 6), b = Factor::arc(6, 12), p0 = Factor::point(0),
                 p1 = Factor::point(6);
    std::vector<OrbitBox> boxes = {
        B({{{0, 1, 2}, {p0, a, b}}}),
        B({{{0, 1}, {p0, a}}, {{2}, {b}}}),
        B({{{0}, {a}}, {{1, 2}, {p1, b}}}),
        B({{{0, 1, 2}, {a, a, b}}}),
        B({{{0, 2}, {a, b}}, {{1}, {p1}}}),
    };
    for (const auto& A : boxes)
        for (const auto& Bb : boxes) {
            auto fast = orbit_intersection(A, Bb);
            auto slow = orbit_intersection_bruteforce(A, Bb);
            REQUIRE(fast.has_value() == slow.has_value());
            if (fast) REQUIRE(*fast == *slow);
        }
}
