#include <catch2/catch_amalgamated.hpp>

#include "multisect/identities.hpp"
#include "multisect/multisection.hpp"

using namespace multisect;

TEST_CASE("combo1: nested sum equals k^{n-1} equals spanning trees of K_{k,k}") {
    for (int k = 2; k <= 12; ++k) {
        const auto rep = combo1(k);
        REQUIRE(rep.holds());
    }
    REQUIRE(combo1(2).nested_sum == 4);
    REQUIRE(combo1(3).nested_sum == 81);
    REQUIRE(combo1(4).nested_sum == 4096);
}

TEST_CASE("combo1 nested sum matches the actual subcube count for small k") {
    for (int k : {2, 3, 4}) {
        const auto rep = combo1(k);
        REQUIRE(rep.nested_sum == BigCount(build_piece(k, 0).size()));
    }
}

TEST_CASE("combo2: k * constrained count = multisets = binom(3k-2, k-1)") {
    for (int k = 2; k <= 12; ++k) {
        const auto rep = combo2(k, k <= 6);
        REQUIRE(rep.holds());
        REQUIRE(rep.cube_types * k == rep.lhs);
    }
    REQUIRE(combo2(2).rhs == 4);       // binom(4,1)
    REQUIRE(combo2(3).rhs == 21);      // binom(7,2)
    REQUIRE(combo2(4).rhs == big_binom(10, 3));
}

TEST_CASE("combo2 cube-type count matches the subcube inventory for small k") {
    for (int k : {2, 3, 4}) {
        std::set<std::vector<int>> types;
        for (const auto& w : build_piece(k, 0)) {
            std::vector<int> m(k, 0);
            for (auto c : w) ++m[c];
            types.insert(m);
        }
        REQUIRE(BigCount((long long)types.size()) == combo2(k).cube_types);
    }
}
