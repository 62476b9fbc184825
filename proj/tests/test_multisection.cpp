#include <catch2/catch_amalgamated.hpp>

#include "multisect/multisection.hpp"

using namespace multisect;

TEST_CASE("piece sizes are k^{n-1} and pieces partition the grid") {
    for (int k : {2, 3, 4}) {
        const CoverReport rep = verify_cover(k);
        REQUIRE(rep.covers);
        REQUIRE(rep.partitions);
        long long expect = 1;
        for (int i = 0; i < 2 * k - 2; ++i) expect *= k;
        for (long long s : rep.sizes) REQUIRE(s == expect);
    }
}

TEST_CASE("X_0 at k=2 is the orbit of alpha^2 [0,2]") {
    const auto piece = build_piece(2, 0);
    REQUIRE(piece.size() == 4);
    for (const auto& w : piece) {
        int ones = 0;
        for (auto c : w) ones += c;
        REQUIRE(ones <= 1);
    }
}

TEST_CASE("index sets: simplicity, canonicalization, blocks") {
    REQUIRE(IndexSet(4, {0, 2}).is_simple());
    REQUIRE(!IndexSet(3, {1, 2}).is_simple());
    auto [canon, shift] = IndexSet(3, {1, 2}).canonicalize();
    REQUIRE(canon.elems == std::vector<int>{0, 1});
    REQUIRE(shift == 1);
    const auto blocks = IndexSet(5, {0, 1, 3}).blocks();
    REQUIRE(blocks == std::vector<std::vector<int>>{{0, 1}, {3}});
    REQUIRE(IndexSet::all_simple_proper(4).size() == 4);  // {0},{01},{02},{012}
}

TEST_CASE("formula matches oracle: T^3") {
    const int k = 2;
    for (const auto& I : IndexSet::all_simple_proper(k)) {
        REQUIRE(formula_XI(k, I) == oracle_XI(k, I));
        REQUIRE(oracle_XI_dim_sharp(k, I));
    }
    // X_0 ∩ X_1 = <<a b 0>> ∪ <<a b 1>>: 12 edges... dimension 2 faces.
    const FaceSet meet = oracle_XI(k, IndexSet(k, {0, 1}));
    REQUIRE(meet.size() == 12);  // genus-3 Heegaard surface: 12 unit squares
}

TEST_CASE("formula matches oracle: T^5") {
    const int k = 3;
    for (const auto& I : IndexSet::all_simple_proper(k)) {
        REQUIRE(formula_XI(k, I) == oracle_XI(k, I));
        REQUIRE(oracle_XI_dim_sharp(k, I));
    }
}

TEST_CASE("formula matches oracle: T^7") {
    const int k = 4;
    for (const auto& I : IndexSet::all_simple_proper(k)) {
        REQUIRE(formula_XI(k, I) == oracle_XI(k, I));
    }
}

TEST_CASE("central intersection X_{Z_k} matches the oracle") {
    for (int k : {2, 3}) {
        const IndexSet I(k, [&] {
            std::vector<int> e(k);
            std::iota(e.begin(), e.end(), 0);
            return e;
        }());
        REQUIRE(formula_XI(k, I) == oracle_XI(k, I));
    }
}

TEST_CASE("euler characteristics of small intersections") {
    // Heegaard surface of T^3: genus 3, chi = -4.
    const auto surf = complex_summary(oracle_XI(2, IndexSet(2, {0, 1})), 2);
    REQUIRE(surf.chi == -4);
    REQUIRE(surf.components == 1);
    // X_0 in T^3 is a genus-3 handlebody: chi = 1 - 3 = -2.
    FaceSet x0;
    for (const auto& w : build_piece(2, 0)) {
        GridFace f(w.size());
        for (size_t i = 0; i < w.size(); ++i) f[i] = (std::uint8_t)(2 * w[i] + 1);
        x0.insert(f);
    }
    const auto hb = complex_summary(x0, 2);
    REQUIRE(hb.chi == -2);
    REQUIRE(hb.components == 1);
}

TEST_CASE("hardcoded T^4 example") {
    for (int i = 0; i < 3; ++i) REQUIRE(build_piece_t4(i).size() == 27);
    // X_0 ∩ X_1 = <<a 1 b [1,3]>> ∪ <<0 a b^2>>.
    FaceSet expected;
    materialize_orbit({IntFactor{false, 0, 1}, IntFactor{true, 1, 1}, IntFactor{false, 1, 2},
                       IntFactor{false, 1, 3}},
                      3, expected);
    materialize_orbit({IntFactor{true, 0, 0}, IntFactor{false, 0, 1}, IntFactor{false, 1, 2},
                       IntFactor{false, 1, 2}},
                      3, expected);
    REQUIRE(t4_intersection_faces({0, 1}) == expected);
    // Central surface <<a b 0 2>> ∪ <<a g 1 2>> ∪ <<b g 0 1>>, genus 10.
    FaceSet central;
    materialize_orbit({IntFactor{false, 0, 1}, IntFactor{false, 1, 2}, IntFactor{true, 0, 0},
                       IntFactor{true, 2, 2}},
                      3, central);
    materialize_orbit({IntFactor{false, 0, 1}, IntFactor{false, 2, 3}, IntFactor{true, 1, 1},
                       IntFactor{true, 2, 2}},
                      3, central);
    materialize_orbit({IntFactor{false, 1, 2}, IntFactor{false, 2, 3}, IntFactor{true, 0, 0},
                       IntFactor{true, 1, 1}},
                      3, central);
    REQUIRE(t4_intersection_faces({0, 1, 2}) == central);
    const auto s = complex_summary(central, 3);
    REQUIRE(s.chi == 2 - 2 * 10);
    REQUIRE(s.components == 1);
}

TEST_CASE("negative control: handle partition fails for n >= 5") {
    for (int n : {3, 5, 7}) {
        const auto rep = negative_handle_partition(n);
        REQUIRE(rep.dim_X0_Xlast == 2);
        REQUIRE(rep.union_form_ok);
        if (n == 3) REQUIRE(rep.heegaard_at_3);
    }
}

TEST_CASE("negative control: coordinate-sum trisection of T^5 fails") {
    const auto rep = negative_sum_decomposition();
    REQUIRE(rep.covers);
    REQUIRE(rep.dim_X0_X2 == 3);  // a trisection would need 2
    REQUIRE(rep.dim_X0_X1 == 4);
}
