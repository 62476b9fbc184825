#pragma once
// Euler-characteristic and genus cross-checks between the handle layer
// and independent cell counting.

#include <optional>
#include <vector>

#include "multisect/handles.hpp"

namespace multisect {

struct EulerGenusReport {
    long long chi_handles = 0;  // sum over pieces of count * (-1)^h
    long long chi_cells = 0;    // Euler characteristic of the face complex
    long long c0 = 0, c1 = 0;   // handles of index 0 and 1
    int components = 0;
    bool chi_match = false;
    std::optional<long long> genus;  // c1 - c0 + 1 when the piece is a 1-handlebody
};

/**
 * Compare the handle count of X_I against independent cell counting of
 * its face complex on the unit grid (subdividing to sixths would leave
 * chi unchanged).  For |I| = 1 the decomposition has only 0- and
 * 1-handles; with a connectivity check the genus c1 - c0 + 1 is reported.
 */
inline EulerGenusReport euler_genus_report(const IndexSet& I) {
    EulerGenusReport rep;
    int max_h = 0;
    for (const auto& r : decompose(I)) {
        const long long cnt = (long long)r.count;
        rep.chi_handles += (r.h % 2 == 0) ? cnt : -cnt;
        if (r.h == 0) rep.c0 += cnt;
        if (r.h == 1) rep.c1 += cnt;
        max_h = std::max(max_h, r.h);
    }
    const auto cells = complex_summary(formula_XI(I.k, I), I.k);
    rep.chi_cells = cells.chi;
    rep.components = cells.components;
    rep.chi_match = (rep.chi_handles == rep.chi_cells);
    if (max_h <= 1 && rep.components == 1) rep.genus = rep.c1 - rep.c0 + 1;
    return rep;
}

/// (d-1)-faces of a pure d-dimensional face set lying in exactly one
/// d-cell: the boundary of the complex when it is a manifold.
inline FaceSet boundary_faces(const FaceSet& top, int k) {
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
    FaceSet out;
    for (const auto& [g, c] : incidence)
        if (c == 1) out.insert(g);
    return out;
}

/// Handle counts of the 4-dimensional example on T^4 = (R/3Z)^4
/// (Kindred, "Efficient multisections of odd-dimensional tori", section 3.3):
/// X_0 has one 0-handle and four 1-handles; X_0 n X_1 has one 0-handle,
/// six 1-handles from Y_2 and four from Y_3.
struct T4HandleData {
    long long c0 = 0, c1 = 0;
};

inline T4HandleData t4_handle_counts(const std::vector<int>& I) {
    if (I == std::vector<int>{0}) return {1, 4};
    if (I == std::vector<int>{0, 1}) return {1, 10};
    throw std::invalid_argument("t4_handle_counts: simple proper I only");
}

struct T4EulerReport {
    T4HandleData handles;
    long long chi_cells = 0;
    int components = 0;
    long long genus = 0;                 // c1 - c0 + 1
    long long boundary_chi = 0;          // chi of the boundary surface (I = {0,1})
    long long boundary_genus = 0;        // (2 - chi) / 2
    bool boundary_is_central = false;    // boundary == X_0 n X_1 n X_2
};

/// Cross-check the hardcoded T^4 trisection pieces: handle counts against
/// cell counts, and for X_0 n X_1 the boundary surface against the
/// central surface X_0 n X_1 n X_2 (expected genus 10).
inline T4EulerReport t4_euler_report(const std::vector<int>& I) {
    T4EulerReport rep;
    rep.handles = t4_handle_counts(I);
    const FaceSet faces = t4_intersection_faces(I);
    const auto cells = complex_summary(faces, 3);
    rep.chi_cells = cells.chi;
    rep.components = cells.components;
    rep.genus = rep.handles.c1 - rep.handles.c0 + 1;
    if (I.size() == 2) {
        const FaceSet bd = boundary_faces(faces, 3);
        const auto surf = complex_summary(bd, 3);
        rep.boundary_chi = surf.chi;
        rep.boundary_genus = (2 - surf.chi) / 2;
        rep.boundary_is_central = (bd == t4_intersection_faces({0, 1, 2}));
    }
    return rep;
}

}  // namespace multisect
