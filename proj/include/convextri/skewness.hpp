#pragma once

#include "convextri/instance.hpp"

namespace convextri {

struct SkewnessReport {
    int edges_total = 0;       // n(n-1)/2 - |F|
    int max_plane = 0;         // largest non-crossing edge subset of K_n - F
    int sk_c = 0;              // edges_total - max_plane
    int formula_value = 0;     // C(n-2,2) - |F|
    bool formula_applicable = false; // true iff K_n - F triangulates
};

/// Closed-form convex skewness C(n-2,2) - |F|, valid exactly when K_n - F
/// admits a triangulation; otherwise throws FormulaInapplicable.
int skewness_formula(const ConvexInstance& inst);

/// Size of a largest non-crossing edge subset of K_n - F: every surviving
/// boundary edge plus a maximum non-crossing set of allowed diagonals,
/// computed by an O(n^3) sub-polygon DP.
int max_noncrossing(const ConvexInstance& inst);

SkewnessReport skewness(const ConvexInstance& inst);

} // namespace convextri
