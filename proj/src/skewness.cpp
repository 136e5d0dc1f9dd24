#include "convextri/skewness.hpp"

#include <cassert>
#include <vector>

#include "convextri/triangulate.hpp"

namespace convextri {

namespace {

// h(i,j): maximum number of allowed non-crossing diagonals with both
// endpoints in the arc [i..j], not counting the chord (i,j) itself (the
// enclosing region's side; the parent cell accounts for it when chosen).
//
// A solution decomposes along the face adjacent to the side (i,j): a path
// i = c_0 < c_1 < ... < c_r = j whose steps are boundary moves (c+1) or
// chosen diagonals (d,c), each chosen diagonal contributing 1 + h(d,c).
// Chords of the full polygon are boundary edges iff adjacent, so the wrap
// edge (0,n-1) on the root cell is excluded automatically.
struct MaxDiagDP {
    const ConvexInstance& inst;
    int n;
    std::vector<int> memo; // -1 = unset

    explicit MaxDiagDP(const ConvexInstance& i)
        : inst(i), n(i.n()), memo(static_cast<std::size_t>(n) * n, -1) {}

    bool allowed_diag(int a, int b) const {
        Chord c(a, b);
        return !is_boundary(n, c) && !inst.contains(c);
    }

    int h(int i, int j) {
        if (j - i <= 1) return 0;
        int& slot = memo[static_cast<std::size_t>(i) * n + j];
        if (slot >= 0) return slot;
        std::vector<int> best(j - i + 1, 0);
        for (int c = i + 1; c <= j; ++c) {
            best[c - i] = best[c - i - 1];
            for (int d = i; d < c - 1; ++d) {
                if (d == i && c == j) continue; // the cell's own side
                if (!allowed_diag(d, c)) continue;
                int cand = best[d - i] + 1 + h(d, c);
                if (cand > best[c - i]) best[c - i] = cand;
            }
        }
        return slot = best[j - i];
    }
};

} // namespace

int skewness_formula(const ConvexInstance& inst) {
    if (!decide(inst))
        throw FormulaInapplicable("the closed formula needs a triangulable instance");
    const int n = inst.n();
    return (n - 2) * (n - 3) / 2 - inst.forbidden_size();
}

int max_noncrossing(const ConvexInstance& inst) {
    const int n = inst.n();
    int boundary = 0;
    for (int i = 0; i < n; ++i)
        if (!inst.contains(Chord(i, (i + 1) % n))) ++boundary;
    MaxDiagDP dp(inst);
    return boundary + dp.h(0, n - 1);
}

SkewnessReport skewness(const ConvexInstance& inst) {
    const int n = inst.n();
    SkewnessReport r;
    r.edges_total = n * (n - 1) / 2 - inst.forbidden_size();
    r.max_plane = max_noncrossing(inst);
    r.sk_c = r.edges_total - r.max_plane;
    r.formula_value = (n - 2) * (n - 3) / 2 - inst.forbidden_size();
    r.formula_applicable = decide(inst);
    assert(!r.formula_applicable || (r.sk_c == r.formula_value && r.max_plane == 2 * n - 3));
    return r;
}

} // namespace convextri
