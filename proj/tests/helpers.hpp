#pragma once

// Test-only helpers shared by the unit and acceptance suites; the oracles
// here deliberately avoid the library's DP code paths.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "convextri/instance.hpp"

namespace testutil {

using convextri::Chord;
using convextri::ConvexInstance;

inline std::vector<Chord> cycle_chords(const std::vector<int>& walk) {
    std::vector<Chord> out;
    for (std::size_t i = 0; i < walk.size(); ++i)
        out.emplace_back(walk[i], walk[(i + 1) % walk.size()]);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Chord> diagonal_universe(int n) {
    std::vector<Chord> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 2; b < n; ++b)
            if (!(a == 0 && b == n - 1)) out.emplace_back(a, b);
    std::sort(out.begin(), out.end());
    return out;
}

// Every triangulation of K_n - F found by backtracking over the allowed
// diagonal list with pairwise crossing checks; independent of the interval
// DP it cross-checks.
inline std::vector<std::vector<Chord>> brute_triangulations(const ConvexInstance& inst) {
    const int n = inst.n();
    std::vector<std::vector<Chord>> out;
    if (inst.has_boundary_in_forbidden()) return out;
    std::vector<Chord> ds;
    for (const Chord& d : diagonal_universe(n))
        if (!inst.contains(d)) ds.push_back(d);
    std::vector<Chord> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(cur.size()) == n - 3) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < ds.size(); ++i) {
            bool ok = true;
            for (const Chord& c : cur)
                if (convextri::crosses(n, ds[i], c)) {
                    ok = false;
                    break;
                }
            if (ok) {
                cur.push_back(ds[i]);
                self(self, i + 1);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0);
    return out;
}

// Maximum non-crossing subset of the allowed diagonals by branch and bound.
inline int brute_max_diagonals(const ConvexInstance& inst) {
    const int n = inst.n();
    std::vector<Chord> ds;
    for (const Chord& d : diagonal_universe(n))
        if (!inst.contains(d)) ds.push_back(d);
    const int m = static_cast<int>(ds.size());
    std::vector<std::uint64_t> compat(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && !convextri::crosses(n, ds[i], ds[j])) compat[i] |= std::uint64_t{1} << j;
    int best = 0;
    auto rec = [&](auto&& self, std::uint64_t cand, int cnt) -> void {
        if (cnt + std::popcount(cand) <= best) return;
        if (!cand) {
            best = std::max(best, cnt);
            return;
        }
        int v = std::countr_zero(cand);
        std::uint64_t bit = std::uint64_t{1} << v;
        self(self, (cand & compat[v]) & ~bit, cnt + 1); // take v
        self(self, cand & ~bit, cnt);                   // skip v
    };
    rec(rec, m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1, 0);
    return best;
}

} // namespace testutil
