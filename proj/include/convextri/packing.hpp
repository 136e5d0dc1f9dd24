#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "convextri/instance.hpp"
#include "convextri/triangulate.hpp"

namespace convextri {

/// Abstract (unplaced) simple graph; vertices are 0..vertex_count-1.
struct AbstractGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    static AbstractGraph cycle(int len);
    /// Disjoint cycles; ids are assigned per cycle in the given order.
    static AbstractGraph cycle_union(const std::vector<int>& lengths);
    static AbstractGraph petersen(int n, int k);
};

/// Generalized Petersen graph P(n,k): outer vertices are abstract ids
/// 0..n-1, inner vertices n..2n-1.
struct PetersenSpec {
    int n = 0;
    int k = 0;

    PetersenSpec(int n_, int k_);

    std::vector<std::pair<int, int>> outer_edges() const;  // a_i a_{i+1}
    std::vector<std::pair<int, int>> inner_edges() const;  // b_i b_{i+k}
    std::vector<std::pair<int, int>> spokes() const;       // a_i b_i
    AbstractGraph graph() const;
};

/// An injective placement of an abstract graph onto polygon positions. The
/// constructor enforces: injectivity, no induced boundary chord, the induced
/// instance triangulates (DP-certified), and the certificate (when present)
/// passes verify_triangulation. Violations throw ConstructionFault.
struct Placement {
    int n;
    std::vector<int> positions; // abstract id -> polygon position
    ConvexInstance induced;
    std::optional<std::vector<Chord>> certificate;
    bool used_fallback = false; // literal construction failed, search found another

    Placement(int n, std::vector<int> positions, const AbstractGraph& g,
              std::optional<std::vector<Chord>> certificate, bool used_fallback = false);
};

/// Placement of the n-cycle on K_n with a triangulation certificate drawn
/// from the step-alpha constructions; throws NotPackable for n <= 6.
Placement pack_cycle(int n);

/// Placement of a disjoint cycle union on K_n (n = sum of lengths); throws
/// NotPackable exactly for {3}, {4}, {5}, {6}, {3,3}, {3,4}.
Placement pack_two_regular(std::vector<int> lengths);

/// Cycle union with sum(lengths) = n-3 >= 4 placed so that three polygon
/// positions x,y,z stay unused, x,y hull-adjacent and z separating the
/// occupied vertices into two arcs; cycles zig-zag between the arcs.
Placement remark1_layout(int n, std::vector<int> lengths);

/// Positions x, y, z left unused by remark1_layout on an m-gon with the
/// given cycle lengths (x = m-2, y = m-1, z = number of first-arc slots).
struct Remark1Frame {
    int x, y, z;
};
Remark1Frame remark1_frame(int n, const std::vector<int>& lengths);

/// Placement of P(n,k) on K_{2n}; throws InvalidParams unless n >= 5 and
/// 1 <= k < n/2.
Placement pack_petersen(int n, int k);

/// Brute-force placement search up to dihedral symmetry: abstract vertex 0
/// is pinned to position 0 and reflections are halved. Returns the first
/// DP-verified placement in DFS order, or absent when the space (or budget)
/// is exhausted. Without a budget, n above `ceiling` throws SearchRefused.
std::optional<Placement> search_packing(const AbstractGraph& g, int n,
                                        std::optional<std::uint64_t> budget = {},
                                        int ceiling = 10);

} // namespace convextri
