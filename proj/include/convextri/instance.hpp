#pragma once

#include <cstdint>
#include <vector>

#include "convextri/chord.hpp"

namespace convextri {

/// Immutable convex-polygon instance: n vertices in convex position plus a
/// forbidden chord set F. Membership is kept both as a sorted list and as a
/// per-vertex bitmap so the DP and the configuration detectors get O(1)
/// lookups. Safe to share across threads.
class ConvexInstance {
public:
    ConvexInstance(int n, std::vector<Chord> forbidden);

    int n() const { return n_; }
    const std::vector<Chord>& forbidden() const { return forbidden_; }
    int forbidden_size() const { return static_cast<int>(forbidden_.size()); }

    bool contains(Chord c) const { return contains(c.a, c.b); }
    bool contains(int a, int b) const {
        return (bits_[static_cast<std::size_t>(a) * stride_ + (b >> 6)] >> (b & 63)) & 1u;
    }

    bool has_boundary_in_forbidden() const { return has_boundary_; }

    /// Degree of polygon vertex v in F.
    int degree(int v) const { return degree_[v]; }
    const std::vector<int>& degrees() const { return degree_; }

private:
    int n_;
    int stride_;
    std::vector<Chord> forbidden_; // sorted, duplicate-free
    std::vector<std::uint64_t> bits_;
    std::vector<int> degree_;
    bool has_boundary_ = false;
};

/// All i with the ear chord (i-1 mod n, i+1 mod n) not in F.
std::vector<int> ear_vertices(const ConvexInstance& inst);

/// Instance on the (n-1)-gon obtained by deleting polygon position v:
/// chords incident to v are dropped, higher indices shift down by one.
ConvexInstance delete_vertex(const ConvexInstance& inst, int v);

} // namespace convextri
