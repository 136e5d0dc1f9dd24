#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "convextri/instance.hpp"

namespace convextri {

using BigInt = boost::multiprecision::cpp_int;

/// A triangulation of K_n - F, recorded as its n-3 diagonals (sorted).
struct Triangulation {
    std::vector<Chord> diagonals;
    bool operator==(const Triangulation&) const = default;
};

/// Interval DP over consecutive-vertex sub-polygons [i..j].
/// reach(i,j) is true iff that sub-polygon triangulates using only allowed
/// chords; count(i,j) is the exact number of such triangulations (filled only
/// when built with counts). Not meaningful when F contains a boundary edge;
/// decide/count short-circuit that case before building the table.
class DPTable {
public:
    DPTable(const ConvexInstance& inst, bool with_counts);

    int n() const { return n_; }
    bool reachable(int i, int j) const { return reach_[idx(i, j)] != 0; }
    const BigInt& count(int i, int j) const { return counts_[idx(i, j)]; }
    bool has_counts() const { return !counts_.empty(); }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
    int n_;
    std::vector<char> reach_;
    std::vector<BigInt> counts_;
};

/// True iff K_n - F admits a triangulation. O(n^3).
bool decide(const ConvexInstance& inst);

/// A witness triangulation when one exists. Deterministic: the smallest
/// split vertex is chosen at every DP cell.
std::optional<Triangulation> extract(const ConvexInstance& inst);

/// Exact number of triangulations of K_n - F (arbitrary precision).
BigInt count_triangulations(const ConvexInstance& inst);

/// Streams each distinct triangulation exactly once; stops early when the
/// callback returns false or after `limit` items.
void enumerate_all(const ConvexInstance& inst, std::optional<std::uint64_t> limit,
                   const std::function<bool(const Triangulation&)>& yield);

std::vector<Triangulation> all_triangulations(const ConvexInstance& inst,
                                              std::optional<std::uint64_t> limit = {});

/// True iff t is exactly n-3 distinct non-boundary chords, pairwise
/// non-crossing and disjoint from F. Malformed chords yield false, not an
/// error.
bool verify_triangulation(const ConvexInstance& inst, const std::vector<Chord>& t);

} // namespace convextri
