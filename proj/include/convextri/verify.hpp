#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "convextri/instance.hpp"

namespace convextri {

struct VerifyMismatch {
    std::string item;    // canonical chord list, or cycle-multiset descriptor
    bool oracle_verdict; // DP / placement search
    bool subject_verdict; // classifier / theorem prediction
    bool operator==(const VerifyMismatch&) const = default;
};

struct VerifyReport {
    std::string theorem;
    int n = 0;
    std::uint64_t instances_checked = 0;
    std::uint64_t canonical_classes_checked = 0;
    std::uint64_t samples = 0; // 0 = exhaustive
    std::uint64_t seed = 0;
    std::vector<VerifyMismatch> mismatches;
    double wall_ms = 0;
};

inline constexpr int kDefaultEnumCeiling = 12;

/// Streams every forbidden set drawn from the diagonal universe (no boundary
/// edges) with min_edges <= |F| <= max_edges; with canonical_only, exactly
/// one representative per dihedral orbit (the canonical one). The callback
/// returns false to stop early.
void enumerate_forbidden_sets(int n, int min_edges, int max_edges, bool canonical_only,
                              const std::function<bool(const ConvexInstance&)>& yield,
                              int ceiling = kDefaultEnumCeiling);

/// Cross-validates one characterization band against the DP oracle:
///   t1: |F| <= n-3 (always triangulable),
///   t2: |F| = n-2, t3: |F| = n-1 (blocked iff the detector fires).
/// samples == 0 runs the band exhaustively over canonical classes; otherwise
/// draws `samples` seeded uniform subsets from the band. `jobs` threads
/// split the work; reports are identical regardless of jobs.
VerifyReport verify_theorem(const std::string& id, int n, std::uint64_t samples = 0,
                            std::uint64_t seed = 0, int jobs = 1);

/// Cross-validates the packing results against the placement search:
///   t4: n-cycles for 3 <= n <= n_max,
///   t5: all cycle multisets with total <= n_max.
VerifyReport verify_potential(const std::string& id, int n_max);

} // namespace convextri
