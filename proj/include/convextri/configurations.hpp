#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "convextri/dihedral.hpp"
#include "convextri/instance.hpp"

namespace convextri {

/// Witness that F is a blocking configuration with n-2 edges: either the
/// star form {v0vi : i=2..n-2} + {v1 v_{n-1}} under `map`, or the arc form
/// whose first `arc_len` vertices (after mapping) are the consecutive
/// non-pendant run.
struct FStarWitness {
    DihedralMap map;
    bool star = false;
    int arc_len = 0; // k, arc form only (2 <= k <= n-4)
};

/// Witness that F is a blocking configuration with n-1 edges. j1/j2 are the
/// degree-1/degree-2 vertex sets with an open ear, reported under the
/// instance's own labeling (the defining conditions are invariant under
/// relabeling, so `map` is the identity).
struct JStarWitness {
    DihedralMap map;
    bool type1 = false;                // else Type-2
    std::optional<Chord> removed_edge; // e with F - e in the (n-2)-edge family
    std::vector<int> j1;
    std::vector<int> j2;
};

struct ConfigClass {
    enum class Kind {
        Triangulable,
        BlockedFStar,
        BlockedJStar,
        BoundaryEdgeInF,
        OutOfCharacterization, // |F| >= n: resolved by the DP, see dp_triangulable
    };
    enum class Reason { None, BelowBound, NotFStar, NotJStar };

    Kind kind = Kind::Triangulable;
    Reason reason = Reason::None;
    std::optional<FStarWitness> fstar;
    std::optional<JStarWitness> jstar;
    bool dp_triangulable = false; // meaningful only for OutOfCharacterization

    bool triangulable() const {
        if (kind == Kind::Triangulable) return true;
        if (kind == Kind::OutOfCharacterization) return dp_triangulable;
        return false;
    }
};

/// Recognizer for the blocking family with |F| = n-2. Returns a witness iff
/// some dihedral relabeling satisfies the star form or the arc-form
/// conditions; absent when |F| != n-2, F has a boundary edge, or some
/// polygon vertex is untouched by F.
std::optional<FStarWitness> detect_fstar(const ConvexInstance& inst);

/// Recognizer for the blocking family with |F| = n-1 (n >= 5). Recurses into
/// detect_fstar for the degree-2 deletion test and the Type-1 edge search.
std::optional<JStarWitness> detect_jstar(const ConvexInstance& inst);

/// The j1/j2 vertex sets under the instance's given labeling, independent of
/// whether F is a valid configuration. Requires |F| = n-1, n >= 5, no
/// boundary chord and no isolated vertex; otherwise throws NotApplicable.
std::pair<std::vector<int>, std::vector<int>> jstar_vertex_sets(const ConvexInstance& inst);

/// Decision tree over |F|: boundary edge in F, below the always-triangulable
/// bound, the two characterized bands, or out of characterization (resolved
/// by the DP). Agrees with decide() on every input.
ConfigClass classify(const ConvexInstance& inst);

} // namespace convextri
