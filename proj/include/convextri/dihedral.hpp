#pragma once

#include <vector>

#include "convextri/instance.hpp"

namespace convextri {

/// Element of the dihedral group acting on polygon labels:
/// i -> (rotation + i) mod n, or i -> (rotation - i) mod n when reflected.
struct DihedralMap {
    int rotation = 0;
    bool reflected = false;

    int apply(int i, int n) const {
        int r = reflected ? rotation - i : rotation + i;
        r %= n;
        return r < 0 ? r + n : r;
    }

    Chord apply(Chord c, int n) const { return Chord(apply(c.a, n), apply(c.b, n)); }

    bool operator==(const DihedralMap&) const = default;
};

/// Composition: apply `inner` first, then `outer`.
DihedralMap compose(DihedralMap outer, DihedralMap inner, int n);

DihedralMap inverse(DihedralMap m, int n);

/// The 2n group elements for an n-gon.
std::vector<DihedralMap> all_maps(int n);

ConvexInstance apply_map(const ConvexInstance& inst, DihedralMap m);

/// Lexicographically least sorted chord list over all 2n dihedral images of
/// F. Two instances share a key iff some map carries one forbidden set onto
/// the other.
using CanonicalKey = std::vector<Chord>;
CanonicalKey canonical_key(const ConvexInstance& inst);

} // namespace convextri
