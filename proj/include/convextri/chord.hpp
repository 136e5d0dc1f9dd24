#pragma once

#include <compare>
#include <string>
#include <vector>

#include "convextri/errors.hpp"

namespace convextri {

/// A chord of the convex polygon, stored normalized with a < b.
/// Circular semantics (boundary-ness, crossing) live in the free functions
/// below, which take the polygon size n.
struct Chord {
    int a = 0;
    int b = 0;

    Chord() = default;
    Chord(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {
        if (x == y || x < 0 || y < 0)
            throw InvalidChord("invalid chord (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }

    auto operator<=>(const Chord&) const = default;
};

/// min(b-a, n-(b-a)); 1 for boundary edges, at most n/2.
int circular_length(int n, Chord c);

bool is_boundary(int n, Chord c);

/// True iff c1 and c2 properly cross in the convex polygon on n vertices,
/// i.e. exactly one endpoint of c2 lies strictly inside the open arc
/// (c1.a -> c1.b). Chords sharing an endpoint do not cross.
bool crosses(int n, Chord c1, Chord c2);

std::string to_string(Chord c);
std::string to_string(const std::vector<Chord>& cs);

} // namespace convextri
