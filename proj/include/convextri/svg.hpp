#pragma once

#include <optional>
#include <string>

#include "convextri/instance.hpp"
#include "convextri/triangulate.hpp"

namespace convextri {

/// Deterministic SVG drawing of an instance: vertex i sits at angle
/// pi/2 - 2*pi*i/n on the unit circle (v0 on top, indices clockwise),
/// boundary edges solid black, forbidden chords dashed red and the optional
/// triangulation's diagonals solid blue. Byte-stable: floats are printed
/// with six decimals and elements in a fixed order.
std::string render_svg(const ConvexInstance& inst,
                       const std::optional<Triangulation>& tri = std::nullopt);

} // namespace convextri
