#pragma once

#include <string>

#include "convextri/instance.hpp"

namespace convextri {

/// Parses an instance document. Two forms are accepted:
///   JSON:  {"n": 7, "forbidden": [[0,2],[2,4]]}
///   lines: `n 7` followed by one `e i j` per chord; `#` starts a comment.
/// Malformed input throws ParseError with a position; bad chords throw
/// InvalidChord naming the offending pair.
ConvexInstance parse_instance(const std::string& text);

/// Canonical JSON document for an instance; parse(serialize(x)) == x.
std::string serialize_instance(const ConvexInstance& inst);

} // namespace convextri
