#pragma once

// Plain-text point sets and graph listings.
//
// Point files: one "x y" pair per line, '#' starts a comment, blank lines are
// ignored. Numbers are written in shortest round-trip form, so reading a
// written file gives back the same doubles.

#include "sigcheck/geometry.h"

#include <iosfwd>
#include <string>

namespace sigcheck {

/// Throws ParseError with the 1-based line number on malformed input.
PointSet read_points(std::istream& in);

/// Throws IoError naming the path when the file cannot be opened.
PointSet read_points_file(const std::string& path);

void write_points(std::ostream& out, const PointSet& ps);

/// Shortest decimal string that parses back to `v`.
std::string format_double(double v);

/// Graph listing:
///   # sig <variant> n=<n> edges=<E>
///   r <i> <radius>
///   e <i> <j>
void write_graph(std::ostream& out, const InfluenceGraph& g);

}  // namespace sigcheck
