#include "sigcheck/point_io.h"

#include "sigcheck/errors.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace sigcheck {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

const char* skip_space(const char* p, const char* end) {
    while (p != end && is_space(*p)) ++p;
    return p;
}

double parse_number(const char*& p, const char* end, int line, const char* what) {
    p = skip_space(p, end);
    if (p == end) throw ParseError(std::string("missing ") + what + " coordinate", line);
    // from_chars rejects a leading '+'
    const char* start = (*p == '+' && p + 1 != end && *(p + 1) != '-') ? p + 1 : p;
    double v = 0.0;
    const auto [next, ec] = std::from_chars(start, end, v);
    if (ec != std::errc() || (next != end && !is_space(*next))) {
        std::string tok(p, std::find_if(p, end, is_space));
        throw ParseError(std::string("bad ") + what + " coordinate '" + tok + "'", line);
    }
    if (!std::isfinite(v)) throw ParseError(std::string("non-finite ") + what + " coordinate", line);
    p = next;
    return v;
}

}  // namespace

PointSet read_points(std::istream& in) {
    PointSet ps;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        const char* p = raw.data();
        const char* end = raw.data() + raw.size();
        p = skip_space(p, end);
        if (p == end) continue;
        const double x = parse_number(p, end, line, "x");
        const double y = parse_number(p, end, line, "y");
        p = skip_space(p, end);
        if (p != end) throw ParseError("trailing text '" + std::string(p, end) + "'", line);
        ps.points.push_back(PlanarPoint{x, y});
    }
    if (in.bad()) throw IoError("read failed");
    return ps;
}

PointSet read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open point file '" + path + "'");
    return read_points(in);
}

std::string format_double(double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, end);
}

void write_points(std::ostream& out, const PointSet& ps) {
    for (const auto& pt : ps.points) out << format_double(pt.x) << ' ' << format_double(pt.y) << '\n';
}

void write_graph(std::ostream& out, const InfluenceGraph& g) {
    out << "# sig " << to_string(g.variant) << " n=" << g.radii.size() << " edges=" << g.edges.size() << '\n';
    for (std::size_t i = 0; i < g.radii.size(); ++i) out << "r " << i << ' ' << format_double(g.radii[i]) << '\n';
    for (const auto& [i, j] : g.edges) out << "e " << i << ' ' << j << '\n';
}

}  // namespace sigcheck
