#include "sigcheck/geometry.h"

#include "sigcheck/errors.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

namespace sigcheck {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void check_points(const PointSet& ps) {
    if (ps.size() < 2) throw DomainError("point set needs at least two points, got " + std::to_string(ps.size()));
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!std::isfinite(ps.points[i].x) || !std::isfinite(ps.points[i].y)) {
            throw DomainError("point " + std::to_string(i) + " has a non-finite coordinate");
        }
    }
}

}  // namespace

PolarPoint PlanarPoint::polar_about(const PlanarPoint& origin) const {
    const double dx = x - origin.x;
    const double dy = y - origin.y;
    return PolarPoint::make(std::hypot(dx, dy), std::atan2(dy, dx) * kDegPerRad);
}

double distance(const PlanarPoint& a, const PlanarPoint& b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::string to_string(SigVariant v) { return v == SigVariant::Closed ? "closed" : "open"; }

std::vector<int> InfluenceGraph::degrees() const {
    std::vector<int> deg(radii.size(), 0);
    for (const auto& [i, j] : edges) {
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
    }
    return deg;
}

std::vector<int> WeightedDigraph::out_half_units() const {
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    for (const auto& a : arcs) out[static_cast<std::size_t>(a.from)] += a.half_units;
    return out;
}

std::vector<double> nn_radii(const PointSet& ps) {
    check_points(ps);
    const std::size_t n = ps.size();
    std::vector<double> r(n, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = distance(ps.points[i], ps.points[j]);
            if (d == 0.0) {
                throw DomainError("duplicate points " + std::to_string(i) + " and " + std::to_string(j) + " at (" +
                                  fmt(ps.points[i].x) + ", " + fmt(ps.points[i].y) + ")");
            }
            r[i] = std::min(r[i], d);
            r[j] = std::min(r[j], d);
        }
    }
    return r;
}

bool sig_edge(double dist, double ru, double rv, SigVariant variant) {
    const double reach = ru + rv;
    if (variant == SigVariant::Closed) return dist <= reach * (1.0 + kTieSlack);
    return dist < reach * (1.0 - kTieSlack);
}

InfluenceGraph build_sig(const PointSet& ps, SigVariant variant) {
    InfluenceGraph g;
    g.variant = variant;
    g.radii = nn_radii(ps);
    const int n = static_cast<int>(ps.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            if (sig_edge(distance(ps.points[ui], ps.points[uj]), g.radii[ui], g.radii[uj], variant)) {
                g.edges.emplace_back(i, j);
            }
        }
    }
    return g;
}

int arc_half_units(double ra, double rb, const Params& params) {
    if (!(ra > 0.0) || !(rb > 0.0)) throw DomainError("arc weight needs positive radii");
    const double t = rb / ra;
    if (t > params.p) return 2;
    if (t >= params.q) return 1;
    return 0;
}

WeightedDigraph wsig(const InfluenceGraph& closed, const Params& params) {
    if (closed.variant != SigVariant::Closed) throw DomainError("wsig is defined on the closed graph");
    WeightedDigraph g;
    g.n = static_cast<int>(closed.radii.size());
    g.arcs.reserve(closed.edges.size() * 2);
    for (const auto& [i, j] : closed.edges) {
        // The reverse arc takes the complement so the pair always sums to 1,
        // even when r_i / r_j and r_j / r_i round differently at a threshold.
        const int w = arc_half_units(closed.radii[static_cast<std::size_t>(i)],
                                     closed.radii[static_cast<std::size_t>(j)], params);
        g.arcs.push_back(Arc{i, j, w});
        g.arcs.push_back(Arc{j, i, 2 - w});
    }
    return g;
}

WeightedDigraph wsig(const PointSet& ps, const Params& params) {
    return wsig(build_sig(ps, SigVariant::Closed), params);
}

OutWeightProfile out_weight_profile(const WeightedDigraph& g) {
    OutWeightProfile prof;
    const std::vector<int> units = g.out_half_units();
    prof.out_weight.reserve(units.size());
    int total = 0;
    for (std::size_t i = 0; i < units.size(); ++i) {
        prof.out_weight.push_back(units[i] / 2.0);
        total += units[i];
        if (prof.argmax < 0 || units[i] > units[static_cast<std::size_t>(prof.argmax)]) {
            prof.argmax = static_cast<int>(i);
        }
    }
    prof.max_out_weight = prof.argmax < 0 ? 0.0 : prof.out_weight[static_cast<std::size_t>(prof.argmax)];
    prof.total_weight = total / 2.0;
    return prof;
}

OutWeightProfile out_weight_profile(const PointSet& ps, const Params& params) {
    return out_weight_profile(wsig(ps, params));
}

PointSet hex_lattice(int rows, int cols, double spacing) {
    if (rows < 1 || cols < 1) throw DomainError("hex_lattice: rows and cols must be >= 1");
    if (!std::isfinite(spacing) || !(spacing > 0.0)) throw DomainError("hex_lattice: spacing must be > 0");
    PointSet ps;
    ps.points.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    const double dy = spacing * std::sqrt(3.0) / 2.0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            ps.points.push_back(PlanarPoint{(c + 0.5 * (r % 2)) * spacing, r * dy});
        }
    }
    return ps;
}

std::vector<int> hex_interior(int rows, int cols, int rings) {
    std::vector<int> out;
    for (int r = rings; r < rows - rings; ++r) {
        for (int c = rings; c < cols - rings; ++c) out.push_back(r * cols + c);
    }
    return out;
}

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

PointSet random_points(int n, std::uint64_t seed, double side) {
    if (n < 0) throw DomainError("random_points: negative count");
    if (!std::isfinite(side) || !(side > 0.0)) throw DomainError("random_points: side must be > 0");
    std::mt19937_64 rng(seed);
    PointSet ps;
    std::set<std::pair<double, double>> seen;
    while (static_cast<int>(ps.size()) < n) {
        const double x = unit_double(rng) * side;
        const double y = unit_double(rng) * side;
        if (seen.emplace(x, y).second) ps.points.push_back(PlanarPoint{x, y});
    }
    return ps;
}

LocalConfiguration local_configuration(const PointSet& ps, int centre, const Params& params) {
    const InfluenceGraph g = build_sig(ps, SigVariant::Closed);
    if (centre < 0 || centre >= static_cast<int>(ps.size())) throw DomainError("local_configuration: bad vertex");
    const auto uc = static_cast<std::size_t>(centre);
    const double scale = g.radii[uc];
    const PlanarPoint& o = ps.points[uc];
    const double R = params.one_plus_p();

    LocalConfiguration cfg;
    cfg.centre = centre;
    for (const auto& [i, j] : g.edges) {
        if (i != centre && j != centre) continue;
        const int other = i == centre ? j : i;
        const auto uo = static_cast<std::size_t>(other);
        // same orientation rule as wsig()
        const int forward = arc_half_units(g.radii[static_cast<std::size_t>(i)], g.radii[static_cast<std::size_t>(j)], params);
        const int w = i == centre ? forward : 2 - forward;
        if (w == 0) continue;
        const PlanarPoint rel{(ps.points[uo].x - o.x) / scale, (ps.points[uo].y - o.y) / scale};
        const PolarPoint pp = rel.polar_about(PlanarPoint{0.0, 0.0});
        if (w == 2) {
            cfg.ones.push_back(radial_project(pp, R));
            cfg.one_radii.push_back(g.radii[uo] / scale);
        } else {
            cfg.halves.push_back(pp);
            cfg.half_radii.push_back(g.radii[uo] / scale);
        }
    }
    return cfg;
}

HypothesisCheck check_local_hypotheses(const LocalConfiguration& cfg, const Params& params, double slack) {
    HypothesisCheck out;
    auto fail = [&](std::string what) {
        out.ok = false;
        out.failures.push_back(std::move(what));
    };
    const double R = params.one_plus_p();
    for (std::size_t i = 0; i < cfg.ones.size(); ++i) {
        const double rho = cfg.ones[i].rho;
        if (rho < params.p - slack || rho > R + slack) fail("weight-1 point " + std::to_string(i) + " at rho " + fmt(rho));
    }
    for (std::size_t i = 0; i < cfg.halves.size(); ++i) {
        const double rho = cfg.halves[i].rho;
        if (rho < 1.0 - slack || rho > R + slack) fail("half point " + std::to_string(i) + " at rho " + fmt(rho));
    }
    auto pairs = [&](const std::vector<PolarPoint>& a, const std::vector<PolarPoint>& b, bool same, double min_d,
                     const char* what) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = same ? i + 1 : 0; j < b.size(); ++j) {
                const double d = polar_distance(a[i], b[j]);
                if (d < min_d - slack) {
                    fail(std::string(what) + " " + std::to_string(i) + "," + std::to_string(j) + " at distance " + fmt(d));
                }
            }
        }
    };
    pairs(cfg.ones, cfg.ones, true, params.p, "weight-1 pair");
    pairs(cfg.halves, cfg.halves, true, params.q, "half pair");
    pairs(cfg.ones, cfg.halves, false, params.p, "mixed pair");
    return out;
}

int smallest_radius_vertex(const std::vector<double>& radii) {
    if (radii.empty()) return -1;
    return static_cast<int>(std::min_element(radii.begin(), radii.end()) - radii.begin());
}

}  // namespace sigcheck
