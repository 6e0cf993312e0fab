#pragma once

// Planar point sets, sphere-of-influence graphs and the weighted digraph
// built from them.

#include "sigcheck/bounds.h"

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace sigcheck {

struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;

    /// Polar coordinates about `origin` (angle in degrees).
    PolarPoint polar_about(const PlanarPoint& origin) const;
    friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

double distance(const PlanarPoint& a, const PlanarPoint& b);

struct PointSet {
    std::vector<PlanarPoint> points;

    std::size_t size() const { return points.size(); }
};

enum class SigVariant { Closed, Open };

std::string to_string(SigVariant v);

/// Relative slack used to decide exact ties dist == r_u + r_v. Computed
/// radii and distances of lattice points that touch carry a few ulps of
/// rounding error; a tie counts as an edge in the closed graph and not in
/// the open one.
inline constexpr double kTieSlack = 1e-12;

struct InfluenceGraph {
    SigVariant variant = SigVariant::Closed;
    std::vector<double> radii;
    std::vector<std::pair<int, int>> edges;  ///< i < j, sorted

    std::vector<int> degrees() const;
};

/// w(a,b) in half units: 2 = weight 1, 1 = weight 1/2, 0 = weight 0.
struct Arc {
    int from = 0;
    int to = 0;
    int half_units = 0;
};

struct WeightedDigraph {
    std::vector<Arc> arcs;  ///< two per closed edge, (i,j) then (j,i)
    int n = 0;

    /// Out-weights in half units.
    std::vector<int> out_half_units() const;
};

/// Nearest-neighbour distance of every point, O(n^2). Throws DomainError
/// for fewer than two points, duplicates or non-finite coordinates.
std::vector<double> nn_radii(const PointSet& ps);

/// Edge iff dist(u,v) <= r_u + r_v (closed) or < r_u + r_v (open).
InfluenceGraph build_sig(const PointSet& ps, SigVariant variant);

/// Same rule applied to given radii; exposed so the rule can be re-derived.
bool sig_edge(double dist, double ru, double rv, SigVariant variant);

/// Weight of (a,b) in half units from the ratio r_b / r_a.
int arc_half_units(double ra, double rb, const Params& params);

WeightedDigraph wsig(const PointSet& ps, const Params& params);
WeightedDigraph wsig(const InfluenceGraph& closed, const Params& params);

struct OutWeightProfile {
    std::vector<double> out_weight;  ///< per vertex
    double max_out_weight = 0.0;
    int argmax = -1;
    double total_weight = 0.0;       ///< equals the closed edge count
};

OutWeightProfile out_weight_profile(const PointSet& ps, const Params& params);
OutWeightProfile out_weight_profile(const WeightedDigraph& g);

/// Triangular lattice, row-major: point (r, c) at ((c + (r odd ? 1/2 : 0)) s, r s sqrt(3)/2).
PointSet hex_lattice(int rows, int cols, double spacing);

/// Lattice points at least `rings` rows/columns away from the boundary.
std::vector<int> hex_interior(int rows, int cols, int rings);

/// Uniform doubles in [0,1) from a 64-bit engine, independent of the
/// standard library's distribution implementation.
double unit_double(std::mt19937_64& rng);

/// `n` distinct points uniform in [0, side)^2.
PointSet random_points(int n, std::uint64_t seed, double side = 1.0);

/// The neighbourhood of one vertex in the normalized frame used by the
/// angle-sum argument: centre at the origin, its radius scaled to 1.
struct LocalConfiguration {
    int centre = -1;
    std::vector<PolarPoint> ones;   ///< heads of weight-1 arcs, radially projected
    std::vector<PolarPoint> halves; ///< heads of weight-1/2 arcs, radially projected
    std::vector<double> one_radii;  ///< neighbour radii in the same frame
    std::vector<double> half_radii;
};

LocalConfiguration local_configuration(const PointSet& ps, int centre, const Params& params);

struct HypothesisCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Checks every premise of the bounded-weight statement on a local
/// configuration with slack `slack`: ones in [p, 1+p], halves in [1, 1+p],
/// pairwise distances >= p when a weight-1 point is involved and >= q
/// between halves.
HypothesisCheck check_local_hypotheses(const LocalConfiguration& cfg, const Params& params, double slack = 1e-9);

/// Index of the vertex with the smallest radius (first on ties).
int smallest_radius_vertex(const std::vector<double>& radii);

}  // namespace sigcheck
