#pragma once

// Numeric kernel: the annulus angle bound, radial projection, pair bounds
// between weighted point classes and single-class capacities.
//
// All angles are in degrees. Radii are normalized so that the sphere of
// influence of the central vertex has radius 1.

#include <string>

namespace sigcheck {

/// Certification slack: a sum is only accepted as "greater than 360" when it
/// exceeds 360 + kCertifyEpsilon degrees.
inline constexpr double kCertifyEpsilon = 1e-6;

/// Amount subtracted from every pair bound in paranoid mode.
inline constexpr double kParanoidWidening = 1e-9;

enum class Weight { One, Half };

std::string to_string(Weight w);

/// Threshold pair: ratios above `p` get weight 1, ratios in [q, p] weight 1/2.
struct Params {
    double p = 1.409;
    double q = 1.0 / 1.409;

    /// Builds the pair with q = 1/p. Throws DomainError unless p > 1.
    static Params from_p(double p);

    double one_plus_p() const { return 1.0 + p; }
    double one_plus_q() const { return 1.0 + q; }
};

/// Closed radial range [lo, hi] around the origin.
struct Annulus {
    double lo = 0.0;
    double hi = 0.0;

    /// Throws DomainError unless 0 <= lo <= hi and both are finite.
    static Annulus make(double lo, double hi);

    bool contains(double rho) const { return lo <= rho && rho <= hi; }
    bool within(const Annulus& outer) const { return outer.lo <= lo && hi <= outer.hi; }
    friend bool operator==(const Annulus&, const Annulus&) = default;
};

struct PolarPoint {
    double rho = 0.0;
    double theta = 0.0;  ///< degrees, normalized into [0, 360)

    static PolarPoint make(double rho, double theta_deg);
};

double normalize_degrees(double theta);

/// Lower bound on the central angle AOB for two points A, B of the annulus
/// [r, R] at mutual distance at least d:
///
///   min( acos((R^2 + r^2 - d^2) / (2 R r)), 2 asin(d / (2R)) )
///
/// Requires d > 0 and 0 <= R - d <= r <= R; a violation throws DomainError
/// naming the failed inequality.
double phi(double d, double r, double R);

/// Points outside the circle of radius R move onto it along their ray;
/// points inside stay fixed. Requires R > 1.
PolarPoint radial_project(const PolarPoint& x, double R);

/// Euclidean distance between two polar points.
double polar_distance(const PolarPoint& a, const PolarPoint& b);

/// Minimum angle between a point of class A and a point of class B that are
/// consecutive in circular order.
///
/// If at least one weight is 1 the points are at least p apart and the bound
/// is phi(p, min lo, max hi). Two half-weight points are only q apart, but the
/// outer radius can be capped at 1+q: phi(q, min lo, min(1+q, max hi)).
///
/// Weight-1 annuli must lie in [p, 1+p] and half-weight annuli in [1, 1+p]
/// (DomainError otherwise). Two half classes whose inner radii both exceed
/// 1+q throw UnsupportedClaimError.
double pair_angle_bound(Weight wa, const Annulus& a, Weight wb, const Annulus& b,
                        const Params& params);

/// Largest k >= 1 with k * pair_angle_bound(cls, cls) <= 360.
int capacity_bound(Weight w, const Annulus& annulus, const Params& params);

/// Habitat of a weight class: [p, 1+p] for weight 1, [1, 1+p] for weight 1/2.
Annulus habitat(Weight w, const Params& params);

}  // namespace sigcheck
