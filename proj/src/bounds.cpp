#include "sigcheck/bounds.h"

#include "sigcheck/errors.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sigcheck {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

std::string fmt_num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void check_habitat(Weight w, const Annulus& a, const Params& params, const char* which) {
    const Annulus h = habitat(w, params);
    if (!a.within(h)) {
        throw DomainError(std::string("pair_angle_bound: class ") + which + " annulus [" +
                          fmt_num(a.lo) + ", " + fmt_num(a.hi) + "] is outside the weight-" +
                          to_string(w) + " habitat [" + fmt_num(h.lo) + ", " + fmt_num(h.hi) +
                          "]");
    }
}

}  // namespace

std::string to_string(Weight w) { return w == Weight::One ? "1" : "1/2"; }

Params Params::from_p(double p) {
    if (!std::isfinite(p) || !(p > 1.0)) {
        throw DomainError("threshold p must be a finite number > 1, got " + fmt_num(p));
    }
    return Params{p, 1.0 / p};
}

Annulus Annulus::make(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("annulus radii must be finite");
    if (lo < 0.0) throw DomainError("annulus inner radius " + fmt_num(lo) + " is negative");
    if (lo > hi) {
        throw DomainError("annulus inner radius " + fmt_num(lo) + " exceeds outer radius " +
                          fmt_num(hi));
    }
    return Annulus{lo, hi};
}

double normalize_degrees(double theta) {
    double t = std::fmod(theta, 360.0);
    if (t < 0.0) t += 360.0;
    // fmod of a tiny negative number can round back up to 360
    if (t >= 360.0) t = 0.0;
    return t;
}

PolarPoint PolarPoint::make(double rho, double theta_deg) {
    if (!std::isfinite(rho) || rho < 0.0) throw DomainError("polar radius must be >= 0");
    if (!std::isfinite(theta_deg)) throw DomainError("polar angle must be finite");
    return PolarPoint{rho, normalize_degrees(theta_deg)};
}

double phi(double d, double r, double R) {
    if (!(d > 0.0)) throw DomainError("phi: distance d = " + fmt_num(d) + " must be > 0");
    if (!(R - d >= 0.0)) {
        throw DomainError("phi: requires 0 <= R - d, got R = " + fmt_num(R) + ", d = " + fmt_num(d));
    }
    if (!(R - d <= r)) {
        throw DomainError("phi: requires R - d <= r, got R - d = " + fmt_num(R - d) +
                          ", r = " + fmt_num(r));
    }
    if (!(r <= R)) {
        throw DomainError("phi: requires r <= R, got r = " + fmt_num(r) + ", R = " + fmt_num(R));
    }
    const double c = std::clamp((R * R + r * r - d * d) / (2.0 * R * r), -1.0, 1.0);
    const double chord = std::acos(c);
    const double outer = 2.0 * std::asin(std::min(1.0, d / (2.0 * R)));
    return std::min(chord, outer) * kDegPerRad;
}

PolarPoint radial_project(const PolarPoint& x, double R) {
    if (!(R > 1.0)) throw DomainError("radial_project: R = " + fmt_num(R) + " must be > 1");
    if (x.rho > R) return PolarPoint{R, x.theta};
    return x;
}

double polar_distance(const PolarPoint& a, const PolarPoint& b) {
    const double da = (a.theta - b.theta) / kDegPerRad;
    const double sq = a.rho * a.rho + b.rho * b.rho - 2.0 * a.rho * b.rho * std::cos(da);
    return std::sqrt(std::max(0.0, sq));
}

Annulus habitat(Weight w, const Params& params) {
    return w == Weight::One ? Annulus{params.p, params.one_plus_p()}
                            : Annulus{1.0, params.one_plus_p()};
}

double pair_angle_bound(Weight wa, const Annulus& a, Weight wb, const Annulus& b,
                        const Params& params) {
    check_habitat(wa, a, params, "A");
    check_habitat(wb, b, params, "B");
    const double lo = std::min(a.lo, b.lo);
    const double hi = std::max(a.hi, b.hi);
    if (wa == Weight::One || wb == Weight::One) return phi(params.p, lo, hi);

    if (lo > params.one_plus_q()) {
        throw UnsupportedClaimError("pair_angle_bound: two half-weight classes with inner radius " +
                                    fmt_num(lo) + " > 1+q = " + fmt_num(params.one_plus_q()));
    }
    return phi(params.q, lo, std::min(params.one_plus_q(), hi));
}

int capacity_bound(Weight w, const Annulus& annulus, const Params& params) {
    const double b = pair_angle_bound(w, annulus, w, annulus, params);
    int k = std::max(1, static_cast<int>(std::floor(360.0 / b)));
    while (k > 1 && k * b > 360.0) --k;
    while ((k + 1) * b <= 360.0) ++k;
    return k;
}

}  // namespace sigcheck
