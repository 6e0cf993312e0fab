#include "sigcheck/bounds.h"
#include "sigcheck/errors.h"

#include "oracles.h"

#include <gtest/gtest.h>

#include <random>

using namespace sigcheck;

namespace {

const Params P = Params::from_p(1.409);

// A printed value "x.yyyy..." is a truncation: the true value lies in [x.yyyy, x.yyyy + unit).
void expect_truncation(double value, double printed, double unit) {
    EXPECT_GE(value, printed - 1e-12);
    EXPECT_LT(value, printed + unit);
}

}  // namespace

TEST(Params, ReciprocalThreshold) {
    EXPECT_NEAR(P.p * P.q, 1.0, 1e-15);
    expect_truncation(P.q, 0.7097, 1e-4);
    EXPECT_THROW(Params::from_p(1.0), DomainError);
    EXPECT_THROW(Params::from_p(0.5), DomainError);
    EXPECT_THROW(Params::from_p(std::nan("")), DomainError);
}

TEST(Annulus, RejectsDegenerateRanges) {
    EXPECT_THROW(Annulus::make(2.0, 1.0), DomainError);
    EXPECT_THROW(Annulus::make(-0.1, 1.0), DomainError);
    EXPECT_THROW(Annulus::make(1.0, INFINITY), DomainError);
    EXPECT_NO_THROW(Annulus::make(1.0, 1.0));
}

TEST(PolarPoint, NormalizesAngle) {
    EXPECT_DOUBLE_EQ(PolarPoint::make(1.0, -90.0).theta, 270.0);
    EXPECT_DOUBLE_EQ(PolarPoint::make(1.0, 720.0).theta, 0.0);
    EXPECT_THROW(PolarPoint::make(-1.0, 0.0), DomainError);
    const double t = normalize_degrees(-1e-18);
    EXPECT_GE(t, 0.0);
    EXPECT_LT(t, 360.0);
}

TEST(Phi, PrintedValues) {
    expect_truncation(phi(P.p, P.p, 1 + P.p), 31.2555, 1e-4);
    EXPECT_NEAR(phi(P.q, 1.0, 1.25), 32.98, 0.02);
    expect_truncation(phi(P.q, 1.0, 1.25), 32.98, 0.01);
    EXPECT_NEAR(phi(P.q, 1.25, 1 + P.q), 21.31, 0.02);
    expect_truncation(phi(P.q, 1.0, 1.2931), 31.8557, 1e-4);
    expect_truncation(phi(P.p, 1.0, 1.59), 52.6013, 1e-4);
    expect_truncation(phi(P.q, 1.2931, 1 + P.q), 22.2806, 1e-4);
    expect_truncation(phi(P.p, 1.2931, 1 + P.p), 28.2107, 1e-4);
}

TEST(Phi, EquilateralChord) { EXPECT_NEAR(phi(1.0, 1.0, 1.0), 60.0, 1e-12); }

TEST(Phi, MatchesGridSearch) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double R = 1.0 + 2.0 * u(rng);
        const double d = 0.2 + (R - 0.2) * u(rng);
        const double r = std::max(R - d, 0.05) + (R - std::max(R - d, 0.05)) * u(rng);
        const double got = phi(d, r, R);
        const double ref = oracle::phi_grid(d, r, R, 200);
        EXPECT_NEAR(got, ref, 1e-9) << "d=" << d << " r=" << r << " R=" << R;
    }
}

TEST(Phi, BranchesAgreeWhenRadiiEqual) {
    for (double R = 1.0; R <= 3.0; R += 0.05) {
        for (double d = 0.1; d <= R; d += 0.05) {
            const double a = oracle::deg(std::acos((2 * R * R - d * d) / (2 * R * R)));
            const double b = oracle::deg(2 * std::asin(d / (2 * R)));
            EXPECT_NEAR(a, b, 1e-9);
            EXPECT_NEAR(phi(d, R, R), b, 1e-9);
        }
    }
}

TEST(Phi, MonotoneInOuterRadiusAndDistance) {
    for (double r = 1.0; r <= 2.0; r += 0.1) {
        for (double d = 0.5; d <= 1.5; d += 0.1) {
            double prev = INFINITY;
            for (double R = std::max(r, d); R <= r + d; R += 0.01) {
                const double v = phi(d, r, R);
                EXPECT_LE(v, prev + 1e-12);
                prev = v;
            }
        }
    }
    for (double r = 1.0; r <= 2.0; r += 0.1) {
        for (double R = r; R <= r + 0.5; R += 0.1) {
            double prev = -INFINITY;
            for (double d = std::max(R - r, 0.01); d <= R; d += 0.01) {
                const double v = phi(d, r, R);
                EXPECT_GE(v, prev - 1e-12);
                prev = v;
            }
        }
    }
}

TEST(Phi, PreconditionsNameTheInequality) {
    EXPECT_THROW(phi(0.0, 1.0, 1.0), DomainError);
    EXPECT_THROW(phi(2.0, 1.0, 1.5), DomainError);  // R - d < 0
    EXPECT_THROW(phi(0.5, 1.0, 2.0), DomainError);  // R - d > r
    EXPECT_THROW(phi(0.5, 2.0, 1.8), DomainError);  // r > R
    try {
        phi(0.5, 1.0, 2.0);
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("R - d <= r"), std::string::npos) << e.what();
    }
}

TEST(RadialProject, ExteriorAndInteriorPoints) {
    const PolarPoint a = radial_project(PolarPoint::make(3.0, 40.0), 2.409);
    EXPECT_DOUBLE_EQ(a.rho, 2.409);
    EXPECT_DOUBLE_EQ(a.theta, 40.0);
    const PolarPoint b = radial_project(PolarPoint::make(1.7, 300.0), 2.409);
    EXPECT_DOUBLE_EQ(b.rho, 1.7);
    EXPECT_DOUBLE_EQ(b.theta, 300.0);
    EXPECT_THROW(radial_project(PolarPoint::make(1.0, 0.0), 1.0), DomainError);
}

TEST(RadialProject, PreservesAmplitudeNeverGrowsRadius) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const PolarPoint x = PolarPoint::make(5.0 * u(rng), 360.0 * u(rng));
        const double R = 1.0 + 3.0 * u(rng);
        const PolarPoint y = radial_project(x, R);
        EXPECT_EQ(y.theta, x.theta);
        EXPECT_LE(y.rho, x.rho);
    }
}

TEST(RadialProject, ProjectedDistanceProperty) {
    // Circles centred at X, Y that meet rho = 1 and do not contain each other's centre.
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int part_a = 0, part_b = 0;
    while (part_a < 20000 || part_b < 20000) {
        const double R = 1.0 + 2.0 * u(rng) + 1e-6;
        const bool a_case = part_a < 20000 && (part_b >= 20000 || u(rng) < 0.5);
        const double x = a_case ? R + 3.0 * u(rng) : 1.0 + (R - 1.0) * u(rng);
        const double y = R + 3.0 * u(rng);
        const double rx = std::max(x - 1.0, 0.0) + 2.0 * u(rng);
        const double ry = (y - 1.0) + 2.0 * u(rng);
        const PolarPoint X = PolarPoint::make(x, 360.0 * u(rng));
        const PolarPoint Y = PolarPoint::make(y, 360.0 * u(rng));
        if (polar_distance(X, Y) < std::max(rx, ry)) continue;
        const double dist = polar_distance(radial_project(X, R), radial_project(Y, R));
        EXPECT_GE(dist, R - 1.0 - 1e-9);
        (a_case ? part_a : part_b) += 1;
    }
}

TEST(PolarDistance, LawOfCosines) {
    EXPECT_NEAR(polar_distance(PolarPoint::make(1, 0), PolarPoint::make(1, 90)), std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(polar_distance(PolarPoint::make(2, 10), PolarPoint::make(3, 190)), 5.0, 1e-14);
}

TEST(PairAngleBound, WeightRules) {
    const Annulus full1 = habitat(Weight::One, P);
    expect_truncation(pair_angle_bound(Weight::One, full1, Weight::One, full1, P), 31.2555, 1e-4);

    const Annulus outer_half = Annulus::make(1.2, 1 + P.p);
    const double capped = pair_angle_bound(Weight::Half, outer_half, Weight::Half, outer_half, P);
    EXPECT_NEAR(capped, phi(P.q, 1.2, 1 + P.q), 1e-12);
    EXPECT_NEAR(capped, 19.85, 0.02);

    const double mixed = pair_angle_bound(Weight::One, Annulus::make(1.88, 1 + P.p), Weight::Half,
                                          Annulus::make(1.29, 1 + P.p), P);
    EXPECT_NEAR(mixed, 28.11, 0.02);
    EXPECT_NEAR(mixed, phi(P.p, 1.29, 1 + P.p), 1e-12);
}

TEST(PairAngleBound, AgreesWithDirectRule) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        auto draw = [&](Weight w) {
            const Annulus h = habitat(w, P);
            double a = h.lo + (h.hi - h.lo) * u(rng), b = h.lo + (h.hi - h.lo) * u(rng);
            if (a > b) std::swap(a, b);
            return PointClass{w, Annulus::make(a, b), 1, ""};
        };
        const Weight wa = u(rng) < 0.5 ? Weight::One : Weight::Half;
        const Weight wb = u(rng) < 0.5 ? Weight::One : Weight::Half;
        const PointClass a = draw(wa), b = draw(wb);
        if (wa == Weight::Half && wb == Weight::Half && std::min(a.annulus.lo, b.annulus.lo) > 1 + P.q) {
            EXPECT_THROW(pair_angle_bound(wa, a.annulus, wb, b.annulus, P), UnsupportedClaimError);
            continue;
        }
        EXPECT_NEAR(pair_angle_bound(wa, a.annulus, wb, b.annulus, P), oracle::pair_bound(a, b, P.p), 1e-9);
        EXPECT_DOUBLE_EQ(pair_angle_bound(wa, a.annulus, wb, b.annulus, P),
                         pair_angle_bound(wb, b.annulus, wa, a.annulus, P));
    }
}

TEST(PairAngleBound, HabitatViolations) {
    EXPECT_THROW(pair_angle_bound(Weight::One, Annulus::make(1.0, 2.0), Weight::One, Annulus::make(1.5, 2.0), P),
                 DomainError);
    EXPECT_THROW(pair_angle_bound(Weight::Half, Annulus::make(0.9, 1.2), Weight::Half, Annulus::make(1.0, 1.2), P),
                 DomainError);
    EXPECT_THROW(pair_angle_bound(Weight::Half, Annulus::make(1.8, 2.0), Weight::Half, Annulus::make(1.9, 2.4), P),
                 UnsupportedClaimError);
}

TEST(CapacityBound, PrintedCapacities) {
    EXPECT_EQ(capacity_bound(Weight::Half, Annulus::make(1.0, 1.25), P), 10);
    EXPECT_EQ(capacity_bound(Weight::One, habitat(Weight::One, P), P), 11);
    EXPECT_EQ(capacity_bound(Weight::Half, Annulus::make(1.25, 1 + P.q), P), 16);
    EXPECT_EQ(capacity_bound(Weight::Half, Annulus::make(1.25, 1 + P.p), P), 16);
}

TEST(CapacityBound, BracketsTheFullCircle) {
    for (double lo = 1.0; lo < 1.7; lo += 0.03) {
        for (double hi = lo; hi <= 1 + P.q; hi += 0.04) {
            const Annulus a = Annulus::make(lo, hi);
            const double b = pair_angle_bound(Weight::Half, a, Weight::Half, a, P);
            const int k = capacity_bound(Weight::Half, a, P);
            EXPECT_LE(k * b, 360.0);
            EXPECT_GT((k + 1) * b, 360.0);
        }
    }
}

TEST(Habitat, Ranges) {
    EXPECT_EQ(habitat(Weight::One, P), Annulus::make(P.p, 1 + P.p));
    EXPECT_EQ(habitat(Weight::Half, P), Annulus::make(1.0, 1 + P.p));
}
