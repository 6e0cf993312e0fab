#pragma once

// Circular arrangements of weighted point classes and certified lower bounds
// on the total angle they subtend around the origin.

#include "sigcheck/bounds.h"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sigcheck {

/// A homogeneous group of `count` points of one weight inside one annulus.
struct PointClass {
    Weight weight = Weight::One;
    Annulus annulus;
    int count = 0;
    std::string label;
};

/// Numbers of consecutive (1,1), (1/2,1/2) and mixed pairs in a circular order.
struct Composition {
    int n11 = 0;
    int nhh = 0;
    int n1h = 0;

    int total() const { return n11 + nhh + n1h; }
    friend bool operator==(const Composition&, const Composition&) = default;
};

enum class Method { TwoClassClosedForm, Exhaustive };

std::string to_string(Method m);

struct ArrangementCertificate {
    double min_sum = 0.0;  ///< degrees
    double margin = 0.0;   ///< min_sum - 360
    /// Cyclic sequence of class labels attaining min_sum.
    std::vector<std::string> witness;
    Method method = Method::Exhaustive;
    /// Minimizing composition; set by the closed form.
    std::optional<Composition> composition;
};

/// Either a certificate with margin > eps (configuration impossible), or a
/// refusal carrying the witness whose bound does not clear 360 + eps.
struct CertifyResult {
    bool verified = false;
    ArrangementCertificate certificate;
};

struct Tolerance {
    double eps = kCertifyEpsilon;
    /// Lower every pair bound by kParanoidWidening before summing.
    bool paranoid = false;
};

/// Maximum number of points accepted by the exhaustive search.
inline constexpr int kMaxArrangementPoints = 32;

/// All realizable [n11, nhh, n1h] for m weight-1 and h half-weight points on a
/// circle; k maximal blocks of weight-1 points give [m-k, h-k, 2k].
/// Throws DomainError if m + h < 2 or a count is negative.
std::vector<Composition> enumerate_compositions(int m, int h);

/// Closed-form minimum for one weight-1 class and one half class. Either count
/// may be zero; classes with zero count are never evaluated.
ArrangementCertificate min_sum_two_class(const PointClass& ones, const PointClass& halves,
                                         const Params& params, const Tolerance& tol = {});

/// Exact minimum over every distinct circular arrangement of the class-label
/// multiset. Rotations are fixed by starting at the lexicographically least
/// label; ties resolve to the lexicographically least witness.
ArrangementCertificate min_sum_general(std::span<const PointClass> classes, const Params& params,
                                       const Tolerance& tol = {});

/// Chooses the closed form when the classes reduce to at most one class per
/// weight, the exhaustive search otherwise, and compares against 360 + eps.
CertifyResult certify_impossible(std::span<const PointClass> classes, const Params& params,
                                 const Tolerance& tol = {});

/// Sum of consecutive pair bounds of a cyclic label sequence (closing pair
/// included). Unknown labels throw DomainError.
double evaluate_arrangement(std::span<const PointClass> classes,
                            std::span<const std::string> witness, const Params& params,
                            const Tolerance& tol = {});

/// Sum n11*b11 + nhh*bhh + n1h*b1h for one weight-1 and one half class.
double evaluate_composition(const PointClass& ones, const PointClass& halves,
                            const Composition& c, const Params& params, const Tolerance& tol = {});

/// A circular word over {'1','h'} with exactly the block structure of `c`.
/// Throws DomainError when `c` is not realizable for the given counts.
std::string word_for_composition(int m, int h, const Composition& c);

/// Counts the consecutive pair types of a cyclic {'1','h'} word.
Composition count_adjacencies(const std::string& word);

}  // namespace sigcheck
