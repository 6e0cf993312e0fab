#pragma once

// Proof scripts: the case analysis as data. Each claim is a capacity bound, an
// arrangement impossibility, or a chain of pigeonhole steps that ends in a
// contradiction. Annulus radii may refer to p, 1+p, q and 1+q symbolically so
// the same script can be re-checked at any threshold.

#include "sigcheck/arrangements.h"
#include "sigcheck/bounds.h"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sigcheck {

/// A radius that is either a literal or one of p, 1+p, q, 1+q.
struct Radius {
    enum class Symbol { Literal, P, OnePlusP, Q, OnePlusQ };

    Symbol symbol = Symbol::Literal;
    double value = 0.0;  ///< used when symbol == Literal

    static Radius literal(double v) { return Radius{Symbol::Literal, v}; }
    static Radius p() { return Radius{Symbol::P, 0.0}; }
    static Radius one_plus_p() { return Radius{Symbol::OnePlusP, 0.0}; }
    static Radius q() { return Radius{Symbol::Q, 0.0}; }
    static Radius one_plus_q() { return Radius{Symbol::OnePlusQ, 0.0}; }

    double resolve(const Params& params) const;
    std::string to_string() const;
    friend bool operator==(const Radius&, const Radius&) = default;
};

struct AnnulusSpec {
    Radius lo;
    Radius hi;

    /// Throws DomainError for a degenerate (lo > hi) or negative result.
    Annulus resolve(const Params& params) const;
    std::string to_string() const;
    friend bool operator==(const AnnulusSpec&, const AnnulusSpec&) = default;
};

struct ClassSpec {
    std::string label;
    Weight weight = Weight::One;
    AnnulusSpec annulus;
    int count = 0;
};

/// A Phi value printed in the source argument, tied to the pair of classes it
/// bounds so that it is always re-evaluated from the claim's own annuli.
struct PrintedPhi {
    std::string a;
    std::string b;
    double value = 0.0;
    std::string printed_as;  ///< notation as printed, e.g. "Phi_p(p,1.88)"
    std::string note;
    std::string erratum;     ///< non-empty: a known mismatch, expected to be flagged
};

/// A printed angle sum for one arrangement of the claim's classes.
///
/// kind "equals": the printed number approximates the true value (0.02 deg).
/// kind "lower_bound": the printed number is a strict lower bound, often
/// obtained from rounded-down constants, so the recomputed sum must be at
/// least as large. When `terms` (count, constant) are listed they must
/// reproduce the printed number.
struct PrintedSum {
    enum class Kind { Equals, LowerBound };

    Kind kind = Kind::Equals;
    double value = 0.0;
    std::optional<Composition> composition;  ///< two-class claims
    std::vector<std::string> arrangement;    ///< multi-class claims
    std::vector<std::pair<int, double>> terms;
    bool minimum = false;                     ///< this sum is the claimed minimum
    std::string note;
    std::string erratum;
};

/// One pigeonhole step of a chain.
///
/// The justification claim must already be verified. Every cumulative demand
/// of that claim except `target` must be guaranteed by the current state.
/// With a target (weight w, annulus J, cumulative count K) the step concludes
/// that at most K-1 weight-w points lie in J, so at least N_w - (K-1) lie in
/// the rest of the habitat; `derives` must state exactly that. Without a
/// target the step closes the chain: all demands hold, a contradiction.
struct ChainStep {
    std::string justification;
    std::optional<std::string> target;  ///< class label inside the justification
    std::optional<ClassSpec> derives;   ///< label unused
    std::string note;
};

struct Hypothesis {
    int ones = 0;
    int halves = 0;
};

enum class ClaimKind { Capacity, Arrangement, Chain };

std::string to_string(ClaimKind k);

struct ClaimSpec {
    std::string id;
    ClaimKind kind = ClaimKind::Arrangement;
    std::string statement;
    std::vector<ClassSpec> classes;      ///< capacity (exactly one) / arrangement
    std::optional<Hypothesis> hypothesis;  ///< chain
    std::vector<ChainStep> steps;        ///< chain
    std::vector<Composition> printed_compositions;
    std::vector<PrintedPhi> printed_phis;
    std::vector<PrintedSum> printed_sums;

    /// Printed minimum minus 360, from the printed sum flagged `minimum`.
    std::optional<double> expected_margin() const;
};

struct ProofScript {
    std::string name;
    std::vector<ClaimSpec> claims;

    const ClaimSpec* find(const std::string& id) const;
};

/// The full case analysis for the 14.5 bound.
ProofScript builtin_paper_script();

/// Throws StructuralError on duplicate ids, kind/field mismatches, unknown
/// justifications or labels, and dependency cycles.
void validate_script(const ProofScript& script);

/// Claim ids ordered so that every justification precedes its users. Ties
/// keep script order.
std::vector<std::string> dependency_order(const ProofScript& script);

/// Resolves the symbolic annuli of a claim's classes at `params`.
std::vector<PointClass> resolve_classes(const std::vector<ClassSpec>& classes, const Params& params);

nlohmann::ordered_json to_json(const ProofScript& script);
/// Throws StructuralError (with claim id and field) on malformed documents.
ProofScript script_from_json(const nlohmann::json& doc);

ProofScript load_script(const std::string& path);

}  // namespace sigcheck
