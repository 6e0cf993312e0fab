#pragma once

// Verification of proof scripts: per-claim certificates, chain bookkeeping,
// the final coverage scan and sweeps over the threshold p.

#include "sigcheck/arrangements.h"
#include "sigcheck/bounds.h"
#include "sigcheck/script.h"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sigcheck {

/// Printed and recomputed values further apart than this are flagged.
inline constexpr double kPrintedTolerance = 0.02;
/// Listed terms of a lower-bound sum must reproduce the printed number this closely.
inline constexpr double kTermsTolerance = 0.005;

/// Coverage grid: every (m, h) with 2m + h >= 30, m <= 18, h <= 36.
inline constexpr int kCoverageMaxOnes = 18;
inline constexpr int kCoverageMaxHalves = 36;
inline constexpr int kCoverageTwiceWeight = 30;

enum class Verdict { Verified, Refused, DependencyFailed, Error };

std::string to_string(Verdict v);

using CountPair = std::pair<int, int>;  ///< (weight-1 points, half points)

struct PhiCheck {
    std::string a;
    std::string b;
    std::string printed_as;
    double printed = 0.0;
    double recomputed = 0.0;
    bool matches = false;
    std::string note;
    std::string erratum;
};

struct SumCheck {
    std::string what;  ///< composition or arrangement, as text
    PrintedSum::Kind kind = PrintedSum::Kind::Equals;
    double printed = 0.0;
    double recomputed = 0.0;
    std::optional<double> terms_total;
    bool matches = false;
    std::string note;
    std::string erratum;
};

/// How a printed value relates to its recomputation.
///   Mismatch:     unexplained disagreement
///   KnownErratum: disagreement recorded as an erratum in the script
///   LooseBound:   a printed lower bound that holds but sits more than 0.02
///                 below the recomputed value (rounded-down constants)
enum class DiscrepancyKind { Mismatch, KnownErratum, LooseBound };

std::string to_string(DiscrepancyKind k);

struct Discrepancy {
    std::string claim;
    std::string item;
    double printed = 0.0;
    double recomputed = 0.0;
    std::string detail;
    DiscrepancyKind kind = DiscrepancyKind::Mismatch;
};

struct ClaimResult {
    std::string id;
    ClaimKind kind = ClaimKind::Arrangement;
    Verdict verdict = Verdict::Error;
    std::string message;

    std::optional<double> min_sum;
    std::optional<double> margin;
    std::optional<double> expected_margin;
    std::vector<std::string> witness;
    std::optional<Composition> composition;
    std::optional<Method> method;
    std::optional<int> capacity;  ///< capacity claims: largest count that fits

    std::vector<std::string> derivation;  ///< chain claims: one line per step
    std::vector<std::string> failed_dependencies;
    std::optional<CountPair> covers;  ///< (m, h) proven impossible, if the claim is a full-habitat one

    std::vector<PhiCheck> phis;
    std::vector<SumCheck> sums;
    std::vector<Discrepancy> discrepancies;
};

struct CoverageResult {
    bool passed = false;
    std::vector<CountPair> verified;   ///< sorted, deduplicated input
    std::vector<CountPair> uncovered;  ///< lexicographic order
    int grid_points = 0;
};

struct VerificationReport {
    std::string script_name;
    Params params;
    Tolerance tolerance;
    std::vector<ClaimResult> claims;  ///< dependency order
    CoverageResult coverage;
    bool verified = false;

    std::vector<std::string> failing_claims() const;
    bool has_errors() const;
    /// Smallest margin among claims that produced one.
    std::optional<std::pair<std::string, double>> worst_margin() const;
    std::vector<Discrepancy> discrepancies() const;
};

/// Verifies one claim. `done` holds results of claims verified earlier; chain
/// justifications are looked up there.
ClaimResult verify_claim(const ClaimSpec& claim, const ProofScript& script,
                         const std::map<std::string, ClaimResult>& done, const Params& params,
                         const Tolerance& tol = {});

/// Checks that every grid pair dominates some verified impossible pair.
CoverageResult coverage_check(const std::vector<CountPair>& verified_pairs);

/// Validates the script, verifies every claim in dependency order and runs
/// the coverage scan. Failures are verdicts, not exceptions; only a script
/// that fails validation throws (StructuralError).
VerificationReport verify_script(const ProofScript& script, const Params& params, const Tolerance& tol = {});

VerificationReport verify_paper_proof(const Params& params, const Tolerance& tol = {});

struct SweepRow {
    double p = 0.0;
    bool verified = false;
    std::vector<std::string> failing;
    std::string worst_claim;
    std::optional<double> worst_margin;
};

/// Grid lo, lo+step, ... up to hi, each value rounded to 9 decimals.
/// Throws DomainError unless 1 < lo <= hi and step > 0.
std::vector<double> sweep_grid(double lo, double hi, double step);

/// One row per grid value. Rows are computed on up to `threads` workers
/// (0: SIGCHECK_THREADS or hardware concurrency) and returned in grid order.
std::vector<SweepRow> sweep_p(const ProofScript& script, double lo, double hi, double step,
                              const Tolerance& tol = {}, unsigned threads = 0);

/// Worker count from SIGCHECK_THREADS, falling back to hardware concurrency.
unsigned default_thread_count();

}  // namespace sigcheck
