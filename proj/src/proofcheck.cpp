#include "sigcheck/proofcheck.h"

#include "sigcheck/errors.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

namespace sigcheck {

namespace {

constexpr double kEndpointSlack = 1e-12;

std::string num(double v, int digits = 4) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

std::string composition_text(const Composition& c) {
    return "[" + std::to_string(c.n11) + "," + std::to_string(c.nhh) + "," + std::to_string(c.n1h) + "]";
}

std::string labels_text(const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? " " : "") + labels[i];
    return s;
}

std::string annulus_text(const Annulus& a) { return "[" + num(a.lo) + ", " + num(a.hi) + "]"; }

bool near(double a, double b) { return std::fabs(a - b) <= kEndpointSlack * std::max(1.0, std::fabs(b)); }

bool same_annulus(const Annulus& a, const Annulus& b) { return near(a.lo, b.lo) && near(a.hi, b.hi); }

bool within(const Annulus& inner, const Annulus& outer) {
    return outer.lo <= inner.lo + kEndpointSlack && inner.hi <= outer.hi + kEndpointSlack;
}

const PointClass& by_label(const std::vector<PointClass>& classes, const std::string& label) {
    for (const auto& c : classes) {
        if (c.label == label) return c;
    }
    throw StructuralError(label, "unknown class label");
}

// "at least `count` weight-`weight` points lie in `annulus`"
struct Constraint {
    Weight weight;
    Annulus annulus;
    int count;
};

std::string constraint_text(const Constraint& c) {
    return ">= " + std::to_string(c.count) + " of weight " + to_string(c.weight) + " in " + annulus_text(c.annulus);
}

// A cumulative requirement of a justification claim: `count` weight-w points
// inside `annulus` (its own class plus every same-weight class nested inside).
struct Demand {
    std::string label;
    Weight weight;
    Annulus annulus;
    int count;
};

std::vector<Demand> demands_of(const std::vector<PointClass>& classes, const std::string& where) {
    std::vector<Demand> out;
    for (const auto& c : classes) {
        if (c.count == 0) continue;
        int total = 0;
        for (const auto& d : classes) {
            if (d.weight != c.weight || d.count == 0) continue;
            if (!within(d.annulus, c.annulus) && !within(c.annulus, d.annulus)) {
                throw StructuralError(where, "classes '" + c.label + "' and '" + d.label +
                                                 "' of equal weight have annuli that are not nested");
            }
            if (within(d.annulus, c.annulus)) total += d.count;
        }
        out.push_back(Demand{c.label, c.weight, c.annulus, total});
    }
    return out;
}

bool guaranteed(const std::vector<Constraint>& state, const Demand& d) {
    return std::any_of(state.begin(), state.end(), [&](const Constraint& c) {
        return c.weight == d.weight && within(c.annulus, d.annulus) && c.count >= d.count;
    });
}

void verify_chain(const ClaimSpec& claim, const ProofScript& script, const std::map<std::string, ClaimResult>& done,
                  const Params& params, ClaimResult& r) {
    const Hypothesis hyp = *claim.hypothesis;
    std::vector<Constraint> state = {{Weight::One, habitat(Weight::One, params), hyp.ones},
                                     {Weight::Half, habitat(Weight::Half, params), hyp.halves}};

    for (const auto& s : claim.steps) {
        auto it = done.find(s.justification);
        if (it == done.end() || it->second.verdict != Verdict::Verified) {
            r.failed_dependencies.push_back(s.justification);
        }
    }
    if (!r.failed_dependencies.empty()) {
        r.verdict = Verdict::DependencyFailed;
        r.message = "unverified justification: " + labels_text(r.failed_dependencies);
        return;
    }

    for (std::size_t i = 0; i < claim.steps.size(); ++i) {
        const ChainStep& s = claim.steps[i];
        const std::string where = claim.id + ".steps[" + std::to_string(i) + "]";
        const ClaimSpec& just = *script.find(s.justification);
        const std::vector<PointClass> classes = resolve_classes(just.classes, params);
        const std::vector<Demand> demands = demands_of(classes, where);

        for (const auto& d : demands) {
            if (s.target && d.label == *s.target) continue;
            if (!guaranteed(state, d)) {
                throw StructuralError(where, "'" + s.justification + "' needs >= " + std::to_string(d.count) +
                                                 " of weight " + to_string(d.weight) + " in " +
                                                 annulus_text(d.annulus) + ", which is not established");
            }
        }
        if (!s.target) {
            r.derivation.push_back(s.justification + ": every class is forced, contradiction");
            continue;
        }

        const auto target = std::find_if(demands.begin(), demands.end(),
                                         [&](const Demand& d) { return d.label == *s.target; });
        if (target == demands.end()) throw StructuralError(where + ".target", "target class is empty");
        const Annulus hab = habitat(target->weight, params);
        const Annulus& J = target->annulus;
        Annulus rest;
        if (near(J.hi, hab.hi) && J.lo > hab.lo + kEndpointSlack) {
            rest = Annulus{hab.lo, J.lo};
        } else if (near(J.lo, hab.lo) && J.hi < hab.hi - kEndpointSlack) {
            rest = Annulus{J.hi, hab.hi};
        } else {
            throw StructuralError(where + ".target", "target annulus " + annulus_text(J) +
                                                         " must share exactly one endpoint with the habitat " +
                                                         annulus_text(hab));
        }
        const int total = target->weight == Weight::One ? hyp.ones : hyp.halves;
        const int derived = total - (target->count - 1);
        if (derived <= 0) throw StructuralError(where, "step concludes nothing (derived count " + std::to_string(derived) + ")");

        const ClassSpec& stated = *s.derives;
        const Annulus stated_annulus = stated.annulus.resolve(params);
        if (stated.weight != target->weight || !same_annulus(stated_annulus, rest) || stated.count != derived) {
            throw StructuralError(where + ".derives",
                                  "states >= " + std::to_string(stated.count) + " of weight " + to_string(stated.weight) +
                                      " in " + annulus_text(stated_annulus) + " but the pigeonhole count gives >= " +
                                      std::to_string(derived) + " of weight " + to_string(target->weight) + " in " +
                                      annulus_text(rest) + " (" + std::to_string(total) + " - (" +
                                      std::to_string(target->count) + " - 1))");
        }
        const Constraint c{target->weight, rest, derived};
        state.push_back(c);
        r.derivation.push_back(s.justification + ": " + constraint_text(c));
    }
    r.verdict = Verdict::Verified;
    r.covers = CountPair{hyp.ones, hyp.halves};
}

// Full-habitat claims (at most one class per weight) prove a count pair.
std::optional<CountPair> covered_pair(const std::vector<PointClass>& classes, const Params& params) {
    int m = 0, h = 0;
    int ones = 0, halves = 0;
    for (const auto& c : classes) {
        if (!same_annulus(c.annulus, habitat(c.weight, params))) return std::nullopt;
        if (c.weight == Weight::One) {
            m += c.count;
            ++ones;
        } else {
            h += c.count;
            ++halves;
        }
    }
    if (ones > 1 || halves > 1) return std::nullopt;
    return CountPair{m, h};
}

void check_printed(const ClaimSpec& claim, const std::vector<PointClass>& classes, const Params& params,
                   const Tolerance& tol, ClaimResult& r) {
    auto flag = [&](const std::string& item, double printed, double recomputed, const std::string& detail,
                    const std::string& erratum, bool loose_bound = false) {
        DiscrepancyKind kind = DiscrepancyKind::Mismatch;
        if (!erratum.empty()) kind = DiscrepancyKind::KnownErratum;
        else if (loose_bound) kind = DiscrepancyKind::LooseBound;
        r.discrepancies.push_back(Discrepancy{claim.id, item, printed, recomputed,
                                              erratum.empty() ? detail : detail + "; " + erratum, kind});
    };

    for (const auto& p : claim.printed_phis) {
        const PointClass& a = by_label(classes, p.a);
        const PointClass& b = by_label(classes, p.b);
        PhiCheck c{p.a, p.b, p.printed_as, p.value, pair_angle_bound(a.weight, a.annulus, b.weight, b.annulus, params),
                   false, p.note, p.erratum};
        c.matches = std::fabs(c.recomputed - c.printed) <= kPrintedTolerance;
        if (!c.matches || !p.erratum.empty()) {
            flag("Phi(" + p.a + "," + p.b + ")" + (p.printed_as.empty() ? "" : " printed as " + p.printed_as),
                 c.printed, c.recomputed, c.matches ? "within tolerance" : "differs by more than 0.02", p.erratum);
        }
        r.phis.push_back(std::move(c));
    }

    for (const auto& s : claim.printed_sums) {
        SumCheck c;
        c.kind = s.kind;
        c.printed = s.value;
        c.note = s.note;
        c.erratum = s.erratum;
        if (s.composition) {
            const PointClass* one = nullptr;
            const PointClass* half = nullptr;
            for (const auto& cls : classes) (cls.weight == Weight::One ? one : half) = &cls;
            c.what = "composition " + composition_text(*s.composition);
            c.recomputed = evaluate_composition(*one, *half, *s.composition, params, tol);
        } else if (!s.arrangement.empty()) {
            c.what = "arrangement " + labels_text(s.arrangement);
            c.recomputed = evaluate_arrangement(classes, s.arrangement, params, tol);
        } else {
            const PointClass& only = classes.front();
            c.what = std::to_string(only.count) + " x " + only.label;
            c.recomputed = only.count * pair_angle_bound(only.weight, only.annulus, only.weight, only.annulus, params);
        }
        if (!s.terms.empty()) {
            double t = 0.0;
            for (const auto& [count, value] : s.terms) t += count * value;
            c.terms_total = t;
        }
        std::string detail;
        if (s.kind == PrintedSum::Kind::Equals) {
            c.matches = std::fabs(c.recomputed - c.printed) <= kPrintedTolerance;
            if (!c.matches) detail = "differs by more than 0.02";
        } else {
            const bool bound_holds = c.recomputed >= c.printed;
            const bool terms_ok = !c.terms_total || std::fabs(*c.terms_total - c.printed) <= kTermsTolerance;
            c.matches = bound_holds && terms_ok;
            if (!bound_holds) detail = "recomputed sum is below the printed lower bound";
            if (!terms_ok) {
                detail += (detail.empty() ? "" : "; ") + std::string("listed terms add up to ") + num(*c.terms_total);
            }
        }
        if (!c.matches || !s.erratum.empty()) {
            flag("sum over " + c.what, c.printed, c.recomputed, c.matches ? "within tolerance" : detail, s.erratum);
        }
        r.sums.push_back(std::move(c));
    }

    if (!claim.printed_compositions.empty()) {
        int m = 0, h = 0;
        for (const auto& cls : classes) (cls.weight == Weight::One ? m : h) += cls.count;
        const auto listed = enumerate_compositions(m, h);
        if (listed != claim.printed_compositions) {
            std::string printed;
            for (const auto& c : claim.printed_compositions) printed += composition_text(c);
            std::string ours;
            for (const auto& c : listed) ours += composition_text(c);
            flag("composition list", 0.0, 0.0, "printed " + printed + ", enumerated " + ours, "");
        }
    }

    if (r.expected_margin && r.margin && std::fabs(*r.margin - *r.expected_margin) > kPrintedTolerance) {
        const PrintedSum* min = nullptr;
        for (const auto& s : claim.printed_sums) {
            if (s.minimum) min = &s;
        }
        const bool loose = min->kind == PrintedSum::Kind::LowerBound && *r.margin > *r.expected_margin;
        flag("margin", *r.expected_margin, *r.margin,
             loose ? "printed margin is a lower bound; recomputed margin is larger by more than 0.02"
                   : "recomputed margin differs by more than 0.02",
             min->erratum, loose);
    }
}

}  // namespace

std::string to_string(DiscrepancyKind k) {
    switch (k) {
        case DiscrepancyKind::Mismatch: return "mismatch";
        case DiscrepancyKind::KnownErratum: return "known-erratum";
        case DiscrepancyKind::LooseBound: return "loose-bound";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "verified";
        case Verdict::Refused: return "refused";
        case Verdict::DependencyFailed: return "dependency-failed";
        case Verdict::Error: return "error";
    }
    return "?";
}

ClaimResult verify_claim(const ClaimSpec& claim, const ProofScript& script,
                         const std::map<std::string, ClaimResult>& done, const Params& params, const Tolerance& tol) {
    ClaimResult r;
    r.id = claim.id;
    r.kind = claim.kind;
    r.expected_margin = claim.expected_margin();
    try {
        if (claim.kind == ClaimKind::Chain) {
            verify_chain(claim, script, done, params, r);
            return r;
        }
        const std::vector<PointClass> classes = resolve_classes(claim.classes, params);
        if (claim.kind == ClaimKind::Capacity) {
            const PointClass& c = classes.front();
            double b = pair_angle_bound(c.weight, c.annulus, c.weight, c.annulus, params);
            if (tol.paranoid) b -= kParanoidWidening;
            r.capacity = capacity_bound(c.weight, c.annulus, params);
            r.min_sum = c.count * b;
            r.margin = *r.min_sum - 360.0;
            r.witness.assign(static_cast<std::size_t>(c.count), c.label);
            r.verdict = *r.margin > tol.eps ? Verdict::Verified : Verdict::Refused;
        } else {
            const CertifyResult cert = certify_impossible(classes, params, tol);
            r.min_sum = cert.certificate.min_sum;
            r.margin = cert.certificate.margin;
            r.witness = cert.certificate.witness;
            r.composition = cert.certificate.composition;
            r.method = cert.certificate.method;
            r.verdict = cert.verified ? Verdict::Verified : Verdict::Refused;
        }
        if (r.verdict == Verdict::Refused) {
            r.message = "minimum angle sum " + num(*r.min_sum) + " does not exceed 360 + eps";
        }
        if (r.verdict == Verdict::Verified) r.covers = covered_pair(classes, params);
        check_printed(claim, classes, params, tol, r);
    } catch (const StructuralError& e) {
        r.verdict = Verdict::Error;
        r.message = e.what();
    } catch (const DomainError& e) {
        r.verdict = Verdict::Error;
        r.message = e.what();
    } catch (const UnsupportedClaimError& e) {
        r.verdict = Verdict::Error;
        r.message = e.what();
    } catch (const ResourceError& e) {
        r.verdict = Verdict::Error;
        r.message = e.what();
    }
    return r;
}

CoverageResult coverage_check(const std::vector<CountPair>& verified_pairs) {
    CoverageResult out;
    std::set<CountPair> unique(verified_pairs.begin(), verified_pairs.end());
    out.verified.assign(unique.begin(), unique.end());
    for (int m = 0; m <= kCoverageMaxOnes; ++m) {
        for (int h = 0; h <= kCoverageMaxHalves; ++h) {
            if (2 * m + h < kCoverageTwiceWeight) continue;
            ++out.grid_points;
            const bool dominated = std::any_of(out.verified.begin(), out.verified.end(),
                                               [&](const CountPair& v) { return v.first <= m && v.second <= h; });
            if (!dominated) out.uncovered.emplace_back(m, h);
        }
    }
    out.passed = out.uncovered.empty();
    return out;
}

VerificationReport verify_script(const ProofScript& script, const Params& params, const Tolerance& tol) {
    validate_script(script);
    VerificationReport report;
    report.script_name = script.name;
    report.params = params;
    report.tolerance = tol;

    std::map<std::string, ClaimResult> done;
    for (const auto& id : dependency_order(script)) {
        ClaimResult r = verify_claim(*script.find(id), script, done, params, tol);
        done[id] = r;
        report.claims.push_back(std::move(r));
    }

    std::vector<CountPair> pairs;
    for (const auto& r : report.claims) {
        if (r.verdict == Verdict::Verified && r.covers) pairs.push_back(*r.covers);
    }
    report.coverage = coverage_check(pairs);
    report.verified = report.coverage.passed &&
                      std::all_of(report.claims.begin(), report.claims.end(),
                                  [](const ClaimResult& r) { return r.verdict == Verdict::Verified; });
    return report;
}

VerificationReport verify_paper_proof(const Params& params, const Tolerance& tol) {
    return verify_script(builtin_paper_script(), params, tol);
}

std::vector<std::string> VerificationReport::failing_claims() const {
    std::vector<std::string> out;
    for (const auto& r : claims) {
        if (r.verdict != Verdict::Verified) out.push_back(r.id);
    }
    return out;
}

bool VerificationReport::has_errors() const {
    return std::any_of(claims.begin(), claims.end(), [](const ClaimResult& r) { return r.verdict == Verdict::Error; });
}

std::optional<std::pair<std::string, double>> VerificationReport::worst_margin() const {
    std::optional<std::pair<std::string, double>> worst;
    for (const auto& r : claims) {
        if (r.margin && (!worst || *r.margin < worst->second)) worst = std::make_pair(r.id, *r.margin);
    }
    return worst;
}

std::vector<Discrepancy> VerificationReport::discrepancies() const {
    std::vector<Discrepancy> out;
    for (const auto& r : claims) out.insert(out.end(), r.discrepancies.begin(), r.discrepancies.end());
    return out;
}

std::vector<double> sweep_grid(double lo, double hi, double step) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) {
        throw DomainError("sweep: bounds and step must be finite");
    }
    if (!(lo > 1.0)) throw DomainError("sweep: lower bound must be > 1");
    if (!(lo <= hi)) throw DomainError("sweep: lower bound exceeds upper bound");
    if (!(step > 0.0)) throw DomainError("sweep: step must be > 0");
    const double span = (hi - lo) / step;
    if (span > 1e6) throw DomainError("sweep: more than a million grid points");
    const auto count = static_cast<long>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) out.push_back(std::round((lo + static_cast<double>(i) * step) * 1e9) / 1e9);
    return out;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("SIGCHECK_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(std::min(n, 256L));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> sweep_p(const ProofScript& script, double lo, double hi, double step, const Tolerance& tol,
                              unsigned threads) {
    const std::vector<double> grid = sweep_grid(lo, hi, step);
    validate_script(script);
    std::vector<SweepRow> rows(grid.size());
    auto run = [&](std::size_t i) {
        SweepRow row;
        row.p = grid[i];
        const VerificationReport rep = verify_script(script, Params::from_p(grid[i]), tol);
        row.verified = rep.verified;
        row.failing = rep.failing_claims();
        if (const auto w = rep.worst_margin()) {
            row.worst_claim = w->first;
            row.worst_margin = w->second;
        }
        rows[i] = std::move(row);
    };

    const unsigned workers = std::min<std::size_t>(threads == 0 ? default_thread_count() : threads, grid.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) run(i);
        return rows;
    }
    // Static striping keeps each row's computation independent of scheduling.
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < grid.size(); i += workers) run(i);
        });
    }
    for (auto& t : pool) t.join();
    return rows;
}

}  // namespace sigcheck
