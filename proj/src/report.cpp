#include "sigcheck/report.h"

#include "sigcheck/point_io.h"

#include <cstdio>
#include <ostream>

namespace sigcheck {

namespace {

using ojson = nlohmann::ordered_json;

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string signed_angle(double v) { return (v >= 0.0 ? "+" : "") + format_angle(v); }

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
    return s;
}

std::string pair_text(const CountPair& p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

std::string composition_text(const Composition& c) {
    return "[" + std::to_string(c.n11) + "," + std::to_string(c.nhh) + "," + std::to_string(c.n1h) + "]";
}

ojson composition_json(const Composition& c) { return ojson::array({c.n11, c.nhh, c.n1h}); }

template <class T>
ojson opt(const std::optional<T>& v) {
    return v ? ojson(*v) : ojson(nullptr);
}

ojson histogram_json(const std::map<int, int>& h) {
    ojson out = ojson::array();
    for (const auto& [deg, count] : h) out.push_back(ojson::array({deg, count}));
    return out;
}

std::string histogram_text(const std::map<int, int>& h) {
    std::string s;
    for (const auto& [deg, count] : h) s += (s.empty() ? "" : " ") + std::to_string(deg) + ":" + std::to_string(count);
    return s;
}

ojson discrepancy_json(const Discrepancy& d) {
    ojson j;
    j["claim"] = d.claim;
    j["item"] = d.item;
    j["kind"] = to_string(d.kind);
    j["printed"] = d.printed;
    j["recomputed"] = d.recomputed;
    j["detail"] = d.detail;
    return j;
}

}  // namespace

std::string format_angle(double deg) { return fixed(deg, 4); }

void write_text_report(std::ostream& out, const VerificationReport& report) {
    out << "script " << report.script_name << "\n";
    out << "p = " << format_double(report.params.p) << "  q = " << fixed(report.params.q, 9)
        << "  eps = " << format_double(report.tolerance.eps) << (report.tolerance.paranoid ? "  paranoid" : "") << "\n";

    out << "\nclaims\n";
    for (const auto& r : report.claims) {
        out << "  " << pad(r.id, 18) << pad(to_string(r.kind), 12) << pad(to_string(r.verdict), 18);
        if (r.min_sum) out << "min " << format_angle(*r.min_sum) << "  margin " << signed_angle(*r.margin);
        if (r.expected_margin) out << "  printed " << format_angle(360.0 + *r.expected_margin);
        if (r.capacity) out << "  capacity " << *r.capacity;
        if (r.covers) out << "  covers " << pair_text(*r.covers);
        out << "\n";
        if (r.method) {
            out << "      " << to_string(*r.method);
            if (r.composition) out << " " << composition_text(*r.composition);
            if (!r.witness.empty() && r.kind == ClaimKind::Arrangement) out << "  witness " << join(r.witness, " ");
            out << "\n";
        }
        for (const auto& line : r.derivation) out << "      " << line << "\n";
        if (!r.message.empty()) out << "      " << r.message << "\n";
    }

    const CoverageResult& cov = report.coverage;
    out << "\ncoverage\n";
    out << "  grid points " << cov.grid_points << " (2m + h >= " << kCoverageTwiceWeight << ", m <= " << kCoverageMaxOnes
        << ", h <= " << kCoverageMaxHalves << ")\n";
    std::vector<std::string> pairs;
    for (const auto& p : cov.verified) pairs.push_back(pair_text(p));
    out << "  impossible pairs " << (pairs.empty() ? "none" : join(pairs, " ")) << "\n";
    pairs.clear();
    for (const auto& p : cov.uncovered) pairs.push_back(pair_text(p));
    out << "  uncovered " << (pairs.empty() ? "none" : join(pairs, " ")) << "\n";

    const auto ds = report.discrepancies();
    out << "\ndiscrepancies (printed vs recomputed)\n";
    if (ds.empty()) out << "  none\n";
    for (const auto& d : ds) {
        out << "  " << pad(d.claim, 18) << pad(to_string(d.kind), 15) << d.item;
        if (d.item != "composition list") {
            out << "  printed " << format_angle(d.printed) << "  recomputed " << format_angle(d.recomputed);
        }
        out << "  (" << d.detail << ")\n";
    }

    out << "\n";
    if (const auto w = report.worst_margin()) out << "smallest margin " << signed_angle(w->second) << " (" << w->first << ")\n";
    const auto failing = report.failing_claims();
    if (!failing.empty()) out << "failing claims " << join(failing, " ") << "\n";
    out << "result " << (report.verified ? "VERIFIED" : "NOT VERIFIED") << "\n";
}

ojson report_to_json(const VerificationReport& report) {
    ojson j;
    j["format"] = "sigcheck-report";
    j["version"] = 1;
    j["script"] = report.script_name;
    j["params"] = {{"p", report.params.p}, {"q", report.params.q}};
    j["tolerance"] = {{"eps", report.tolerance.eps}, {"paranoid", report.tolerance.paranoid}};
    j["verified"] = report.verified;

    ojson claims = ojson::array();
    for (const auto& r : report.claims) {
        ojson c;
        c["id"] = r.id;
        c["kind"] = to_string(r.kind);
        c["verdict"] = to_string(r.verdict);
        c["message"] = r.message;
        c["min_sum"] = opt(r.min_sum);
        c["margin"] = opt(r.margin);
        c["printed_margin"] = opt(r.expected_margin);
        c["method"] = r.method ? ojson(to_string(*r.method)) : ojson(nullptr);
        c["composition"] = r.composition ? composition_json(*r.composition) : ojson(nullptr);
        c["witness"] = r.witness;
        c["capacity"] = opt(r.capacity);
        c["covers"] = r.covers ? ojson::array({r.covers->first, r.covers->second}) : ojson(nullptr);
        c["derivation"] = r.derivation;
        c["failed_dependencies"] = r.failed_dependencies;
        ojson phis = ojson::array();
        for (const auto& p : r.phis) {
            phis.push_back({{"between", {p.a, p.b}},
                            {"printed", p.printed},
                            {"printed_as", p.printed_as},
                            {"recomputed", p.recomputed},
                            {"matches", p.matches}});
        }
        c["phis"] = std::move(phis);
        ojson sums = ojson::array();
        for (const auto& s : r.sums) {
            sums.push_back({{"what", s.what},
                            {"kind", s.kind == PrintedSum::Kind::Equals ? "equals" : "lower_bound"},
                            {"printed", s.printed},
                            {"recomputed", s.recomputed},
                            {"terms_total", opt(s.terms_total)},
                            {"matches", s.matches}});
        }
        c["sums"] = std::move(sums);
        claims.push_back(std::move(c));
    }
    j["claims"] = std::move(claims);

    ojson cov;
    cov["passed"] = report.coverage.passed;
    cov["grid_points"] = report.coverage.grid_points;
    ojson pairs = ojson::array();
    for (const auto& p : report.coverage.verified) pairs.push_back(ojson::array({p.first, p.second}));
    cov["impossible_pairs"] = std::move(pairs);
    pairs = ojson::array();
    for (const auto& p : report.coverage.uncovered) pairs.push_back(ojson::array({p.first, p.second}));
    cov["uncovered"] = std::move(pairs);
    j["coverage"] = std::move(cov);

    ojson ds = ojson::array();
    for (const auto& d : report.discrepancies()) ds.push_back(discrepancy_json(d));
    j["discrepancies"] = std::move(ds);
    j["failing_claims"] = report.failing_claims();
    if (const auto w = report.worst_margin()) {
        j["smallest_margin"] = {{"claim", w->first}, {"margin", w->second}};
    } else {
        j["smallest_margin"] = nullptr;
    }
    return j;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "p,verified,failing_count,failing,worst_claim,worst_margin\n";
    for (const auto& r : rows) {
        out << format_double(r.p) << ',' << (r.verified ? 1 : 0) << ',' << r.failing.size() << ',' << join(r.failing, ";")
            << ',' << r.worst_claim << ',' << (r.worst_margin ? format_angle(*r.worst_margin) : "") << '\n';
    }
}

ojson sweep_to_json(const std::vector<SweepRow>& rows, double lo, double hi, double step) {
    ojson j;
    j["format"] = "sigcheck-sweep";
    j["version"] = 1;
    j["from"] = lo;
    j["to"] = hi;
    j["step"] = step;
    ojson arr = ojson::array();
    for (const auto& r : rows) {
        arr.push_back({{"p", r.p},
                       {"verified", r.verified},
                       {"failing", r.failing},
                       {"worst_claim", r.worst_claim},
                       {"worst_margin", opt(r.worst_margin)}});
    }
    j["rows"] = std::move(arr);
    return j;
}

void write_graph_summary(std::ostream& out, const GraphSummary& s) {
    out << "# vertices " << s.n << "\n";
    out << "# closed edges " << s.closed_edges << "\n";
    out << "# open edges " << s.open_edges << "\n";
    out << "# edges per vertex " << fixed(s.edge_ratio(), 4) << "\n";
    out << "# degree histogram " << histogram_text(s.degree_histogram) << "\n";
    out << "# max out-weight " << fixed(s.max_out_weight, 1) << " (vertex " << s.argmax << ")\n";
    out << "# smallest-ball vertex " << s.smallest_vertex << " degree " << s.smallest_vertex_degree << "\n";
    out << "# edge bound closed edges <= 14.5 n: " << (s.edge_bound_ok() ? "pass" : "FAIL") << "\n";
    out << "# out-weight bound <= 14.5: " << (s.max_out_weight <= kOutWeightBound ? "pass" : "FAIL") << "\n";
    out << "# local hypotheses at vertex " << s.argmax << ": " << (s.reduction_ok ? "pass" : "FAIL") << "\n";
    for (const auto& f : s.reduction_failures) out << "#   " << f << "\n";
}

ojson graph_summary_to_json(const GraphSummary& s) {
    ojson j;
    j["n"] = s.n;
    j["closed_edges"] = s.closed_edges;
    j["open_edges"] = s.open_edges;
    j["edges_per_vertex"] = s.edge_ratio();
    j["degree_histogram"] = histogram_json(s.degree_histogram);
    j["max_out_weight"] = s.max_out_weight;
    j["argmax"] = s.argmax;
    j["smallest_vertex"] = s.smallest_vertex;
    j["smallest_vertex_degree"] = s.smallest_vertex_degree;
    j["edge_bound_ok"] = s.edge_bound_ok();
    j["out_weight_ok"] = s.max_out_weight <= kOutWeightBound;
    j["reduction_ok"] = s.reduction_ok;
    j["reduction_failures"] = s.reduction_failures;
    return j;
}

void write_lattice_summary(std::ostream& out, const LatticeSummary& s) {
    out << "# lattice " << s.rows << " x " << s.cols << " spacing " << format_double(s.spacing) << "\n";
    write_graph_summary(out, s.graph);
    out << "# interior vertices (" << s.rings << " rings in) " << s.interior.size() << "\n";
    out << "# interior degree histogram " << histogram_text(s.interior_histogram) << "\n";
    out << "# interior edges per vertex " << fixed(s.interior_ratio(), 4) << "\n";
}

ojson lattice_summary_to_json(const LatticeSummary& s) {
    ojson j;
    j["rows"] = s.rows;
    j["cols"] = s.cols;
    j["spacing"] = s.spacing;
    j["rings"] = s.rings;
    j["graph"] = graph_summary_to_json(s.graph);
    j["interior_vertices"] = s.interior.size();
    j["interior_degree_histogram"] = histogram_json(s.interior_histogram);
    j["interior_edges_per_vertex"] = s.interior_ratio();
    return j;
}

void write_experiment_text(std::ostream& out, const ExperimentResult& r) {
    const ExperimentConfig& c = r.config;
    out << "experiment trials " << c.trials << " n " << c.n << " seed " << c.seed << " side " << format_double(c.side)
        << " p " << format_double(c.params.p) << "\n";
    out << "max out-weight " << fixed(r.max_out_weight, 1);
    if (r.max_out_weight_trial >= 0) {
        out << " (trial " << r.max_out_weight_trial << ", seed " << r.trials[static_cast<std::size_t>(r.max_out_weight_trial)].seed
            << ")";
    }
    out << "\n";
    out << "max edges per vertex " << fixed(r.max_edge_ratio, 4) << "\n";
    out << "max smallest-ball vertex degree " << r.max_smallest_vertex_degree << "\n";
    auto line = [&](const char* what, int violations) {
        out << what << ": " << (violations == 0 ? "pass" : "FAIL") << " (" << violations << " violations)\n";
    };
    line("closed edges <= 14.5 n", r.edge_bound_violations);
    line("max out-weight <= 14.5", r.out_weight_violations);
    line("smallest-ball vertex degree <= 29", r.degree_violations);
    line("local hypotheses at the heaviest vertex", r.reduction_violations);
    out << "result " << (r.passed() ? "PASS" : "FAIL") << "\n";
}

ojson experiment_to_json(const ExperimentResult& r) {
    const ExperimentConfig& c = r.config;
    ojson j;
    j["format"] = "sigcheck-experiment";
    j["version"] = 1;
    j["config"] = {{"trials", c.trials}, {"n", c.n}, {"seed", c.seed}, {"side", c.side}, {"p", c.params.p}};
    j["max_out_weight"] = r.max_out_weight;
    j["max_out_weight_trial"] = r.max_out_weight_trial;
    j["max_edges_per_vertex"] = r.max_edge_ratio;
    j["max_smallest_vertex_degree"] = r.max_smallest_vertex_degree;
    j["violations"] = {{"edge_bound", r.edge_bound_violations},
                       {"out_weight", r.out_weight_violations},
                       {"smallest_vertex_degree", r.degree_violations},
                       {"local_hypotheses", r.reduction_violations}};
    j["passed"] = r.passed();
    ojson trials = ojson::array();
    for (const auto& t : r.trials) {
        trials.push_back({{"trial", t.trial},
                          {"seed", t.seed},
                          {"closed_edges", t.graph.closed_edges},
                          {"open_edges", t.graph.open_edges},
                          {"max_out_weight", t.graph.max_out_weight},
                          {"smallest_vertex_degree", t.graph.smallest_vertex_degree}});
    }
    j["trials"] = std::move(trials);
    return j;
}

}  // namespace sigcheck
