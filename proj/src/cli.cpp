#include "sigcheck/cli.h"

#include "sigcheck/errors.h"
#include "sigcheck/experiment.h"
#include "sigcheck/point_io.h"
#include "sigcheck/proofcheck.h"
#include "sigcheck/report.h"
#include "sigcheck/script.h"

#include <istream>
#include <ostream>

namespace sigcheck::cli {

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const IoError& e) {
        err << "sigcheck: I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ParseError& e) {
        err << "sigcheck: parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const StructuralError& e) {
        err << "sigcheck: structural error in " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "sigcheck: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "sigcheck: " << e.what() << "\n";
        return kExitUsage;
    }
}

ProofScript script_for(const std::string& path) { return path.empty() ? builtin_paper_script() : load_script(path); }

void dump(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ProofScript script = script_for(opt.script);
        if (opt.dump_script) {
            validate_script(script);
            dump(out, to_json(script));
            return int{kExitOk};
        }
        const Params params = Params::from_p(opt.p);
        Tolerance tol;
        tol.paranoid = opt.paranoid;
        const VerificationReport report = verify_script(script, params, tol);
        if (opt.format == Format::Json) {
            dump(out, report_to_json(report));
        } else {
            write_text_report(out, report);
        }
        if (report.verified) return int{kExitOk};
        if (report.has_errors()) {
            for (const auto& r : report.claims) {
                if (r.verdict == Verdict::Error) err << "sigcheck: claim " << r.id << ": " << r.message << "\n";
            }
            return int{kExitUsage};
        }
        return int{kExitRefused};
    });
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ProofScript script = script_for(opt.script);
        Tolerance tol;
        tol.paranoid = opt.paranoid;
        const auto rows = sweep_p(script, opt.from, opt.to, opt.step, tol, opt.threads);
        if (opt.format == Format::Json) {
            dump(out, sweep_to_json(rows, opt.from, opt.to, opt.step));
        } else {
            write_sweep_csv(out, rows);
        }
        return int{kExitOk};
    });
}

int cmd_sig(const SigOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Params params = Params::from_p(opt.p);
        const PointSet ps = opt.input == "-" ? read_points(in) : read_points_file(opt.input);
        const InfluenceGraph g = build_sig(ps, opt.variant);
        const OutWeightProfile prof = out_weight_profile(wsig(ps, params));
        const GraphSummary s = summarize(ps, params);

        if (opt.format == Format::Json) {
            nlohmann::ordered_json j;
            j["format"] = "sigcheck-graph";
            j["version"] = 1;
            j["variant"] = to_string(opt.variant);
            j["p"] = params.p;
            j["n"] = ps.size();
            j["edge_count"] = g.edges.size();
            if (!opt.summary_only) {
                j["radii"] = g.radii;
                nlohmann::ordered_json edges = nlohmann::ordered_json::array();
                for (const auto& [a, b] : g.edges) edges.push_back({a, b});
                j["edges"] = std::move(edges);
                j["out_weight"] = prof.out_weight;
            }
            j["summary"] = graph_summary_to_json(s);
            dump(out, j);
        } else {
            if (!opt.summary_only) {
                write_graph(out, g);
                for (std::size_t i = 0; i < prof.out_weight.size(); ++i) {
                    out << "w " << i << ' ' << format_double(prof.out_weight[i]) << '\n';
                }
            }
            write_graph_summary(out, s);
        }
        return int{s.edge_bound_ok() ? kExitOk : kExitRefused};
    });
}

int cmd_lattice(const LatticeOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!opt.report) {
            const PointSet ps = hex_lattice(opt.rows, opt.cols, opt.spacing);
            out << "# hex lattice " << opt.rows << " x " << opt.cols << " spacing " << format_double(opt.spacing) << "\n";
            write_points(out, ps);
            return int{kExitOk};
        }
        const LatticeSummary s = lattice_summary(opt.rows, opt.cols, opt.spacing, opt.rings, Params::from_p(opt.p));
        if (opt.format == Format::Json) {
            dump(out, lattice_summary_to_json(s));
        } else {
            write_lattice_summary(out, s);
        }
        return int{kExitOk};
    });
}

int cmd_experiment(const ExperimentOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        ExperimentConfig cfg;
        cfg.trials = opt.trials;
        cfg.n = opt.n;
        cfg.seed = opt.seed;
        cfg.side = opt.side;
        cfg.params = Params::from_p(opt.p);
        cfg.threads = opt.threads;
        const ExperimentResult r = run_experiment(cfg);
        if (opt.format == Format::Json) {
            dump(out, experiment_to_json(r));
        } else {
            write_experiment_text(out, r);
        }
        return int{r.passed() ? kExitOk : kExitRefused};
    });
}

}  // namespace sigcheck::cli
