// sigcheck: verify the 14.5n edge-bound case analysis and experiment with
// sphere-of-influence graphs.
//
//   sigcheck verify [--p P] [--script FILE] [--dump-script] [--format text|json] [--paranoid]
//   sigcheck sweep --from A --to B --step S [--format csv|json]
//   sigcheck sig [FILE|-] [--closed|--open] [--summary-only]
//   sigcheck lattice --rows R --cols C [--spacing S] [--report]
//   sigcheck experiment --trials T --n N --seed S [--p P] [--format text|json]
//
// Exit codes: 0 ok, 1 refused, 2 usage or structural error, 3 I/O error.

#include "sigcheck/cli.h"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace cli = sigcheck::cli;

int main(int argc, char** argv) {
    CLI::App app{"Sphere-of-influence graph edge-bound checker"};
    app.require_subcommand(1);

    const std::map<std::string, cli::Format> text_json{{"text", cli::Format::Text}, {"json", cli::Format::Json}};
    const std::map<std::string, cli::Format> csv_json{{"csv", cli::Format::Csv}, {"json", cli::Format::Json}};

    cli::VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Check the built-in (or a given) proof script");
    v->add_option("--p", verify.p, "Weight threshold p (q = 1/p)")->capture_default_str();
    v->add_option("--script", verify.script, "Proof script JSON file");
    v->add_flag("--dump-script", verify.dump_script, "Print the script as JSON and exit");
    v->add_flag("--paranoid", verify.paranoid, "Lower every pair bound by 1e-9 degrees");
    v->add_option("--format", verify.format, "text or json")->transform(CLI::CheckedTransformer(text_json, CLI::ignore_case));

    cli::SweepOptions sweep;
    auto* s = app.add_subcommand("sweep", "Re-check the script over a grid of p values");
    s->add_option("--from", sweep.from, "First p")->required();
    s->add_option("--to", sweep.to, "Last p")->required();
    s->add_option("--step", sweep.step, "Grid step")->required();
    s->add_option("--script", sweep.script, "Proof script JSON file");
    s->add_option("--threads", sweep.threads, "Workers (0: SIGCHECK_THREADS or all cores)");
    s->add_flag("--paranoid", sweep.paranoid, "Lower every pair bound by 1e-9 degrees");
    s->add_option("--format", sweep.format, "csv or json")->transform(CLI::CheckedTransformer(csv_json, CLI::ignore_case));

    cli::SigOptions sig;
    auto* g = app.add_subcommand("sig", "Build the sphere-of-influence graph of a point file");
    g->add_option("input", sig.input, "Point file, '-' for stdin")->capture_default_str();
    auto* closed = g->add_flag_callback("--closed", [&] { sig.variant = sigcheck::SigVariant::Closed; }, "Closed graph (default)");
    auto* open = g->add_flag_callback("--open", [&] { sig.variant = sigcheck::SigVariant::Open; }, "Open graph");
    closed->excludes(open);
    g->add_option("--p", sig.p, "Weight threshold p for the out-weight profile")->capture_default_str();
    g->add_flag("--summary-only", sig.summary_only, "Omit radii, edges and out-weights");
    g->add_option("--format", sig.format, "text or json")->transform(CLI::CheckedTransformer(text_json, CLI::ignore_case));

    cli::LatticeOptions lattice;
    auto* l = app.add_subcommand("lattice", "Emit a triangular lattice point set");
    l->add_option("--rows", lattice.rows, "Rows")->required();
    l->add_option("--cols", lattice.cols, "Columns")->required();
    l->add_option("--spacing", lattice.spacing, "Lattice spacing")->capture_default_str();
    l->add_flag("--report", lattice.report, "Print degree statistics instead of points");
    l->add_option("--rings", lattice.rings, "Boundary rows/columns excluded from the interior")->capture_default_str();
    l->add_option("--p", lattice.p, "Weight threshold p")->capture_default_str();
    l->add_option("--format", lattice.format, "text or json")->transform(CLI::CheckedTransformer(text_json, CLI::ignore_case));

    cli::ExperimentOptions exp;
    auto* e = app.add_subcommand("experiment", "Random point sets: edge, out-weight and degree bounds");
    e->add_option("--trials", exp.trials, "Number of point sets")->required();
    e->add_option("--n", exp.n, "Points per set")->required();
    e->add_option("--seed", exp.seed, "Base seed")->required();
    e->add_option("--side", exp.side, "Square side")->capture_default_str();
    e->add_option("--p", exp.p, "Weight threshold p")->capture_default_str();
    e->add_option("--threads", exp.threads, "Workers (0: SIGCHECK_THREADS or all cores)");
    e->add_option("--format", exp.format, "text or json")->transform(CLI::CheckedTransformer(text_json, CLI::ignore_case));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::CallForAllHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return cli::kExitUsage;
    }

    std::ios::sync_with_stdio(false);
    if (v->parsed()) return cli::cmd_verify(verify, std::cout, std::cerr);
    if (s->parsed()) return cli::cmd_sweep(sweep, std::cout, std::cerr);
    if (g->parsed()) return cli::cmd_sig(sig, std::cin, std::cout, std::cerr);
    if (l->parsed()) return cli::cmd_lattice(lattice, std::cout, std::cerr);
    return cli::cmd_experiment(exp, std::cout, std::cerr);
}
