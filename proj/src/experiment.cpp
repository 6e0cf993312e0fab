#include "sigcheck/experiment.h"

#include "sigcheck/errors.h"
#include "sigcheck/proofcheck.h"

#include <algorithm>
#include <exception>
#include <thread>

namespace sigcheck {

GraphSummary summarize(const PointSet& ps, const Params& params) {
    const InfluenceGraph closed = build_sig(ps, SigVariant::Closed);
    const InfluenceGraph open = build_sig(ps, SigVariant::Open);
    const OutWeightProfile prof = out_weight_profile(wsig(closed, params));

    GraphSummary s;
    s.n = static_cast<int>(ps.size());
    s.closed_edges = static_cast<int>(closed.edges.size());
    s.open_edges = static_cast<int>(open.edges.size());
    s.max_out_weight = prof.max_out_weight;
    s.argmax = prof.argmax;
    const std::vector<int> deg = closed.degrees();
    for (int d : deg) ++s.degree_histogram[d];
    s.smallest_vertex = smallest_radius_vertex(closed.radii);
    s.smallest_vertex_degree = deg[static_cast<std::size_t>(s.smallest_vertex)];

    const HypothesisCheck hc = check_local_hypotheses(local_configuration(ps, s.argmax, params), params);
    s.reduction_ok = hc.ok;
    s.reduction_failures = hc.failures;
    return s;
}

double LatticeSummary::interior_ratio() const {
    return interior.empty() ? 0.0 : interior_degree_sum / 2.0 / static_cast<double>(interior.size());
}

LatticeSummary lattice_summary(int rows, int cols, double spacing, int rings, const Params& params) {
    if (rings < 0) throw DomainError("lattice_summary: rings must be >= 0");
    const PointSet ps = hex_lattice(rows, cols, spacing);
    LatticeSummary s;
    s.rows = rows;
    s.cols = cols;
    s.spacing = spacing;
    s.rings = rings;
    s.graph = summarize(ps, params);
    s.interior = hex_interior(rows, cols, rings);
    const std::vector<int> deg = build_sig(ps, SigVariant::Closed).degrees();
    for (int v : s.interior) {
        const int d = deg[static_cast<std::size_t>(v)];
        ++s.interior_histogram[d];
        s.interior_degree_sum += d;
    }
    return s;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial)));
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    if (config.trials < 1) throw DomainError("experiment: trials must be >= 1");
    if (config.n < 2) throw DomainError("experiment: n must be >= 2");

    ExperimentResult res;
    res.config = config;
    res.trials.resize(static_cast<std::size_t>(config.trials));

    auto run = [&](std::size_t i) {
        TrialResult& t = res.trials[i];
        t.trial = static_cast<int>(i);
        t.seed = trial_seed(config.seed, t.trial);
        t.graph = summarize(random_points(config.n, t.seed, config.side), config.params);
    };

    const std::size_t total = res.trials.size();
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(config.threads == 0 ? default_thread_count() : config.threads, total));
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) run(i);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < total; i += workers) run(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    for (const auto& t : res.trials) {
        const GraphSummary& g = t.graph;
        if (res.max_out_weight_trial < 0 || g.max_out_weight > res.max_out_weight) {
            res.max_out_weight = g.max_out_weight;
            res.max_out_weight_trial = t.trial;
        }
        res.max_edge_ratio = std::max(res.max_edge_ratio, g.edge_ratio());
        res.max_smallest_vertex_degree = std::max(res.max_smallest_vertex_degree, g.smallest_vertex_degree);
        if (!g.edge_bound_ok()) ++res.edge_bound_violations;
        if (g.max_out_weight > kOutWeightBound) ++res.out_weight_violations;
        if (g.smallest_vertex_degree > kSmallestVertexDegreeBound) ++res.degree_violations;
        if (!g.reduction_ok) ++res.reduction_violations;
    }
    return res;
}

}  // namespace sigcheck
