#pragma once

// Empirical checks of the per-vertex weight bound and the global edge bound
// on generated point sets.

#include "sigcheck/geometry.h"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sigcheck {

inline constexpr double kEdgeBoundPerVertex = 14.5;
inline constexpr double kOutWeightBound = 14.5;
inline constexpr int kSmallestVertexDegreeBound = 29;

/// Summary of one point set.
struct GraphSummary {
    int n = 0;
    int closed_edges = 0;
    int open_edges = 0;
    double max_out_weight = 0.0;
    int argmax = -1;
    int smallest_vertex = -1;
    int smallest_vertex_degree = 0;
    std::map<int, int> degree_histogram;  ///< closed degrees
    bool reduction_ok = true;             ///< local hypotheses at the argmax vertex
    std::vector<std::string> reduction_failures;

    double edge_ratio() const { return n > 0 ? static_cast<double>(closed_edges) / n : 0.0; }
    bool edge_bound_ok() const { return closed_edges <= kEdgeBoundPerVertex * n; }
};

GraphSummary summarize(const PointSet& ps, const Params& params);

struct LatticeSummary {
    int rows = 0;
    int cols = 0;
    double spacing = 1.0;
    int rings = 3;
    GraphSummary graph;
    std::vector<int> interior;              ///< vertex ids
    std::map<int, int> interior_histogram;  ///< closed degrees of interior vertices
    int interior_degree_sum = 0;

    /// Half the interior degree sum per interior vertex (9 on the lattice).
    double interior_ratio() const;
};

LatticeSummary lattice_summary(int rows, int cols, double spacing = 1.0, int rings = 3,
                               const Params& params = {});

/// splitmix64 step; trial i uses trial_seed(seed, i).
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t trial_seed(std::uint64_t seed, int trial);

struct ExperimentConfig {
    int trials = 100;
    int n = 50;
    std::uint64_t seed = 1;
    double side = 1.0;
    Params params;
    unsigned threads = 1;  ///< 0: SIGCHECK_THREADS or hardware concurrency
};

struct TrialResult {
    int trial = 0;
    std::uint64_t seed = 0;
    GraphSummary graph;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<TrialResult> trials;  ///< trial order

    double max_out_weight = 0.0;
    int max_out_weight_trial = -1;
    double max_edge_ratio = 0.0;
    int max_smallest_vertex_degree = 0;
    int edge_bound_violations = 0;
    int out_weight_violations = 0;
    int degree_violations = 0;
    int reduction_violations = 0;

    bool passed() const {
        return edge_bound_violations == 0 && out_weight_violations == 0 && degree_violations == 0 &&
               reduction_violations == 0;
    }
};

ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace sigcheck
