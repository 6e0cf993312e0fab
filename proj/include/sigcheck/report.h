#pragma once

// Text, JSON and CSV renderings of verification reports, sweeps and
// geometry summaries. Outputs carry no timestamps, so identical inputs give
// byte-identical outputs.

#include "sigcheck/experiment.h"
#include "sigcheck/proofcheck.h"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace sigcheck {

/// Degrees, fixed with 4 decimals.
std::string format_angle(double deg);

void write_text_report(std::ostream& out, const VerificationReport& report);
nlohmann::ordered_json report_to_json(const VerificationReport& report);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
nlohmann::ordered_json sweep_to_json(const std::vector<SweepRow>& rows, double lo, double hi, double step);

/// Summary lines, each starting with "# " so they can follow a graph listing.
void write_graph_summary(std::ostream& out, const GraphSummary& s);
nlohmann::ordered_json graph_summary_to_json(const GraphSummary& s);

void write_lattice_summary(std::ostream& out, const LatticeSummary& s);
nlohmann::ordered_json lattice_summary_to_json(const LatticeSummary& s);

void write_experiment_text(std::ostream& out, const ExperimentResult& r);
nlohmann::ordered_json experiment_to_json(const ExperimentResult& r);

}  // namespace sigcheck
