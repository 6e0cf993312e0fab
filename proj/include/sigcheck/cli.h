#pragma once

// Command implementations behind the sigcheck executable. Each returns the
// process exit code and writes only to the given streams.

#include "sigcheck/bounds.h"
#include "sigcheck/geometry.h"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace sigcheck::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitRefused = 1,     ///< verification refused / empirical check failed
    kExitUsage = 2,       ///< bad flags, malformed input, structural script error
    kExitIo = 3,
};

enum class Format { Text, Json, Csv };

struct VerifyOptions {
    double p = 1.409;
    std::string script;  ///< empty: built-in script
    bool dump_script = false;
    bool paranoid = false;
    Format format = Format::Text;
};

struct SweepOptions {
    double from = 1.408;
    double to = 1.410;
    double step = 0.001;
    std::string script;
    bool paranoid = false;
    unsigned threads = 0;
    Format format = Format::Csv;
};

struct SigOptions {
    std::string input = "-";  ///< "-" reads the given input stream
    SigVariant variant = SigVariant::Closed;
    double p = 1.409;
    bool summary_only = false;
    Format format = Format::Text;
};

struct LatticeOptions {
    int rows = 20;
    int cols = 20;
    double spacing = 1.0;
    bool report = false;  ///< summary instead of the point list
    int rings = 3;
    double p = 1.409;
    Format format = Format::Text;
};

struct ExperimentOptions {
    int trials = 100;
    int n = 50;
    std::uint64_t seed = 1;
    double side = 1.0;
    double p = 1.409;
    unsigned threads = 0;
    Format format = Format::Text;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err);
int cmd_sig(const SigOptions& opt, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_lattice(const LatticeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_experiment(const ExperimentOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace sigcheck::cli
