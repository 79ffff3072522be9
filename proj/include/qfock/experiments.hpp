#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfock/quaternion.hpp"

namespace qfock {

// Raised for malformed configs, unknown experiment names, or missing input
// files; the CLI maps it to its own exit code, distinct from check
// failures.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parsed experiment configuration:
//   {"experiment": "...", "output_dir": "...", "seed": 1,
//    "params": {"alpha": 1.0, ...}, "inputs": {"measure": "path", ...}}
// Unknown top-level keys, non-numeric params, and keys an experiment does
// not accept are config errors.
struct RunConfig {
    std::string experiment;
    std::string output_dir = "out";
    std::uint64_t seed = 1;
    std::map<std::string, double> params;
    std::map<std::string, std::string> inputs;

    double param(const std::string& name, double fallback) const;
    std::string input(const std::string& name) const;  // "" when absent
};

RunConfig parse_config_json(const std::string& text);
RunConfig load_config_file(const std::string& path);

// Deterministic random source.  Values are produced from the raw engine
// output (not std:: distributions), so identical seeds give identical
// streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform(double lo, double hi);
    Quaternion quaternion(double scale);   // components uniform in [-scale, scale]
    ImaginaryUnit unit();                  // uniform direction
    int index(int n);                      // uniform in [0, n)

private:
    std::mt19937_64 engine_;
};

struct CheckRecord {
    std::string name;
    double observed = 0.0;
    double limit = 0.0;
    bool pass = false;
};

// Collects pass/fail checks and CSV tables for one experiment run, then
// writes <dir>/<experiment>-<table>.csv files and a
// <dir>/<experiment>-verdict.json summary.  All numbers go through one
// fixed formatter so outputs are byte-stable run to run.
class ExperimentReport {
public:
    ExperimentReport(std::string experiment, std::string output_dir);

    // observed <= limit passes.  Returns the pass flag.
    bool check(const std::string& name, double observed, double limit);
    // Lower bound form: observed >= floor passes.
    bool check_at_least(const std::string& name, double observed, double floor);
    bool check_true(const std::string& name, bool pass);

    // Declare a CSV table (writes the header line once) and append rows.
    void table(const std::string& name, const std::string& header);
    void row(const std::string& name, const std::vector<std::string>& cells);

    // Free-form key/value facts recorded into the verdict file.
    void note(const std::string& key, const std::string& value);

    int failed() const;
    const std::vector<CheckRecord>& checks() const { return checks_; }
    const std::string& output_dir() const { return output_dir_; }

    // Writes the verdict JSON (including the config echo) and flushes all
    // tables.  Called once by the runner.
    void finalize(const RunConfig& cfg);

private:
    std::string experiment_;
    std::string output_dir_;
    std::vector<CheckRecord> checks_;
    std::map<std::string, std::ofstream> tables_;
    std::vector<std::pair<std::string, std::string>> notes_;
};

// Fixed decimal formatting used for every CSV/JSON number ("%.12g").
std::string format_double(double v);

struct ExperimentSpec {
    std::string name;
    std::string summary;
    std::vector<std::string> params;   // accepted numeric parameters
    std::vector<std::string> inputs;   // accepted input-file keys
    void (*run)(const RunConfig&, ExperimentReport&);
};

// Experiment groups, one per implementation unit; the catalog is their
// concatenation in a fixed order.
std::vector<ExperimentSpec> core_experiments();
std::vector<ExperimentSpec> measure_experiments();
std::vector<ExperimentSpec> berezin_experiments();
std::vector<ExperimentSpec> toeplitz_experiments();

const std::vector<ExperimentSpec>& experiment_catalog();

// Runs one experiment end to end: validates the config against the
// experiment's accepted params/inputs, applies the QFOCK_OUTPUT_DIR
// override, executes, writes tables and the verdict file, and returns the
// number of failed checks.  When log is non-null, one line per check and a
// final summary are written to it.

// One-per-line name + summary, or a machine-readable JSON array.
std::string catalog_listing(bool as_json);

// Runs one experiment.  Returns the number of failed checks (0 = all
// green).  Throws ConfigError for unknown names (the message carries a
// nearest-match suggestion) and config/schema problems.  The environment
// variable QFOCK_OUTPUT_DIR overrides the config's output directory.
int run_experiment(const RunConfig& cfg, std::ostream* log = nullptr);

}  // namespace qfock
