#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weyl/checks.hpp"

namespace weyl {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_output_format(const std::string& name);  // throws Error

// Resolved configuration for one verify/sweep run. Flags override config-file
// values which override these defaults.
struct RunConfig {
    RepKind rep = RepKind::PeriodicGrid;
    int dim = 32;
    double hbar = 1.0;
    double spacing = 1.0;
    std::uint64_t seed = 12345;
    OutputFormat format = OutputFormat::Text;
    std::vector<std::string> suites;           // empty selects the rep defaults
    std::map<std::string, double> tolerances;  // keyed by report name
    int slack_states = 200;                    // uncertainty batch size

    void validate() const;  // throws Error / InvalidDimension
};

RepKind parse_rep_kind(const std::string& name);  // throws Error

std::vector<std::string> known_suites();
std::vector<std::string> default_suites(RepKind rep);
bool suite_available(const std::string& suite, RepKind rep);

// Known tolerance-override keys (report names).
std::vector<std::string> known_tolerance_keys();

// Flat "key = value" config file; '#' starts a comment; unknown keys are an
// error.
void apply_config_file(RunConfig& config, const std::string& path);

// Runs the selected suites in declaration order; deterministic for a fixed
// (config, seed).
std::vector<CheckReport> run_suites(const RunConfig& config);

bool all_asserted_pass(const std::vector<CheckReport>& reports);

struct SweepRow {
    int dim = 0;
    double spacing = 0.0;  // grid spacing, or the widest X eigenvalue gap on Fock
    std::vector<std::pair<std::string, double>> deviations;
};

// Per-dim deviation table at fixed box length (grid) or fixed hbar (Fock).
std::vector<SweepRow> run_sweep(const RunConfig& config, const std::vector<int>& dims,
                                double box_length);

// Deterministic rendering; doubles are serialized with 17 significant digits.
std::string render_reports(const std::vector<CheckReport>& reports, OutputFormat format);
std::string render_sweep(const std::vector<SweepRow>& rows, OutputFormat format);

std::string format_double_17(double v);

}  // namespace weyl
